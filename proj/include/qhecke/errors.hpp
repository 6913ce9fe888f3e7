#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qhecke {

// Bad argument: value outside the operation's domain.
struct domain_error : std::invalid_argument {
  explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Size guard exceeded on an enumeration-heavy operation.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A verification that is expected to hold failed; aborting loudly is the
// contract for these (a silent fallback would mask a real defect).
struct certificate_error : std::runtime_error {
  explicit certificate_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency check failed (would indicate a bug, not bad input).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// Returns the active size guard: QHECKE_MAX_N overrides the per-op default.
inline int size_guard(int default_limit) {
  if (const char* env = std::getenv("QHECKE_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return default_limit;
}

inline void check_guard(int n, int default_limit, const char* what) {
  int lim = size_guard(default_limit);
  if (n > lim)
    throw resource_error(std::string(what) + ": size " + std::to_string(n) +
                         " exceeds guard " + std::to_string(lim) +
                         " (set QHECKE_MAX_N to raise)");
}

}  // namespace qhecke
