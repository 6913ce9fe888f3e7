#include "qhecke/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qhecke/errors.hpp"

namespace qhecke {

int Composition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Composition::part(int i) const {
  if (i < 1) throw domain_error("Composition::part: index must be >= 1");
  return i <= length() ? parts[i - 1] : 0;
}

std::vector<Cell> diagram(const Composition& a) {
  std::vector<Cell> cells;
  cells.reserve(a.size());
  for (int i = 1; i <= a.length(); ++i)
    for (int j = 1; j <= a.parts[i - 1]; ++j) cells.push_back({i, j});
  return cells;
}

bool in_diagram(const Composition& a, int row, int col) {
  return row >= 1 && row <= a.length() && col >= 1 && col <= a.parts[row - 1];
}

std::vector<int> set_of(const Composition& a) {
  std::vector<int> s;
  int acc = 0;
  for (int i = 0; i + 1 < a.length(); ++i) {
    acc += a.parts[i];
    s.push_back(acc);
  }
  return s;
}

Composition comp_of(const std::vector<int>& I, int n) {
  std::vector<int> sorted(I);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int x : sorted)
    if (x < 1 || x > n - 1)
      throw domain_error("comp_of: element " + std::to_string(x) +
                         " outside [1," + std::to_string(n - 1) + "]");
  std::vector<int> parts;
  int prev = 0;
  for (int x : sorted) {
    parts.push_back(x - prev);
    prev = x;
  }
  if (n - prev > 0) parts.push_back(n - prev);
  return Composition(parts);
}

Composition reverse_comp(const Composition& a) {
  std::vector<int> p(a.parts.rbegin(), a.parts.rend());
  return Composition(p);
}

Composition complement(const Composition& a) {
  int n = a.size();
  std::vector<int> s = set_of(a);
  std::vector<int> comp;
  std::size_t k = 0;
  for (int x = 1; x <= n - 1; ++x) {
    if (k < s.size() && s[k] == x) {
      ++k;
    } else {
      comp.push_back(x);
    }
  }
  return comp_of(comp, n);
}

Composition lambda_sort(const Composition& a) {
  std::vector<int> p = a.parts;
  std::sort(p.begin(), p.end(), std::greater<>());
  return Composition(p);
}

bool is_partition(const Composition& a) {
  return std::is_sorted(a.parts.begin(), a.parts.end(), std::greater_equal<>()) ||
         std::is_sorted(a.parts.rbegin(), a.parts.rend());
}

bool is_shuffle_of_partition_and_ones(const Composition& a) {
  int prev = -1;
  for (int p : a.parts) {
    if (p < 2) continue;
    if (prev != -1 && p > prev) return false;
    prev = p;
  }
  return true;
}

bool is_simple(const Composition& a) {
  int l = a.length();
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) {
      if (!(a.parts[i - 1] >= a.parts[j - 1] && a.parts[j - 1] >= 2)) continue;
      bool found = false;
      for (int k = i + 1; k < j; ++k)
        if (a.parts[k - 1] == a.parts[j - 1] - 1) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

std::strong_ordering cmp_lex(const Composition& a, const Composition& b) {
  return a.parts <=> b.parts;
}

bool dominance_lt(const Composition& lam, const Composition& mu) {
  if (!is_partition(lam) || !is_partition(mu))
    throw domain_error("dominance_lt: arguments must be partitions");
  if (lam.size() != mu.size())
    throw domain_error("dominance_lt: partitions of unequal size");
  if (lam == mu) return false;
  int l = std::max(lam.length(), mu.length());
  int sl = 0, sm = 0;
  for (int i = 1; i <= l; ++i) {
    sl += lam.part(i);
    sm += mu.part(i);
    if (sl > sm) return false;
  }
  return true;
}

std::strong_ordering cmp_set(const std::vector<int>& A, const std::vector<int>& B) {
  if (A.size() != B.size()) return A.size() <=> B.size();
  return A <=> B;
}

std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // One composition per subset of [n-1].
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> I;
    for (int i = 1; i <= n - 1; ++i)
      if (mask & (1u << (i - 1))) I.push_back(i);
    out.push_back(comp_of(I, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

static void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                           std::vector<Composition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Composition> all_partitions(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::string to_string(const Composition& a) {
  if (a.empty()) return "-";
  std::ostringstream os;
  for (int i = 0; i < a.length(); ++i) {
    if (i) os << ',';
    os << a.parts[i];
  }
  return os.str();
}

Composition parse_composition(const std::string& text) {
  if (text.empty() || text == "-") return Composition{};
  std::vector<int> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw domain_error("parse_composition: empty part in '" + text + "'");
    int v = 0;
    try {
      v = std::stoi(tok);
    } catch (...) {
      throw domain_error("parse_composition: bad token '" + tok + "'");
    }
    if (v < 1) throw domain_error("parse_composition: parts must be positive");
    parts.push_back(v);
  }
  return Composition(parts);
}

}  // namespace qhecke
