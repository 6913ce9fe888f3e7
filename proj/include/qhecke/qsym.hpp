#pragma once

#include <map>
#include <optional>
#include <string>

#include "qhecke/composition.hpp"

namespace qhecke {

/// Homogeneous degree-n quasisymmetric function in the fundamental basis,
/// with integer coefficients stored sparsely (zero coefficients absent).
struct QSymElem {
  int degree = 0;
  std::map<Composition, long long> coeffs;

  bool operator==(const QSymElem&) const = default;
};

QSymElem f_elem(const Composition& a);
QSymElem zero_elem(int degree);

QSymElem add(const QSymElem& x, const QSymElem& y);
QSymElem sub(const QSymElem& x, const QSymElem& y);
QSymElem scale(long long c, const QSymElem& x);
long long coeff(const QSymElem& x, const Composition& a);

/// Automorphism F_a -> F_{a^r}.
QSymElem rho(const QSymElem& x);

// Basis elements, via their tableau/descent expansions into F.  All are
// memoized per argument.
QSymElem schur_F(const Composition& lam);
QSymElem quasischur_F(const Composition& a);
QSymElem young_quasischur_F(const Composition& a);
QSymElem dual_immaculate_F(const Composition& a);
QSymElem extended_schur_F(const Composition& a);

enum class ExpandBasis { QS, YQS };

struct Expansion {
  std::map<Composition, long long> coeffs;
  bool nonnegative = false;
};

/// Solve x = sum c_a B_a over the integers by unitriangular elimination;
/// triangularity of the chosen order is verified at runtime.  Returns
/// nullopt when x is not in the integer span.  Guard: degree <= 9.
std::optional<Expansion> expand_in(const QSymElem& x, ExpandBasis basis);

std::string to_string(const QSymElem& x);

}  // namespace qhecke
