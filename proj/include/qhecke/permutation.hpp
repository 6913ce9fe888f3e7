#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qhecke/composition.hpp"

namespace qhecke {

/// Permutation of [n] in one-line notation.  A word of distinct letters is a
/// different thing; convert explicitly with perm_from_word.
struct Perm {
  std::vector<int> word;

  Perm() = default;
  explicit Perm(std::vector<int> w) : word(std::move(w)) {}
  Perm(std::initializer_list<int> w) : word(w) {}

  int n() const { return static_cast<int>(word.size()); }
  int operator()(int i) const { return word[i - 1]; }  // 1-based

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm& o) const { return word <=> o.word; }
};

bool is_permutation_word(const std::vector<int>& w);
Perm perm_from_word(const std::vector<int>& w);  // validates

Perm identity(int n);
Perm w0(int n);
// Longest element of the parabolic subgroup generated by {s_i : i in I}.
Perm w0_parabolic(const std::vector<int>& I, int n);
Perm w0_alpha(const Composition& a);  // w0(set(alpha))

Perm mult(const Perm& s, const Perm& t);  // (st)(i) = s(t(i))
Perm inverse(const Perm& s);
Perm conj_w0(const Perm& s);              // w0 s w0
Perm left_s(int i, const Perm& s);        // s_i s: swaps values i, i+1

std::set<std::pair<int, int>> inv_L(const Perm& s);
int length(const Perm& s);
std::set<int> des_L(const Perm& s);
bool leq_L(const Perm& lo, const Perm& hi);  // Inv_L containment

struct WeakInterval {
  Perm lo, hi;
  std::vector<Perm> elements;  // sorted lexicographically
  bool contains(const Perm& s) const;
};

/// All gamma with lo <=_L gamma <=_L hi, by upward BFS from lo.
WeakInterval interval(const Perm& lo, const Perm& hi);

std::vector<Perm> all_perms(int n);

// Elementary Knuth moves (both kinds) and their closures.
std::vector<Perm> knuth_neighbors(const Perm& s);
std::set<Perm> knuth_class(const Perm& s);       // guard n <= 10
std::set<Perm> dual_knuth_class(const Perm& s);  // via inverses

std::string to_digits(const Perm& s);  // "615243" for n <= 9, else comma form
Perm parse_perm(const std::string& text);

}  // namespace qhecke
