#pragma once

#include <set>
#include <string>
#include <vector>

#include "qhecke/composition.hpp"

namespace qhecke {

/// Filling of a composition diagram, rows stored bottom-up.
struct Filling {
  Composition shape;
  std::vector<std::vector<int>> rows;  // rows[i-1] = row i counted from bottom

  Filling() = default;
  Filling(Composition s, std::vector<std::vector<int>> r)
      : shape(std::move(s)), rows(std::move(r)) {}

  int n() const { return shape.size(); }
  int at(int row, int col) const { return rows[row - 1][col - 1]; }
  int& at(int row, int col) { return rows[row - 1][col - 1]; }
  bool has_cell(int row, int col) const { return in_diagram(shape, row, col); }

  // Cell holding a given entry; requires distinct entries.
  Cell find_entry(int value) const;

  bool operator==(const Filling&) const = default;
  auto operator<=>(const Filling& o) const { return rows <=> o.rows; }
};

Filling make_filling(const Composition& shape,
                     const std::vector<std::vector<int>>& rows);  // validates shape

enum class Family { SYT, SCT, SYCT, SIT, SET, SYCT_C, nSYCT };

const char* family_name(Family f);
Family parse_family(const std::string& name);

/// Entries are exactly 1..n, each once.
bool is_standard(const Filling& t);

// Shape predicates with repeated entries allowed (insertion inputs).
bool is_young_composition_tableau(const Filling& t);
bool is_composition_tableau(const Filling& t);

/// Exact membership predicate for a standard family.  Throws domain_error if
/// the entry multiset is not [n] (malformed input, distinct from false).
bool validate(Family f, const Filling& t);

/// All standard fillings of shape a in the family, each once, sorted by
/// row word lexicographically.  Guard: |a| <= 12.
std::vector<Filling> enumerate(Family f, const Composition& a);

std::vector<int> row_word(const Filling& t);  // right-to-left, bottom row first
std::vector<int> col_word(const Filling& t);  // bottom-to-top, rightmost column first

// Descent statistics on standard fillings.
std::set<int> des_S(const Filling& t);     // i+1 weakly right of i
std::set<int> des_hatS(const Filling& t);  // i weakly right of i+1

/// Compose with the order-reversing involution of the entry set; swaps
/// composition tableaux with Young composition tableaux of the same shape.
Filling revmap(const Filling& t);

enum class CanonicalKind {
  calT,        // rows bottom-up, left to right
  calT_prime,  // first column bottom-up, then remaining cells top row first
  sfT,         // same filling as calT
  sfT_prime,   // columns bottom-up, leftmost column first
  tau_prime_shape_recording,  // calT of the reversed shape (recording tableau)
};

CanonicalKind parse_canonical_kind(const std::string& name);
Filling canonical(CanonicalKind kind, const Composition& a);

/// For rows i<j with a_i > a_j: every T(i,k+1) < T(j,k), 1 <= k <= a_j.
bool is_SE_decreasing(const Filling& t);

std::string to_string(const Filling& t);  // compact [[1,2],[3]] form, rows bottom-up
Filling parse_filling_compact(const std::string& text);
std::string pretty(const Filling& t);     // French notation, bottom row last

}  // namespace qhecke
