#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qhecke {

/// A composition: finite ordered list of positive integers.  The empty
/// composition (no parts) is a valid value of size and length 0.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {}
  Composition(std::initializer_list<int> p) : parts(p) {}

  int size() const;                 // sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  int part(int i) const;            // 1-based; 0 for i > length()

  bool operator==(const Composition&) const = default;
  // Lexicographic on part sequences; used as the canonical map key order.
  auto operator<=>(const Composition& o) const { return parts <=> o.parts; }
};

/// Cell (row, col) of a diagram, rows counted from the bottom, 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

std::vector<Cell> diagram(const Composition& a);
bool in_diagram(const Composition& a, int row, int col);

// set/comp bijection between compositions of n and subsets of [n-1].
std::vector<int> set_of(const Composition& a);            // sorted
Composition comp_of(const std::vector<int>& I, int n);    // inverse of set_of

Composition reverse_comp(const Composition& a);
Composition complement(const Composition& a);
Composition lambda_sort(const Composition& a);            // parts sorted desc
bool is_partition(const Composition& a);

// True iff the subsequence of parts >= 2 is weakly decreasing, i.e. the
// composition arises by shuffling a partition with a run of 1s.
bool is_shuffle_of_partition_and_ones(const Composition& a);

// True iff for all i<j with a_i >= a_j >= 2 some i<k<j has a_k = a_j - 1.
bool is_simple(const Composition& a);

std::strong_ordering cmp_lex(const Composition& a, const Composition& b);

// Strict dominance on partitions of equal size; incomparable pairs are
// false in both directions.
bool dominance_lt(const Composition& lam, const Composition& mu);

// Total order on finite integer sets: cardinality first, then lexicographic
// on the increasing element lists.  Inputs must be strictly increasing.
std::strong_ordering cmp_set(const std::vector<int>& A, const std::vector<int>& B);

std::vector<Composition> all_compositions(int n);
std::vector<Composition> all_partitions(int n);

std::string to_string(const Composition& a);              // "3,1,2"; "-" for empty
Composition parse_composition(const std::string& text);

}  // namespace qhecke
