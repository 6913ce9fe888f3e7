#pragma once

#include <vector>

#include "qhecke/filling.hpp"
#include "qhecke/permutation.hpp"

namespace qhecke {

/// Two-line array with weakly increasing top row (ties ordered by bottom row).
struct TwoLineArray {
  std::vector<int> top;
  std::vector<int> bottom;

  int n() const { return static_cast<int>(top.size()); }
  bool operator==(const TwoLineArray&) const = default;
};

bool is_valid_two_line(const TwoLineArray& w);
TwoLineArray two_line_from_word(const std::vector<int>& word);  // top = 1..n
TwoLineArray two_line_from_perm(const Perm& s);

struct InsertionTrace {
  Filling result;
  std::vector<Cell> sequence;  // cells modified, final-tableau coordinates
  Cell new_cell;
};

/// Insert letter k into a Young composition tableau (repeats allowed).
/// Scans cells by column descending, row descending within a column; a bump
/// replaces the right neighbour of the matched cell; if no cell terminates
/// the scan, a new one-cell row keeps the first column strictly increasing.
InsertionTrace insert(const Filling& t, int k);

struct PQPair {
  Filling P;
  Filling Q;
};

/// Row-by-row insertion of the bottom line; Q records top entries in the
/// topmost row with one cell fewer than the landing column.
PQPair build_PQ(const TwoLineArray& w);
PQPair build_PQ(const Perm& s);

/// Full recording tableau: the cell created at step k receives k.
/// Requires distinct letters.
Filling recording_full(const std::vector<int>& word);
Filling recording_full(const Perm& s);

/// Classic Schensted row insertion on permutations.
PQPair rsk(const Perm& s);

/// Reverse both lines and relabel each through the order-reversing involution
/// of its value set; an involution agreeing with w0-conjugation on
/// permutations.
TwoLineArray conj(const TwoLineArray& w);

// Decreasing-row composition tableau pair, realized through the Young-side
// algorithm: F(w) = revmap(P(w^conj)), G(w) = revmap(Q(w^conj)).
PQPair composition_tableau_pair(const TwoLineArray& w);

}  // namespace qhecke
