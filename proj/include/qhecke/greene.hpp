#pragma once

#include <vector>

#include "qhecke/composition.hpp"
#include "qhecke/permutation.hpp"

namespace qhecke {

/// Length of a longest k-increasing subsequence (a subsequence that splits
/// into k disjoint strictly increasing subsequences).  Works for words with
/// repeated letters.
int longest_k_increasing(const std::vector<int>& w, int k);

/// A k-tuple of pairwise disjoint increasing subsequences, stored as 0-based
/// index lists into the host word; empty parts are allowed.
struct IncTuple {
  std::vector<std::vector<int>> parts;
};

/// All members of Inc_k(w): ordered k-tuples of disjoint increasing
/// subsequences of total length i_k(w).  Distinct letters; guard len <= 10.
std::vector<IncTuple> inc_k_tuples(const std::vector<int>& w, int k);

/// Set of first values of the nonempty parts.
std::vector<int> ies(const std::vector<int>& w, const IncTuple& u);

/// Maximum of IES over Inc_k under the cardinality-then-lex set order.
/// Distinct letters; k = 0 gives the empty set.
std::vector<int> mies(const std::vector<int>& w, int k);
std::vector<int> mies(const Perm& s, int k);

/// Shape of the Young-composition insertion tableau predicted from the
/// mIES chain, without running any insertion.
Composition predict_shape(const std::vector<int>& w);
Composition predict_shape(const Perm& s);

/// True iff mies(-, k) is constant on the Knuth class of s.  Guard n <= 7.
bool knuth_invariance_check(const Perm& s, int k);

/// Shape of the classic row-insertion tableau of a word (weak bumping);
/// exposed for the Greene-style identities.
Composition schensted_shape(const std::vector<int>& w);

}  // namespace qhecke
