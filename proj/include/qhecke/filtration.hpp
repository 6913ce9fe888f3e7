#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qhecke/composition.hpp"
#include "qhecke/filling.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/insertion.hpp"
#include "qhecke/permutation.hpp"
#include "qhecke/qsym.hpp"

namespace qhecke {

/// Equal insertion-tableau shape and equal column-recording tableau.
bool m_equiv(const Perm& s, const Perm& r);

/// True iff S is a union of m-equivalence classes.  Guard n <= 8.
bool closure_check(const std::set<Perm>& s, int n);

struct Stratum {
  Filling recording;        // shared column-recording tableau of the stratum
  Composition gamma;        // shared insertion shape
  std::vector<Perm> members;
};

struct FiltrationReport {
  WeakInterval interval;
  std::vector<Stratum> strata;
  bool submodule_chain_ok = false;
  std::vector<Composition> quotient_characteristics;  // gamma_k, verified
};

/// Tiebreak for ordering recording tableaux whose lambda-shapes tie or are
/// incomparable; any refinement of dominance is admissible here.
enum class LTiebreak { ShapeLexThenRowWord, RowWordDesc };

/// Distinguished filtration of the dual immaculate module, built through its
/// interval realization and verified stratum by stratum.  Guard |a| <= 8.
FiltrationReport filtration_V(const Composition& a,
                              LTiebreak tb = LTiebreak::ShapeLexThenRowWord);

/// Same for the extended-Schur module; requires a shuffle of a partition
/// with ones, and additionally checks the recording tableau is constant.
FiltrationReport filtration_X(const Composition& a);

/// Permutations whose insertion tableau has shape a and whose recording
/// tableau is the row-filled tableau of a reversed, after twisting by w0.
/// Computed two independent ways and compared.  Guard |a| <= 8.
std::vector<Perm> K_alpha(const Composition& a);

/// Module on K_alpha with the descent action; its characteristic is checked
/// against the Young quasisymmetric Schur function.
CombModule Y_module(const Composition& a);

struct SeqData {
  std::vector<Cell> seq1;
  std::vector<Cell> seq2;
  std::vector<Cell> removed;   // seq2 ++ seq1, the tau' filling order
  Composition tilde_alpha;     // shape left after removing seq cells
};

/// Cell-peeling procedure; requires a shuffle of a partition with ones.
SeqData seq12(const Composition& a);

/// Maximal element of the interval realizing K_alpha, built recursively on
/// the peeled diagram.
Filling tau_prime(const Composition& a);

/// Checks K_alpha = reading words of the SE-decreasing extended tableaux
/// = the interval from the row-filled tableau to tau'.  Shuffle shapes only.
bool K_characterizations(const Composition& a);

struct SurjectionChain {
  // Heap-held so the maps' module pointers survive moves of the chain.
  std::unique_ptr<CombModule> v, x, y, q;
  ModuleMap gamma;            // v -> x
  ModuleMap eta;              // x -> q
  ModuleMap delta;            // v -> y
  ModuleMap upsilon;          // y -> q
  ModuleMap delta_tilde;      // x -> y, shuffle shapes only
  bool has_delta_tilde = false;
  bool upsilon_is_iso = false;
};

/// Builds and verifies the surjections and both commuting identities.
/// Guard |a| <= 7.
SurjectionChain surjection_chain(const Composition& a);

struct AppendixReport {
  struct Fact {
    std::string name;
    bool ok;
  };
  std::vector<Fact> facts;
  bool all_ok() const;
};

/// Finite certificate of the no-distinguished-filtration example at n = 8.
AppendixReport verify_appendix();

}  // namespace qhecke
