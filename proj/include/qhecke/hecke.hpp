#pragma once

#include <optional>
#include <map>
#include <string>
#include <vector>

#include "qhecke/composition.hpp"
#include "qhecke/filling.hpp"
#include "qhecke/permutation.hpp"
#include "qhecke/qsym.hpp"

namespace qhecke {

/// 0-Hecke module presented combinatorially: an ordered basis of opaque
/// labels and, per generator, a Fix / Kill / MoveTo map on the basis.
struct CombModule {
  enum class Kind { Fix, Kill, Move };
  struct Outcome {
    Kind kind = Kind::Kill;
    int target = -1;  // basis index for Move
    bool operator==(const Outcome&) const = default;
  };

  int n = 0;                                  // generators are pi_1..pi_{n-1}
  std::vector<std::string> basis;
  std::vector<std::vector<Outcome>> action;   // action[i-1][b]
  std::map<std::string, int> index;

  int dim() const { return static_cast<int>(basis.size()); }
  const Outcome& out(int i, int b) const { return action[i - 1][b]; }
  /// pi_i applied to basis element b; nullopt encodes zero.
  std::optional<int> apply(int i, int b) const;
  /// Compose generators right-to-left along a word; Kill absorbs.
  std::optional<int> apply_word(const std::vector<int>& gens, int b) const;
  int index_of(const std::string& label) const;
};

CombModule make_module(int n, std::vector<std::string> basis_labels);

/// Weak Bruhat interval module: Fix on left descents, move up within the
/// interval, kill on the boundary.
CombModule interval_module(const Perm& lo, const Perm& hi);

CombModule module_V(const Composition& a);  // basis SIT(a)
CombModule module_X(const Composition& a);  // basis SET(a)

/// Idempotence, braid and commutation relations as maps basis -> basis or 0.
bool verify_relations(const CombModule& m);

bool is_basis_submodule(const CombModule& m, const std::vector<int>& s);
CombModule quotient(const CombModule& m, const std::vector<int>& s);

/// ch of span(S)/span(S'), both action-closed, S' contained in S.
QSymElem characteristic(const CombModule& m, const std::vector<int>& s,
                        const std::vector<int>& s_prime);
QSymElem characteristic(const CombModule& m);  // whole module

struct ModuleMap {
  const CombModule* src = nullptr;
  const CombModule* dst = nullptr;
  std::vector<int> assign;  // basis index in dst, or -1 for zero

  std::optional<int> map(int b) const {
    return assign[b] < 0 ? std::nullopt : std::optional<int>(assign[b]);
  }
};

bool hom_check(const ModuleMap& f);
bool iso_check(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);
ModuleMap compose(const ModuleMap& first, const ModuleMap& second);

// Label conventions shared by the module builders.
std::string perm_label(const Perm& s);
std::string filling_label(const Filling& t);

/// SIT(a) -> interval module by the row-word map; checked isomorphism.
ModuleMap theta_V(const CombModule& v, const CombModule& target);
ModuleMap theta_X(const CombModule& x, const CombModule& target);

/// Identity-or-zero surjection module_V(a) -> module_X(a).
ModuleMap gamma_map(const CombModule& v, const CombModule& x);
/// Identity-or-zero surjection module_X(a) -> canonical_quotient(a).
ModuleMap eta_map(const CombModule& x, const CombModule& q);

/// Quotient of module_X(a) by the non-column-increasing extended tableaux;
/// the kill set is verified to be action-closed.
CombModule canonical_quotient(const Composition& a);

/// Precompose the action with pi_i -> pi_{n-i}.
CombModule phi_twist(const CombModule& m);

std::string to_dot(const CombModule& m);

}  // namespace qhecke
