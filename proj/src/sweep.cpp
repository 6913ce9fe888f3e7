#include "qhecke/sweep.hpp"

#include <map>
#include <set>
#include <sstream>

#include "qhecke/composition.hpp"
#include "qhecke/errors.hpp"
#include "qhecke/filling.hpp"
#include "qhecke/filtration.hpp"
#include "qhecke/greene.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/insertion.hpp"
#include "qhecke/permutation.hpp"
#include "qhecke/qsym.hpp"

namespace qhecke {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

std::string run_one(const Check& c) {
  try {
    return c();
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

std::string check_setcomp_roundtrip(int nmax) {
  for (int n = 0; n <= nmax; ++n)
    for (const Composition& a : all_compositions(n)) {
      if (comp_of(set_of(a), n) != a) return "comp∘set failed at " + to_string(a);
      if (complement(complement(a)) != a) return "complement not involutive at " + to_string(a);
      if (reverse_comp(reverse_comp(a)) != a) return "reverse not involutive";
    }
  return "";
}

std::string check_bijection_suite(int nmax) {
  for (int n = 1; n <= nmax; ++n) {
    std::set<std::pair<std::string, std::string>> images;
    for (const Perm& s : all_perms(n)) {
      PQPair pq = build_PQ(s);
      if (!validate(Family::SYCT, pq.P) || !validate(Family::SYCT, pq.Q))
        return "insertion pair not Young composition tableaux at " + to_digits(s);
      if (lambda_sort(pq.P.shape) != lambda_sort(pq.Q.shape))
        return "sorted shapes differ at " + to_digits(s);
      if (!images.insert({to_string(pq.P), to_string(pq.Q)}).second)
        return "correspondence not injective at " + to_digits(s);
      PQPair inv = build_PQ(inverse(s));
      if (inv.P != pq.Q || inv.Q != pq.P)
        return "inverse symmetry failed at " + to_digits(s);
      if (des_L(s) != des_hatS(pq.P)) return "descent identity failed at " + to_digits(s);
      if (lambda_sort(pq.P.shape) != rsk(s).P.shape)
        return "sorted insertion shape differs from RSK at " + to_digits(s);
    }
    long long total = 0;
    std::map<Composition, long long> counts;
    for (const Composition& a : all_compositions(n))
      counts[a] = static_cast<long long>(enumerate(Family::SYCT, a).size());
    for (const auto& [a, ca] : counts)
      for (const auto& [b, cb] : counts)
        if (lambda_sort(a) == lambda_sort(b)) total += ca * cb;
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (total != fact)
      return "count identity failed at n=" + std::to_string(n);
  }
  return "";
}

std::string check_greene(int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const Perm& s : all_perms(n)) {
      if (predict_shape(s) != build_PQ(s).P.shape)
        return "shape prediction failed at " + to_digits(s);
    }
  return "";
}

std::string check_relations(int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const Composition& a : all_compositions(n)) {
      if (!verify_relations(module_V(a))) return "V relations failed at " + to_string(a);
      if (!verify_relations(module_X(a))) return "X relations failed at " + to_string(a);
    }
  return "";
}

std::string check_characteristics(int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const Composition& a : all_compositions(n)) {
      if (characteristic(module_V(a)) != dual_immaculate_F(a))
        return "ch(V) mismatch at " + to_string(a);
      if (characteristic(module_X(a)) != extended_schur_F(a))
        return "ch(X) mismatch at " + to_string(a);
      if (young_quasischur_F(a) != rho(quasischur_F(reverse_comp(a))))
        return "rho identity mismatch at " + to_string(a);
    }
  return "";
}

std::string check_theta(int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const Composition& a : all_compositions(n)) {
      CombModule v = module_V(a);
      CombModule bv = interval_module(
          perm_from_word(row_word(canonical(CanonicalKind::calT, a))),
          perm_from_word(row_word(canonical(CanonicalKind::calT_prime, a))));
      if (!iso_check(theta_V(v, bv))) return "theta_V failed at " + to_string(a);
      CombModule x = module_X(a);
      CombModule bx = interval_module(
          perm_from_word(row_word(canonical(CanonicalKind::sfT, a))),
          perm_from_word(row_word(canonical(CanonicalKind::sfT_prime, a))));
      if (!iso_check(theta_X(x, bx))) return "theta_X failed at " + to_string(a);
    }
  return "";
}

std::string check_filtrations(int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const Composition& a : all_compositions(n)) {
      FiltrationReport rep = filtration_V(a);
      QSymElem sum = zero_elem(n);
      for (const Composition& g : rep.quotient_characteristics)
        sum = add(sum, young_quasischur_F(g));
      if (sum != dual_immaculate_F(a))
        return "V filtration characteristic sum mismatch at " + to_string(a);
      if (is_shuffle_of_partition_and_ones(a)) {
        FiltrationReport repx = filtration_X(a);
        QSymElem sumx = zero_elem(n);
        for (const Composition& g : repx.quotient_characteristics)
          sumx = add(sumx, young_quasischur_F(g));
        if (sumx != extended_schur_F(a))
          return "X filtration characteristic sum mismatch at " + to_string(a);
      }
    }
  return "";
}

std::string check_y_modules(int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const Composition& a : all_compositions(n)) {
      Y_module(a);  // throws if ch differs from the Young quasi-Schur
      if (is_shuffle_of_partition_and_ones(a) && !K_characterizations(a))
        return "K characterizations failed at " + to_string(a);
    }
  return "";
}

std::string check_surjections(int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const Composition& a : all_compositions(n)) {
      SurjectionChain sc = surjection_chain(a);
      bool simple = is_simple(reverse_comp(a));
      if (sc.upsilon_is_iso != simple)
        return "upsilon iso/simple mismatch at " + to_string(a);
    }
  return "";
}

std::string check_expand(int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const Composition& a : all_compositions(n)) {
      auto exp = expand_in(dual_immaculate_F(a), ExpandBasis::YQS);
      if (!exp) return "dual immaculate not in YQS span at " + to_string(a);
      if (!exp->nonnegative) return "negative YQS expansion at " + to_string(a);
    }
  return "";
}

}  // namespace

std::vector<SweepResult> run_sweep(int n) {
  std::vector<std::pair<std::string, Check>> checks = {
      {"set/comp bijection, involutions", [&] { return check_setcomp_roundtrip(std::min(n + 2, 10)); }},
      {"insertion bijection and symmetries", [&] { return check_bijection_suite(n); }},
      {"shape prediction against insertion", [&] { return check_greene(std::min(n, 6)); }},
      {"0-Hecke relations on V and X", [&] { return check_relations(n); }},
      {"module characteristics", [&] { return check_characteristics(n); }},
      {"interval realizations", [&] { return check_theta(n); }},
      {"distinguished filtrations", [&] { return check_filtrations(n); }},
      {"Y modules and K characterizations", [&] { return check_y_modules(n); }},
      {"surjection chains", [&] { return check_surjections(std::min(n, 7)); }},
      {"positive expansions", [&] { return check_expand(n); }},
  };
  std::vector<SweepResult> out;
  for (auto& [name, fn] : checks) {
    SweepResult r;
    r.name = name;
    r.detail = run_one(fn);
    r.ok = r.detail.empty();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qhecke
