#include <doctest.h>

#include <random>

#include "qhecke/errors.hpp"
#include "qhecke/filtration.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/qsym.hpp"

using namespace qhecke;

TEST_CASE("interval module shapes") {
  CombModule m222 = interval_module(parse_perm("214365"), parse_perm("615243"));
  CHECK(m222.dim() == 15);
  CHECK(verify_relations(m222));

  CombModule m312 = interval_module(parse_perm("321465"), parse_perm("641253"));
  CHECK(m312.dim() == 9);
  CHECK(verify_relations(m312));

  CHECK_THROWS_AS(interval_module(parse_perm("21"), parse_perm("12")), domain_error);
}

TEST_CASE("one element module is irreducible of the complement type") {
  Perm e = identity(3);
  CombModule m = interval_module(e, e);
  CHECK(m.dim() == 1);
  for (int i = 1; i <= 2; ++i)
    CHECK(m.out(i, 0).kind == CombModule::Kind::Kill);
  CHECK(characteristic(m) == f_elem(Composition{1, 1, 1}));
}

TEST_CASE("tableau modules") {
  CHECK(module_V(Composition{2, 2, 2}).dim() == 15);
  CHECK(module_X(Composition{3, 1, 2}).dim() == 9);
  CombModule row = module_V(Composition{4});
  CHECK(row.dim() == 1);
  for (int i = 1; i <= 3; ++i)
    CHECK(row.out(i, 0).kind == CombModule::Kind::Fix);
}

TEST_CASE("relations on all small modules") {
  for (int n = 1; n <= 6; ++n)
    for (const Composition& a : all_compositions(n)) {
      CHECK(verify_relations(module_V(a)));
      CHECK(verify_relations(module_X(a)));
    }
}

TEST_CASE("relations on random intervals") {
  std::mt19937 rng(20240817);
  auto perms = all_perms(6);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(perms.size()) - 1);
  std::uniform_int_distribution<int> gen(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Perm lo = perms[pick(rng)];
    Perm hi = lo;
    for (int steps = 0; steps < 6; ++steps) {
      int i = gen(rng);
      if (!des_L(hi).count(i)) hi = left_s(i, hi);
    }
    CombModule m = interval_module(lo, hi);
    CHECK(verify_relations(m));
  }
}

TEST_CASE("characteristics of interval and tableau modules") {
  CombModule m222 = interval_module(parse_perm("214365"), parse_perm("615243"));
  CHECK(characteristic(m222) == dual_immaculate_F(Composition{2, 2, 2}));
  CombModule x312 = module_X(Composition{3, 1, 2});
  CHECK(characteristic(x312) == extended_schur_F(Composition{3, 1, 2}));
  for (int n = 1; n <= 6; ++n)
    for (const Composition& a : all_compositions(n)) {
      CHECK(characteristic(module_V(a)) == dual_immaculate_F(a));
      CHECK(characteristic(module_X(a)) == extended_schur_F(a));
    }
}

TEST_CASE("basis submodules and quotients") {
  CombModule m222 = interval_module(parse_perm("214365"), parse_perm("615243"));
  std::vector<int> all(m222.dim());
  for (int b = 0; b < m222.dim(); ++b) all[b] = b;
  CHECK(is_basis_submodule(m222, {}));
  CHECK(is_basis_submodule(m222, all));
  CHECK_FALSE(is_basis_submodule(m222, {m222.index_of("214365")}));
  CHECK(is_basis_submodule(m222, {m222.index_of("615243")}));

  std::vector<int> sink{m222.index_of("615243")};
  CombModule q = quotient(m222, sink);
  CHECK(q.dim() == 14);
  CHECK(verify_relations(q));
  CHECK(characteristic(q) ==
        sub(characteristic(m222), characteristic(m222, sink, {})));

  CHECK_THROWS_AS(characteristic(m222, {m222.index_of("214365")}, {}), domain_error);
  // Lower subset must sit inside the upper one.
  CHECK_THROWS_AS(characteristic(m222, {}, sink), domain_error);
}

TEST_CASE("interval realizations of V and X") {
  for (int n = 1; n <= 6; ++n)
    for (const Composition& a : all_compositions(n)) {
      CombModule v = module_V(a);
      CombModule bv = interval_module(
          perm_from_word(row_word(canonical(CanonicalKind::calT, a))),
          perm_from_word(row_word(canonical(CanonicalKind::calT_prime, a))));
      ModuleMap tv = theta_V(v, bv);
      CHECK(iso_check(tv));

      CombModule x = module_X(a);
      CombModule bx = interval_module(
          perm_from_word(row_word(canonical(CanonicalKind::sfT, a))),
          perm_from_word(row_word(canonical(CanonicalKind::sfT_prime, a))));
      ModuleMap tx = theta_X(x, bx);
      CHECK(iso_check(tx));
    }
}

TEST_CASE("identity map is a hom") {
  CombModule v = module_V(Composition{2, 1});
  ModuleMap id;
  id.src = &v;
  id.dst = &v;
  id.assign.resize(v.dim());
  for (int b = 0; b < v.dim(); ++b) id.assign[b] = b;
  CHECK(hom_check(id));
  CHECK(iso_check(id));
}

TEST_CASE("gamma and eta maps") {
  for (int n = 1; n <= 5; ++n)
    for (const Composition& a : all_compositions(n)) {
      CombModule v = module_V(a);
      CombModule x = module_X(a);
      ModuleMap g = gamma_map(v, x);
      CHECK(hom_check(g));
      CHECK(is_surjective(g));
      int zeros = 0;
      for (int z : g.assign) zeros += z < 0 ? 1 : 0;
      CHECK(zeros == v.dim() - x.dim());

      CombModule q = canonical_quotient(a);
      ModuleMap e = eta_map(x, q);
      CHECK(hom_check(e));
      CHECK(is_surjective(e));
      ModuleMap both = compose(g, e);
      CHECK(is_surjective(both));
    }
  // Full row shape: gamma is the identity.
  CombModule v = module_V(Composition{5});
  CombModule x = module_X(Composition{5});
  ModuleMap g = gamma_map(v, x);
  CHECK(iso_check(g));
}

TEST_CASE("canonical quotient") {
  CHECK(canonical_quotient(Composition{5}).dim() == 1);
  for (int n = 1; n <= 6; ++n)
    for (const Composition& a : all_compositions(n)) {
      CombModule q = canonical_quotient(a);
      CHECK(q.dim() == static_cast<int>(enumerate(Family::SYCT_C, a).size()));
      CHECK(verify_relations(q));
      if (is_simple(reverse_comp(a)))
        CHECK(characteristic(q) == young_quasischur_F(a));
    }
}

TEST_CASE("phi twist") {
  CombModule m = interval_module(parse_perm("214365"), parse_perm("615243"));
  CombModule t = phi_twist(m);
  CHECK(phi_twist(t).action == m.action);
  CHECK(verify_relations(t));

  // ch is reversed termwise.
  QSymElem expect = rho(characteristic(m));
  CHECK(characteristic(t) == expect);

  // One-element module: F_beta twists to F_{beta reversed}.
  Perm s = parse_perm("2143");
  CombModule one = interval_module(s, s);
  std::set<int> des = des_L(s);
  Composition beta =
      complement(comp_of(std::vector<int>(des.begin(), des.end()), 4));
  CHECK(characteristic(phi_twist(one)) == f_elem(reverse_comp(beta)));
}

TEST_CASE("phi twist of an interval module is the conjugated interval") {
  for (const char* pair : {"321465 521364", "214365 615243"}) {
    std::string text(pair);
    Perm lo = parse_perm(text.substr(0, 6));
    Perm hi = parse_perm(text.substr(7));
    CombModule twisted = phi_twist(interval_module(lo, hi));
    CombModule target = interval_module(conj_w0(lo), conj_w0(hi));
    ModuleMap f;
    f.src = &twisted;
    f.dst = &target;
    f.assign.assign(twisted.dim(), -1);
    for (int b = 0; b < twisted.dim(); ++b)
      f.assign[b] = target.index_of(perm_label(conj_w0(parse_perm(twisted.basis[b]))));
    CHECK(iso_check(f));
  }
}

TEST_CASE("module json round trip") {
  CombModule m = module_X(Composition{2, 1, 2});
  CHECK(verify_relations(m));
  CHECK(!to_dot(m).empty());
}
