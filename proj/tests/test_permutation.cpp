#include <doctest.h>

#include "qhecke/errors.hpp"
#include "qhecke/insertion.hpp"
#include "qhecke/permutation.hpp"

using namespace qhecke;

TEST_CASE("descents and length") {
  CHECK(des_L(parse_perm("214365")) == std::set<int>{1, 3, 5});
  CHECK(des_L(identity(5)).empty());
  CHECK(length(w0(4)) == 6);
  CHECK(inv_L(parse_perm("21")).size() == 1);
}

TEST_CASE("left weak order") {
  CHECK(leq_L(parse_perm("214365"), parse_perm("615243")));
  CHECK(leq_L(parse_perm("321465"), parse_perm("641253")));
  Perm s = parse_perm("3142");
  CHECK(leq_L(s, s));
  CHECK_THROWS_AS(leq_L(parse_perm("21"), parse_perm("321")), domain_error);
}

TEST_CASE("interval enumeration") {
  CHECK(interval(parse_perm("214365"), parse_perm("615243")).elements.size() == 15);
  CHECK(interval(parse_perm("321465"), parse_perm("641253")).elements.size() == 9);
  Perm s = parse_perm("2413");
  CHECK(interval(s, s).elements == std::vector<Perm>{s});
  CHECK_THROWS_AS(interval(parse_perm("21"), parse_perm("12")), domain_error);

  for (int n = 1; n <= 6; ++n) {
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(interval(identity(n), w0(n)).elements.size() == static_cast<std::size_t>(fact));
  }
}

TEST_CASE("interval matches inversion-set containment") {
  for (const char* pair : {"214365 615243", "321465 641253"}) {
    std::string text(pair);
    Perm lo = parse_perm(text.substr(0, 6));
    Perm hi = parse_perm(text.substr(7));
    WeakInterval iv = interval(lo, hi);
    for (const Perm& g : all_perms(6))
      CHECK(iv.contains(g) == (leq_L(lo, g) && leq_L(g, hi)));
  }
}

TEST_CASE("covers add one inversion") {
  for (const Perm& s : all_perms(5)) {
    auto des = des_L(s);
    for (int i = 1; i <= 4; ++i) {
      Perm up = left_s(i, s);
      CHECK(leq_L(s, up) == !des.count(i));
      if (!des.count(i)) CHECK(length(up) == length(s) + 1);
    }
  }
}

TEST_CASE("longest elements") {
  CHECK(w0(4) == parse_perm("4321"));
  CHECK(w0_parabolic({1, 3, 5, 6, 7}, 8) == parse_perm("21438765"));
  CHECK(conj_w0(identity(5)) == identity(5));
  CHECK(mult(w0(4), w0(4)) == identity(4));
}

TEST_CASE("w0_alpha is the parabolic longest element at set(alpha)") {
  // set((2,2,4)) = {2,4}: generators s_2 and s_4 reverse [2,3] and [4,5].
  CHECK(w0_alpha(Composition{2, 2, 4}) == parse_perm("13254678"));
  for (const Composition& a : all_compositions(5))
    CHECK(w0_alpha(a) == w0_parabolic(set_of(a), 5));
}

TEST_CASE("knuth classes agree with insertion tableaux") {
  CHECK(knuth_class(identity(1)) == std::set<Perm>{identity(1)});
  for (const Perm& s : all_perms(5)) {
    auto cls = knuth_class(s);
    PQPair ref = rsk(s);
    for (const Perm& r : all_perms(5)) {
      bool same_p = rsk(r).P == ref.P;
      CHECK(same_p == (cls.count(r) > 0));
    }
    auto dcls = dual_knuth_class(s);
    for (const Perm& r : all_perms(5)) {
      bool same_q = rsk(r).Q == ref.Q;
      CHECK(same_q == (dcls.count(r) > 0));
    }
  }
}

TEST_CASE("dominance step along covers") {
  // Going up one cover either keeps the recording tableau or pushes the
  // shape strictly down in dominance.
  for (const Perm& s : all_perms(5)) {
    auto des = des_L(s);
    for (int i = 1; i <= 4; ++i) {
      if (des.count(i)) continue;
      Perm up = left_s(i, s);
      PQPair a = rsk(s), b = rsk(up);
      if (a.Q == b.Q) continue;
      CHECK((a.Q.shape == b.Q.shape || dominance_lt(b.Q.shape, a.Q.shape)));
    }
  }
}

TEST_CASE("digit form round trip") {
  CHECK(to_digits(parse_perm("615243")) == "615243");
  CHECK(parse_perm("2,1,3") == parse_perm("213"));
  CHECK_THROWS_AS(parse_perm("611"), domain_error);
}
