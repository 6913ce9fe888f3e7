#include <doctest.h>

#include <set>

#include "qhecke/errors.hpp"
#include "qhecke/filling.hpp"
#include "qhecke/permutation.hpp"

using namespace qhecke;

TEST_CASE("validators on named fillings") {
  Filling t = make_filling(Composition{3, 1, 2}, {{1, 2, 3}, {4}, {5, 6}});
  CHECK(validate(Family::SIT, t));
  CHECK(validate(Family::SET, t));
  CHECK(perm_from_word(row_word(t)) == parse_perm("321465"));

  Filling repeats = make_filling(Composition{2, 3, 1}, {{1, 4}, {2, 2, 3}, {5}});
  CHECK_FALSE(is_standard(repeats));
  CHECK(is_young_composition_tableau(repeats));
  CHECK_THROWS_AS(validate(Family::SYCT, repeats), domain_error);

  Filling one = make_filling(Composition{1}, {{1}});
  for (Family f : {Family::SYT, Family::SCT, Family::SYCT, Family::SIT,
                   Family::SET, Family::SYCT_C, Family::nSYCT})
    CHECK(validate(f, one));
}

TEST_CASE("young triple rule rejects") {
  Filling bad = make_filling(Composition{2, 2}, {{1, 3}, {2, 4}});
  CHECK_FALSE(validate(Family::SYCT, bad));
  Filling good = make_filling(Composition{2, 2}, {{1, 4}, {2, 3}});
  CHECK(validate(Family::SYCT, good));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate(Family::SIT, Composition{2, 2, 2}).size() == 15);
  CHECK(enumerate(Family::SET, Composition{3, 1, 2}).size() == 9);
  CHECK(enumerate(Family::SET, Composition{2, 2}).size() == 2);
  CHECK(enumerate(Family::SET, Composition{5, 2, 1}).size() == 64);
}

TEST_CASE("enumeration is sorted and duplicate free") {
  for (Family f : {Family::SCT, Family::SYCT, Family::SIT, Family::SET}) {
    auto fill = enumerate(f, Composition{2, 1, 2});
    std::set<std::string> seen;
    std::vector<int> prev;
    for (const Filling& t : fill) {
      CHECK(validate(f, t));
      CHECK(seen.insert(to_string(t)).second);
      std::vector<int> w = row_word(t);
      CHECK(prev < w);
      prev = w;
    }
  }
}

TEST_CASE("SET on partitions equals SYT") {
  for (int n = 1; n <= 7; ++n)
    for (const Composition& lam : all_partitions(n)) {
      auto a = enumerate(Family::SET, lam);
      auto b = enumerate(Family::SYT, lam);
      CHECK(a == b);
    }
}

TEST_CASE("family containments") {
  for (int n = 1; n <= 7; ++n)
    for (const Composition& a : all_compositions(n)) {
      std::set<std::string> sit, set_, nsyct, syct, syct_c;
      for (const Filling& t : enumerate(Family::SIT, a)) sit.insert(to_string(t));
      for (const Filling& t : enumerate(Family::SET, a)) set_.insert(to_string(t));
      for (const Filling& t : enumerate(Family::nSYCT, a)) nsyct.insert(to_string(t));
      for (const Filling& t : enumerate(Family::SYCT, a)) syct.insert(to_string(t));
      for (const Filling& t : enumerate(Family::SYCT_C, a)) syct_c.insert(to_string(t));
      for (const auto& s : set_) CHECK(sit.count(s));
      for (const auto& s : nsyct) CHECK(set_.count(s));
      for (const auto& s : syct_c) CHECK(syct.count(s));
      for (const auto& s : syct_c) CHECK(set_.count(s));
    }
}

TEST_CASE("reading words") {
  CHECK(row_word(canonical(CanonicalKind::calT_prime, Composition{2, 2, 2})) ==
        std::vector<int>{6, 1, 5, 2, 4, 3});
  CHECK(row_word(canonical(CanonicalKind::calT, Composition{2, 2, 2})) ==
        std::vector<int>{2, 1, 4, 3, 6, 5});
  Filling cell = make_filling(Composition{1}, {{1}});
  CHECK(col_word(cell) == std::vector<int>{1});
  CHECK(col_word(make_filling(Composition{2, 2}, {{1, 2}, {3, 4}})) ==
        std::vector<int>{2, 4, 1, 3});
}

TEST_CASE("descent statistics") {
  Filling t = make_filling(Composition{1, 2}, {{1}, {2, 3}});
  CHECK(validate(Family::SYCT, t));
  CHECK(des_hatS(t) == std::set<int>{1});
  Filling row = canonical(CanonicalKind::calT, Composition{5});
  CHECK(des_hatS(row).empty());
}

TEST_CASE("revmap") {
  Filling t = make_filling(Composition{2, 1}, {{1, 2}, {3}});
  CHECK(revmap(t) == make_filling(Composition{2, 1}, {{3, 2}, {1}}));
  for (const Composition& a : all_compositions(5)) {
    std::set<std::string> images;
    for (const Filling& t2 : enumerate(Family::SCT, a)) {
      Filling r = revmap(t2);
      CHECK(revmap(r) == t2);
      CHECK(validate(Family::SYCT, r));
      CHECK(images.insert(to_string(r)).second);
      // Descent sets correspond through n - i.
      std::set<int> expect;
      for (int i : des_hatS(r)) expect.insert(a.size() - i);
      CHECK(des_S(t2) == expect);
    }
    CHECK(images.size() == enumerate(Family::SYCT, a).size());
  }
}

TEST_CASE("canonical tableaux") {
  CHECK(row_word(canonical(CanonicalKind::sfT_prime, Composition{3, 1, 2})) ==
        std::vector<int>{6, 4, 1, 2, 5, 3});
  CHECK(canonical(CanonicalKind::calT, Composition{4}) ==
        make_filling(Composition{4}, {{1, 2, 3, 4}}));
  CHECK(canonical(CanonicalKind::calT, Composition{3, 1, 2}) ==
        canonical(CanonicalKind::sfT, Composition{3, 1, 2}));
  CHECK(canonical(CanonicalKind::tau_prime_shape_recording, Composition{3, 1, 2}) ==
        canonical(CanonicalKind::calT, Composition{2, 1, 3}));
  for (int n = 1; n <= 6; ++n)
    for (const Composition& a : all_compositions(n)) {
      CHECK(validate(Family::SIT, canonical(CanonicalKind::calT, a)));
      CHECK(validate(Family::SIT, canonical(CanonicalKind::calT_prime, a)));
      CHECK(validate(Family::SET, canonical(CanonicalKind::sfT, a)));
      CHECK(validate(Family::SET, canonical(CanonicalKind::sfT_prime, a)));
    }
}

TEST_CASE("SE-decreasing") {
  Filling tau = make_filling(Composition{3, 1, 2}, {{1, 2, 5}, {3}, {4, 6}});
  CHECK(is_SE_decreasing(tau));
  CHECK(validate(Family::nSYCT, tau));
  Filling rect = make_filling(Composition{2, 2}, {{1, 3}, {2, 4}});
  CHECK(is_SE_decreasing(rect));
  Filling small = make_filling(Composition{2, 1}, {{1, 2}, {3}});
  CHECK(is_SE_decreasing(small));
}

TEST_CASE("compact form round trip") {
  Filling t = make_filling(Composition{3, 1, 2}, {{1, 2, 5}, {3}, {4, 6}});
  CHECK(parse_filling_compact(to_string(t)) == t);
  CHECK(to_string(t) == "[[1,2,5],[3],[4,6]]");
}

TEST_CASE("enumerate guard") {
  CHECK_THROWS_AS(enumerate(Family::SIT, Composition{13}), resource_error);
}
