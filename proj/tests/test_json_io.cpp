#include <doctest.h>

#include "qhecke/json_io.hpp"

using namespace qhecke;

TEST_CASE("composition json") {
  Composition a{3, 1, 2};
  CHECK(composition_to_json(a) == "[3,1,2]");
  CHECK(composition_from_json("[3,1,2]") == a);
  CHECK(composition_from_json(composition_to_json(Composition{})) == Composition{});
}

TEST_CASE("filling json") {
  Filling t = make_filling(Composition{3, 1, 2}, {{1, 2, 5}, {3}, {4, 6}});
  CHECK(filling_from_json(filling_to_json(t)) == t);
  CHECK(filling_to_json(t) ==
        R"({"rows":[[1,2,5],[3],[4,6]],"shape":[3,1,2]})");
}

TEST_CASE("qsym json") {
  QSymElem x = dual_immaculate_F(Composition{2, 2});
  CHECK(qsym_from_json(qsym_to_json(x)) == x);
  QSymElem f = f_elem(Composition{2, 1, 3});
  CHECK(qsym_to_json(f) == R"({"coeffs":{"2.1.3":1},"degree":6})");
}

TEST_CASE("module json") {
  CombModule m = module_X(Composition{2, 2});
  CombModule back = module_from_json(module_to_json(m));
  CHECK(back.n == m.n);
  CHECK(back.basis == m.basis);
  CHECK(back.action == m.action);
}

TEST_CASE("filtration report json") {
  FiltrationReport rep = filtration_V(Composition{2, 2});
  std::string j = filtration_to_json(rep);
  CHECK(j.find("strata") != std::string::npos);
  CHECK(j.find("submodule_chain_ok") != std::string::npos);
}

TEST_CASE("insertion trace json") {
  Filling t = make_filling(Composition{2, 3, 1}, {{1, 4}, {2, 2, 3}, {5}});
  InsertionTrace tr = insert(t, 2);
  std::string j = insertion_trace_to_json(tr);
  CHECK(j.find("[3,1]") != std::string::npos);
}
