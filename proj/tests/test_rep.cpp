#include <doctest.h>

#include "selfsim/abelian.hpp"
#include "selfsim/intmat.hpp"
#include "selfsim/machine.hpp"
#include "selfsim/portrait.hpp"

using namespace selfsim;
using namespace selfsim::rep;

TEST_CASE("Hermite normal form") {
  lin::Matrix A{{2, 4}, {6, 8}};
  auto h = lin::hermite(A, 2);
  CHECK(h.rank() == 2);
  CHECK(h.H[0][0] * h.H[1][1] == 8);  // |det|
  auto c = lin::solve_in_lattice(h, {8, 12});
  REQUIRE(c);
  CHECK((*c)[0] * 2 + (*c)[1] * 6 == 8);
  CHECK_FALSE(lin::solve_in_lattice(h, {1, 0}));

  lin::Matrix B{{1, 2}, {2, 4}, {0, 3}};
  auto k = lin::left_kernel(lin::hermite(B, 2));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] * 1 + k[0][1] * 2 == 0);
  CHECK_THROWS_AS(lin::to_int64(lin::BigInt(1) << 70), Error);
}

TEST_CASE("finitely generated abelian groups") {
  FgAbelianGroup g(1, {4});
  CHECK(g.canonical({3, 7}) == Vec{3, 3});
  CHECK(g.add({1, 3}, {1, 2}) == Vec{2, 1});
  CHECK(g.neg({1, 1}) == Vec{-1, 3});
  CHECK_THROWS_AS(FgAbelianGroup(1, {1}), Error);
}

TEST_CASE("virtual endomorphisms") {
  VirtualEndo v(FgAbelianGroup(1, {}), {{2}}, {{1}});
  CHECK(v.index() == 2);
  CHECK(v.contains({6}));
  CHECK_FALSE(v.contains({3}));
  CHECK(v.apply({6}) == Vec{3});
  // index 1 is not a tree representation
  CHECK_THROWS_AS(VirtualEndo(FgAbelianGroup(1, {}), {{1}}, {{1}}), Error);
  // f must vanish where the generators are dependent
  CHECK_THROWS_AS(VirtualEndo(FgAbelianGroup(1, {}), {{2}, {4}}, {{1}, {0}}), Error);
  CHECK_THROWS_AS(check_transversal(v, Transversal{{{0}, {2}}}), Error);
}

TEST_CASE("Example 1 machine is the adding machine") {
  VirtualEndo v(FgAbelianGroup(1, {}), {{2}}, {{1}});
  SelfSimilarMachine m(v, Transversal{{{0}, {1}}});
  CHECK(m.output({1}) == tree::Permutation::from_cycles(2, {{1, 2}}));
  CHECK(m.transitions({1}) == std::vector<Vec>{{0}, {1}});

  auto reach = m.reachable({{1}}, 100);
  CHECK(reach.complete);
  auto gens = m.to_generators(reach, "g");
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].to_string() == "gen g0 = (e, g0) (1 2)");

  tree::Forest f(2);
  tree::GeneratorSystem sys(2);
  sys.add(tree::adding_machine(2, 1, "a"));
  tree::Evaluator ev(f, sys);
  CHECK(m.element(f, {1}, 8) == ev.generator("a", 8));
}

TEST_CASE("triple files") {
  auto j = nlohmann::json::parse(
      R"({"free_rank": 1, "torsion": [], "H_gens": [[2]], "f_images": [[1]], "transversal": [[0], [1]]})");
  auto t = triple_from_json(j);
  CHECK(t.endo.index() == 2);
  CHECK(t.transversal.reps.size() == 2);
  j["transversal"] = {{0}};
  CHECK_THROWS_AS(triple_from_json(j), Error);
}
