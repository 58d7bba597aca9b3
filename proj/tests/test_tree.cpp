#include <doctest.h>

#include "selfsim/closure.hpp"
#include "selfsim/conjugator.hpp"
#include "selfsim/expr.hpp"
#include "selfsim/kernels.hpp"
#include "selfsim/level_perm.hpp"
#include "selfsim/portrait.hpp"
#include "selfsim/presentation.hpp"

using namespace selfsim;
using namespace selfsim::tree;
using adic::PowerSeries;
using adic::Truncation;

TEST_CASE("permutations act on the right") {
  auto a = Permutation::from_cycles(3, {{1, 2}});
  auto b = Permutation::from_cycles(3, {{2, 3}});
  // 1 -a-> 2 -b-> 3
  CHECK((a * b).images() == std::vector<int>{3, 1, 2});
  CHECK(Permutation::from_cycles(4, {{1, 2, 3, 4}}).order() == 4);
  CHECK(Permutation::from_cycles(4, {{1, 3}, {2, 4}}).cycle_string() == "(1 3)(2 4)");
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 4}}), Error);
}

TEST_CASE("forest hash-consing") {
  Forest f(2);
  const NodeId kids[2] = {0, 0};
  const auto s = Permutation::from_cycles(2, {{1, 2}});
  CHECK(f.make(s, kids) == f.make(s, kids));
  CHECK(f.make(Permutation::identity(2), kids) == kIdentityNode);
}

TEST_CASE("binary adding machine") {
  Forest f(2);
  GeneratorSystem sys(2);
  sys.add(adding_machine(2, 1, "a"));
  Evaluator ev(f, sys);
  const Element a = ev.generator("a", 8);

  SUBCASE("portrait to depth 3") {
    auto p = extract_portrait(f, truncate(f, a, 3), 3);
    CHECK(to_json(p).dump() == R"({"L":3,"m":2,"nodes":[[2,1],[1,2],[2,1],[1,2],[1,2],[1,2],[2,1]]})");
    CHECK(portrait_from_json(to_json(p)) == p);
  }
  SUBCASE("binary increment") {
    const int w1[3] = {1, 1, 1};
    auto r1 = act(f, a, w1);
    CHECK(r1.image == std::vector<int>{2, 1, 1});
    CHECK(r1.residual.is_identity());
    const int w2[3] = {2, 2, 2};
    auto r2 = act(f, a, w2);
    CHECK(r2.image == std::vector<int>{1, 1, 1});
    CHECK(r2.residual == truncate(f, a, 5));
  }
  SUBCASE("a^{2-x} = e and a^2 = a^x") {
    const Truncation t{2, 8, 8};
    CHECK(ev.eval(AutExpr::gen("a").pow(PowerSeries::from_integers(t, {2, -1})), 8).is_identity());
    CHECK(pow(f, a, 2) == ev.eval(AutExpr::gen("a").diagonal(1), 8));
  }
  SUBCASE("order 2^L to depth L") {
    CHECK(order_to_depth(f, a, 256).identity);
    auto r = order_to_depth(f, a, 128);
    CHECK_FALSE(r.identity);
    CHECK(r.level == 8);
  }
  SUBCASE("product matches the label-wise oracle") {
    const Element b = ev.eval(AutExpr::gen("a").pow(PowerSeries::from_integers({2, 8, 8}, {3, 1})), 8);
    CHECK(extract_portrait(f, mul(f, a, b), 8) == compose(extract_portrait(f, a, 8), extract_portrait(f, b, 8)));
    CHECK(mul(f, a, inverse(f, a)).is_identity());
  }
  SUBCASE("depth limits") {
    const int w[9] = {1, 1, 1, 1, 1, 1, 1, 1, 1};
    CHECK_THROWS_AS(act(f, a, w), Error);
  }
}

TEST_CASE("pow_madic needs a stabilized exponent") {
  Forest f(2);
  GeneratorSystem sys(2);
  sys.add(adding_machine(2, 1, "a"));
  Evaluator ev(f, sys);
  // a has order 2^8 at depth 8; three digits do not determine a^c
  try {
    pow_madic(f, ev.generator("a", 8), adic::MAdicInt::from_integer(2, 3, 5));
    FAIL("expected ExponentNotStabilized");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ExponentNotStabilized);
  }
}

TEST_CASE("generator systems") {
  GeneratorSystem sys(2);
  sys.add(adding_machine(2, 1, "a"));
  CHECK_THROWS_AS(sys.add(adding_machine(2, 1, "a")), Error);
  CHECK_THROWS_AS(sys.add({"b", Permutation::from_cycles(2, {{1, 2}}), {AutExpr()}}), Error);
  sys.add({"c", Permutation::identity(2), {AutExpr::gen("z"), AutExpr()}});
  CHECK_THROWS_AS(sys.check(), Error);
  CHECK(adding_machine(2, 1, "a").to_string() == "gen a = (e, a) (1 2)");
}

TEST_CASE("level permutation kernels") {
  const Truncation t{3, 6, 6};
  auto g = power_generator("a", {PowerSeries::from_integers(t, {1, -1}), PowerSeries::from_integers(t, {0, 2}),
                                 PowerSeries::from_integers(t, {-1})});
  Forest f(3);
  GeneratorSystem sys(3);
  sys.add(g);
  Evaluator ev(f, sys);
  for (int l = 0; l <= 5; ++l) {
    CHECK(level_perm_fast(g, l) == level_permutation(f, ev.generator("a", 5), l));
  }
  std::vector<std::uint32_t> a(37), b(37), o1(37), o2(37);
  for (std::uint32_t i = 0; i < 37; ++i) {
    a[i] = (i * 5) % 37;
    b[i] = (i + 11) % 37;
  }
  kernels::scalar::compose(a, b, o1);
  kernels::compose(a, b, o2);
  CHECK(o1 == o2);
  CHECK(o1[1] == 16);
  kernels::offset_copy(a, 100, o2);
  CHECK(o2[36] == a[36] + 100);
  CHECK_FALSE(kernels::is_identity(a));
  CHECK_THROWS_AS(level_perm_fast(rooted("s", Permutation::from_cycles(3, {{1, 2}})), 2), Error);
}

TEST_CASE("closure, zeta and relations on D_3(2)") {
  Forest f(3);
  GeneratorSystem sys(3);
  sys.add(adding_machine(3, 2, "a"));
  Evaluator ev(f, sys);
  ClosureOptions o;
  o.depth = 8;
  auto rep = state_closure(ev, o);
  CHECK(rep.states.size() == 2);
  CHECK(rep.identity_state);
  CHECK(rep.transitive);
  CHECK(rep.abelian);
  CHECK(zeta(f, ev.generator("a", 8)) == 2);

  const Truncation t{3, 8, 8};
  auto pres = extract_relations(f, {"a"}, {ev.generator("a", 8)}, t);
  CHECK(pres.r == PowerSeries::from_integers(t, {3, 0, -1}));
}

TEST_CASE("rooted generators: closure {s, e}") {
  Forest f(2);
  GeneratorSystem sys(2);
  sys.add(rooted("s", Permutation::from_cycles(2, {{1, 2}})));
  Evaluator ev(f, sys);
  auto rep = state_closure(ev, {});
  CHECK(rep.states.size() == 1);
  CHECK(rep.identity_state);
}

TEST_CASE("generic conjugator") {
  Forest f(2);
  GeneratorSystem sys(2);
  sys.add(adding_machine(2, 1, "a"));
  Evaluator ev(f, sys);
  const Element a = ev.generator("a", 8);
  const Element a3 = pow(f, a, 3);
  const Element h = conjugator(f, a3, a);
  CHECK(conjugate(f, a3, h) == a);
  CHECK_THROWS_AS(conjugator(f, pow(f, a, 2), a), Error);
}

TEST_CASE("Example 3 sequences") {
  const Truncation t{2, 8, 8};
  auto s = example3_sequences(PowerSeries::from_integers(t, {1, 1}), 4);
  CHECK(s.c[2] == PowerSeries::from_integers(t, {3, 1}));
  CHECK(s.c_prime[3] == PowerSeries::from_integers(t, {5, 2}));
}
