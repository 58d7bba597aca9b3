#include <doctest.h>

#include "selfsim/adic.hpp"
#include "selfsim/quotient.hpp"
#include "selfsim/series_io.hpp"

using namespace selfsim;
using namespace selfsim::adic;

namespace {
std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> trimmed(std::vector<BigInt> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}
}  // namespace

TEST_CASE("m-adic integers") {
  SUBCASE("negatives are complements") {
    auto a = MAdicInt::from_integer(2, 4, -1);
    CHECK(a.value() == 15);
    CHECK(a.balanced() == -1);
  }
  SUBCASE("3^-1 = 11 mod 32") {
    auto three = MAdicInt::from_integer(2, 5, 3);
    CHECK(invert(three).value() == 11);
    CHECK((three * invert(three)).value() == 1);
  }
  SUBCASE("non-units are rejected") {
    CHECK_THROWS_AS(invert(MAdicInt::from_integer(6, 3, 4)), Error);
  }
  SUBCASE("mixed moduli") {
    CHECK_THROWS_AS(MAdicInt::from_integer(2, 4, 1) + MAdicInt::from_integer(3, 4, 1), Error);
  }
}

TEST_CASE("idempotents of Z_6 mod 36") {
  auto e = idempotents(Modulus(6), 2);
  REQUIRE(e.size() == 2);
  CHECK(e[0].value() == 9);
  CHECK(e[1].value() == 28);
  CHECK((e[1] * e[1]).value() == 28);
  CHECK((e[0] + e[1]).value() == 1);
  CHECK((e[0] * e[1]).is_zero());
}

TEST_CASE("power series") {
  const Truncation t{2, 8, 8};
  auto s = PowerSeries::from_integers(t, {1, 1});
  auto inv = invert(s);
  CHECK(s * inv == PowerSeries::from_integers(t, {1}));
  CHECK(PowerSeries::from_integers(t, {0, 0, 3}).valuation() == 2);
  CHECK(PowerSeries::from_integers(t, {2, -1}).balanced()[1] == -1);
  CHECK(PowerSeries::from_integers(t, {1}).shifted(9).is_zero());
}

TEST_CASE("series literals") {
  CHECK(parse_series_literal("2 - x") == ints({2, -1}));
  CHECK(parse_series_literal("1 + x") == ints({1, 1}));
  CHECK(parse_series_literal("3*x^2") == ints({0, 0, 3}));
  CHECK(parse_series_literal("-1") == ints({-1}));
  CHECK(format_integer_series(ints({2, -1})) == "2 - x");
  CHECK(format_integer_series(ints({0, 1, 1})) == "x + x^2");
  CHECK_THROWS_AS(parse_series_literal("2 - y"), Error);
}

TEST_CASE("quotient rings") {
  SUBCASE("6 under 2 - x is x + x^2") {
    QuotientRing ring(2, 1, ints({1}), 8);
    CHECK(format_quotient(ring.reduce(ints({6}))) == "x + x^2");
  }
  SUBCASE("2 (2 - x) vanishes under 4 - 2x") {
    QuotientRing ring(4, 1, ints({2}), 8);
    CHECK(ring.reduce(ints({4, -2})).is_zero());
  }
  SUBCASE("relator round trip") {
    QuotientRing ring(3, 2, ints({1, -1}), 6);
    auto again = QuotientRing::from_relator(ring.relator(8));
    CHECK(again.shift() == 2);
    CHECK(trimmed(again.q()) == ring.q());
  }
  SUBCASE("mul agrees with reduce") {
    QuotientRing ring(3, 1, ints({2}), 6);
    auto a = ring.reduce(ints({5, 4}));
    auto b = ring.reduce(ints({7}));
    CHECK(ring.mul(a, b) == ring.reduce(ints({35, 28})));
  }
}

TEST_CASE("unit decomposition and congruence exponents") {
  auto d = unit_decompose(ints({3, 2}), 2);
  CHECK(d.l == 0);
  CHECK(trimmed(d.u) == ints({3}));
  CHECK(d.t == ints({0, 1}));

  CHECK_THROWS_AS(unit_decompose(ints({2, 4}), 2), Error);

  QuotientRing ring(4, 1, ints({0, 1}), 8);  // 4 - x^2
  auto ce = congruence_exponent(ring, 2, 2);
  CHECK(ce.l_total >= 1);
  try {
    congruence_exponent(QuotientRing(4, 1, ints({2}), 8), 2, 2);
    FAIL("expected AllDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AllDivisible);
  }
}

TEST_CASE("pro-m generators") {
  QuotientRing ring(3, 2, ints({1}), 8);
  auto g = pro_m_generators(ring);
  CHECK(g.l == 2);
  REQUIRE(g.generators.size() == 2);
  CHECK(g.generators[1] == ring.monomial(1));
}
