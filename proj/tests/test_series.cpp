#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gw/series.hpp"
#include "test_util.hpp"

using namespace gw;
using gwtest::random_series;

TEST_CASE("monomial construction") {
  const BigradedSeries m = BigradedSeries::monomial(1, 2, Rational(1, 2), 10);
  CHECK(m.coefficient(1, 2) == Rational(1, 2));
  CHECK(m.terms().size() == 1);

  CHECK(BigradedSeries::monomial(0, 0, Rational(0), 5).is_zero());

  const BigradedSeries cubic = BigradedSeries::monomial(3, 8, Rational(12) / factorial(8), 10);
  CHECK(cubic.coefficient(3, 8) == Rational(12, 40320));

  CHECK_THROWS_AS(BigradedSeries::monomial(4, 0, Rational(1), 3), TruncationError);
  CHECK_THROWS_AS(BigradedSeries::monomial(-1, 0, Rational(1), 3), std::invalid_argument);
}

TEST_CASE("add: identity, cancellation, disjoint support") {
  const BigradedSeries f = BigradedSeries::monomial(1, 2, Rational(1, 2), 6);
  CHECK(add(f, BigradedSeries(6)) == f);

  CHECK(add(f, BigradedSeries::monomial(1, 2, Rational(-1, 2), 6)).is_zero());

  const BigradedSeries g = add(f, BigradedSeries::monomial(2, 5, Rational(1), 6));
  CHECK(g.terms().size() == 2);
  CHECK(g.coefficient(1, 2) == Rational(1, 2));
  CHECK(g.coefficient(2, 5) == Rational(1));
}

TEST_CASE("add and mul take the minimum truncation") {
  const BigradedSeries wide = BigradedSeries::monomial(5, 0, Rational(1), 5);
  const BigradedSeries narrow = BigradedSeries::monomial(1, 0, Rational(1), 2);
  CHECK(add(wide, narrow).truncation() == 2);
  CHECK(add(wide, narrow).coefficient(1, 0) == Rational(1));
  // the d = 5 term is beyond the shared bound and must not survive
  CHECK_THROWS_AS(add(wide, narrow).coefficient(5, 0), TruncationError);
  CHECK(mul(wide, narrow).truncation() == 2);
  CHECK(mul(wide, narrow).is_zero());
}

TEST_CASE("mul: annihilator, single terms, convolution") {
  const BigradedSeries f = BigradedSeries::monomial(1, 2, Rational(1, 2), 6);
  CHECK(mul(f, BigradedSeries(6)).is_zero());

  CHECK(mul(f, f) == BigradedSeries::monomial(2, 4, Rational(1, 4), 6));

  const BigradedSeries gamma = gwtest::gamma_of({1, 1, 12});
  CHECK(mul(gamma, gamma).coefficient(2, 4) == Rational(1, 4));
}

TEST_CASE("d1 multiplies by the degree") {
  CHECK(d1(BigradedSeries::monomial(0, 0, Rational(5), 4)).is_zero());

  const BigradedSeries gamma = gwtest::gamma_of({1, 1, 12});
  CHECK(d1(gamma).coefficient(3, 8) == Rational(3) * Rational(12) / factorial(8));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const BigradedSeries f = random_series(rng);
    const BigradedSeries twice = d1(d1(f));
    for (const auto& [key, c] : f.terms())
      CHECK(twice.coefficient(key.d, key.k) == Rational(key.d) * Rational(key.d) * c);
  }
}

TEST_CASE("d2 is the y2 power rule") {
  CHECK(d2(BigradedSeries::monomial(1, 0, Rational(3), 4)).is_zero());
  CHECK(d2(BigradedSeries::monomial(1, 2, Rational(1, 2), 4)) ==
        BigradedSeries::monomial(1, 1, Rational(1), 4));
  const BigradedSeries m = BigradedSeries::monomial(1, 2, Rational(7, 3), 4);
  CHECK(d2(d2(d2(m))).is_zero());
}

TEST_CASE("invert_unit") {
  CHECK(invert_unit(BigradedSeries::one(5)) == BigradedSeries::one(5));

  const Rational a(3, 7);
  const BigradedSeries unit = add(BigradedSeries::one(4), BigradedSeries::monomial(1, 3, a, 4));
  const BigradedSeries inverse = invert_unit(unit);
  CHECK(inverse.coefficient(2, 6) == a * a);
  CHECK(mul(unit, inverse) == BigradedSeries::one(4));

  CHECK_THROWS_AS(invert_unit(BigradedSeries::monomial(0, 0, Rational(2), 3)), NonUnitError);
  CHECK_THROWS_AS(invert_unit(add(BigradedSeries::one(3), BigradedSeries::y2(3))), NonUnitError);
}

TEST_CASE("invert_unit on the integrand unit factor") {
  // 1 - (1/9) y2 G_11 + (2/27) y2 G_1 for the degree-5 potential
  const BigradedSeries gamma = gwtest::gamma_of({1, 1, 12, 620, 87304});
  const BigradedSeries y2s = BigradedSeries::y2(gamma.truncation());
  const BigradedSeries unit = BigradedSeries::one(gamma.truncation()) -
                              Rational(1, 9) * (y2s * d1(d1(gamma))) +
                              Rational(2, 27) * (y2s * d1(gamma));
  CHECK(mul(unit, invert_unit(unit)) == BigradedSeries::one(gamma.truncation()));
}

TEST_CASE("integrate_y2") {
  CHECK(integrate_y2(BigradedSeries(3)).is_zero());
  CHECK(integrate_y2(BigradedSeries::monomial(1, 1, Rational(1), 3)) ==
        BigradedSeries::monomial(1, 2, Rational(1, 2), 3));
}

TEST_CASE("coefficient contract") {
  CHECK(BigradedSeries(4).coefficient(2, 4) == Rational(0));
  const BigradedSeries gamma = gwtest::gamma_of({1});
  CHECK(gamma.coefficient(1, 2) == Rational(1, 2));
  CHECK_THROWS_AS(gamma.coefficient(2, 4), TruncationError);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) {
    const BigradedSeries f = random_series(rng);
    const BigradedSeries g = random_series(rng);
    const BigradedSeries h = random_series(rng);
    CHECK(add(f, g) == add(g, f));
    CHECK(mul(f, g) == mul(g, f));
    CHECK(add(add(f, g), h) == add(f, add(g, h)));
    CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
    CHECK(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
  }
}

TEST_CASE("derivations: commutation and Leibniz") {
  std::mt19937_64 rng(501);
  for (int i = 0; i < 40; ++i) {
    const BigradedSeries f = random_series(rng);
    const BigradedSeries g = random_series(rng);
    CHECK(d1(d2(f)) == d2(d1(f)));
    CHECK(d2(mul(f, g)) == add(mul(d2(f), g), mul(f, d2(g))));
  }
}

TEST_CASE("invert_unit inverts random units") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20; ++i) {
    BigradedSeries noise = random_series(rng);
    // strip d = 0 terms to make 1 + noise a unit
    std::map<TermKey, Rational> positive;
    for (const auto& [key, c] : noise.terms())
      if (key.d >= 1) positive.emplace(key, c);
    const BigradedSeries unit =
        add(BigradedSeries::one(noise.truncation()),
            BigradedSeries::from_terms(std::move(positive), noise.truncation()));
    CHECK(mul(unit, invert_unit(unit)) == BigradedSeries::one(unit.truncation()));
  }
}

TEST_CASE("integrate_y2 is a right inverse of d2") {
  std::mt19937_64 rng(90);
  for (int i = 0; i < 40; ++i) {
    const BigradedSeries f = random_series(rng);
    CHECK(d2(integrate_y2(f)) == f);
  }
}

TEST_CASE("support_matches and lowest_degree") {
  const BigradedSeries gamma = gwtest::gamma_of({1, 1, 12});
  CHECK(support_matches(gamma, [](int d) { return 3 * d - 1; }));
  CHECK_FALSE(support_matches(gamma, [](int d) { return 3 * d; }));
  CHECK(lowest_degree(gamma) == 1);
  CHECK(lowest_degree(BigradedSeries(4)) == -1);
}
