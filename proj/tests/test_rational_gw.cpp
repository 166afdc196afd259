#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gw/rational_invariants.hpp"
#include "test_util.hpp"

using namespace gw;

namespace {

// Independent oracle: the closed recursion obtained by expanding the
// associativity coefficient at key (d, 3d-4) by hand,
//   N_d = sum_{d1+d2=d} N_{d1} N_{d2} ( d1^2 d2^2 C(3d-4, 3d1-2)
//                                      - d1^3 d2  C(3d-4, 3d1-1) ).
// It never touches the series solver path.
std::vector<Rational> closed_recursion(int d_max) {
  std::vector<Rational> n = {Rational(1)};
  for (int d = 2; d <= d_max; ++d) {
    Rational sum(0);
    for (int a = 1; a < d; ++a) {
      const int b = d - a;
      const Rational weight =
          Rational(1L * a * a * b * b) *
              binomial(static_cast<unsigned long>(3 * d - 4),
                       static_cast<unsigned long>(3 * a - 2)) -
          Rational(1L * a * a * a * b) *
              binomial(static_cast<unsigned long>(3 * d - 4),
                       static_cast<unsigned long>(3 * a - 1));
      sum += n[static_cast<size_t>(a - 1)] * n[static_cast<size_t>(b - 1)] * weight;
    }
    n.push_back(sum);
  }
  return n;
}

}  // namespace

TEST_CASE("closed recursion reproduces the pinned counts") {
  const auto oracle = closed_recursion(6);
  for (size_t i = 0; i < gwtest::kRationalCounts.size(); ++i)
    CHECK(oracle[i] == Rational(gwtest::kRationalCounts[i]));
}

TEST_CASE("hand-expanded degree-2 coefficient") {
  // d = 2: single split (1,1): 1*1*C(2,1) - 1*1*C(2,2) = 2 - 1 = 1.
  CHECK(closed_recursion(2).back() == Rational(1));
}

TEST_CASE("solver matches the oracle through d = 8") {
  const InvariantTable table = solve_wdvv(8);
  const auto oracle = closed_recursion(8);
  REQUIRE(table.d_max() == 8);
  for (int d = 1; d <= 8; ++d) CHECK(table.at(d) == oracle[static_cast<size_t>(d - 1)]);
  CHECK(table.route == "wdvv");
  CHECK_NOTHROW(validate(table));
}

TEST_CASE("solver output is deterministic") {
  const InvariantTable a = solve_wdvv(7);
  const InvariantTable b = solve_wdvv(7);
  CHECK(a.values == b.values);
}

TEST_CASE("gamma_series coefficients and contract") {
  const InvariantTable table = gwtest::rational_table_of({1, 1, 12});
  const BigradedSeries gamma = gamma_series(table, 3);
  CHECK(gamma.coefficient(1, 2) == Rational(1, 2));
  CHECK(gamma.coefficient(3, 8) == Rational(12) / factorial(8));
  CHECK(gamma.terms().size() == 3);

  CHECK(gamma_series(gwtest::rational_table_of({}), 0).is_zero());
  CHECK_THROWS_AS(gamma_series(table, 5), std::invalid_argument);
}

TEST_CASE("wdvv_residual vanishing and perturbation") {
  CHECK(wdvv_residual(gwtest::gamma_of({1})).is_zero());
  CHECK(wdvv_residual(gwtest::gamma_of({1, 1, 12, 620, 87304})).is_zero());

  const BigradedSeries perturbed = gwtest::gamma_of({1, 2, 12});
  const BigradedSeries residual = wdvv_residual(perturbed);
  CHECK_FALSE(residual.is_zero());
  CHECK(residual.coefficient(2, 2) != Rational(0));
  CHECK(lowest_degree(residual) == 2);
}

TEST_CASE("gamma scaling holds for any (d, 3d-1)-supported series") {
  CHECK(check_gamma_scaling(gamma_series(solve_wdvv(10), 10)));

  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    const int trunc = 1 + static_cast<int>(rng() % 6u);
    std::map<TermKey, Rational> terms;
    for (int d = 1; d <= trunc; ++d) {
      const Rational c = gwtest::rnd_rational(rng);
      if (!c.is_zero()) terms.emplace(TermKey{d, 3 * d - 1}, c);
    }
    CHECK(check_gamma_scaling(BigradedSeries::from_terms(std::move(terms), trunc)));
  }

  // wrong support shape: a term at (2, 4) has k != 3d-1
  const BigradedSeries wrong =
      BigradedSeries::from_terms({{TermKey{2, 4}, Rational(1)}}, 3);
  CHECK_FALSE(check_gamma_scaling(wrong));
}

TEST_CASE("solver stats and warm start") {
  SolveStats cold;
  const InvariantTable table = solve_wdvv(6, &cold);
  CHECK(cold.degrees_computed == 5);
  CHECK(cold.probes == 10);

  SolveStats warm;
  const InvariantTable extended = solve_wdvv(6, &warm, table.values);
  CHECK(warm.degrees_computed == 0);
  CHECK(extended.values == table.values);

  SolveStats partial;
  std::vector<Rational> prefix(table.values.begin(), table.values.begin() + 4);
  const InvariantTable from_prefix = solve_wdvv(6, &partial, prefix);
  CHECK(partial.degrees_computed == 2);
  CHECK(from_prefix.values == table.values);

  CHECK_THROWS_AS(solve_wdvv(3, nullptr, {Rational(2)}), SolverError);
  CHECK_THROWS_AS(solve_wdvv(0), std::invalid_argument);
}

TEST_CASE("degree-1 solve is just the seed") {
  const InvariantTable table = solve_wdvv(1);
  REQUIRE(table.d_max() == 1);
  CHECK(table.at(1) == Rational(1));
}
