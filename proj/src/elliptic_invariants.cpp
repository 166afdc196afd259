#include "gw/elliptic_invariants.hpp"

#include <stdexcept>

#include "gw/errors.hpp"

namespace gw {

namespace {

BigradedSeries tilde_from_values(const std::vector<Rational>& values, int truncation) {
  std::map<TermKey, Rational> terms;
  for (size_t i = 0; i < values.size(); ++i) {
    const int d = static_cast<int>(i) + 1;
    if (d > truncation) break;
    const Rational c = values[i] / factorial(static_cast<unsigned long>(3 * d));
    if (!c.is_zero()) terms.emplace(TermKey{d, 3 * d}, c);
  }
  return BigradedSeries::from_terms(std::move(terms), truncation);
}

void assert_pde_shape(const BigradedSeries& residual) {
  for (const auto& [key, c] : residual.terms())
    if (key.k != 3 * key.d - 6)
      throw ShapeError("pde residual support at (" + std::to_string(key.d) + "," +
                       std::to_string(key.k) + "), expected k = 3d-6");
}

// Integrand factors of the closed form, shared by the integral route.
struct IntegralParts {
  BigradedSeries numerator;  // (G_111 - 3 G_11 + 2 G_1)/72
  BigradedSeries unit;       // 1 - (1/9) y2 G_11 + (2/27) y2 G_1
};

IntegralParts integral_parts(const BigradedSeries& gamma) {
  const int trunc = gamma.truncation();
  const BigradedSeries g1 = d1(gamma);
  const BigradedSeries g11 = d1(g1);
  const BigradedSeries g111 = d1(g11);
  const BigradedSeries y2s = BigradedSeries::y2(trunc);
  IntegralParts parts{
      Rational(1, 72) * (g111 - Rational(3) * g11 + Rational(2) * g1),
      BigradedSeries::one(trunc) - Rational(1, 9) * (y2s * g11) +
          Rational(2, 27) * (y2s * g1)};
  return parts;
}

}  // namespace

EllipticPotential EllipticPotential::from_table(const InvariantTable& table, int truncation) {
  if (table.d_max() < truncation)
    throw std::invalid_argument("EllipticPotential: table covers d <= " +
                                std::to_string(table.d_max()) + ", need " +
                                std::to_string(truncation));
  std::vector<Rational> values(table.values.begin(),
                               table.values.begin() + truncation);
  return EllipticPotential{tilde_from_values(values, truncation)};
}

InvariantTable ehx_table(const InvariantTable& rational, int d_max) {
  if (rational.d_max() < d_max)
    throw std::invalid_argument("ehx_table: rational table too short");
  InvariantTable table{InvariantKind::elliptic, {}, "ehx"};
  table.values.reserve(static_cast<size_t>(d_max));
  for (int d = 1; d <= d_max; ++d) {
    Rational n = Rational(1, 12) * binomial(static_cast<unsigned long>(d), 3) * rational.at(d);
    for (int a = 1; a < d; ++a) {
      const int b = d - a;
      const Rational weight(3L * a * a * b - 2L * a * b, 9L);
      n += factorial(static_cast<unsigned long>(3 * d - 1)) * weight * rational.at(a) *
           table.values[static_cast<size_t>(b - 1)] /
           (factorial(static_cast<unsigned long>(3 * a - 1)) *
            factorial(static_cast<unsigned long>(3 * b)));
    }
    table.values.push_back(n);
  }
  return table;
}

InvariantTable elliptic_via_integral(const BigradedSeries& gamma, int d_max) {
  if (gamma.truncation() < d_max)
    throw std::invalid_argument("elliptic_via_integral: gamma truncation too small");
  const IntegralParts parts = integral_parts(gamma);
  const BigradedSeries tilde2 = parts.numerator * invert_unit(parts.unit);
  const BigradedSeries tilde = integrate_y2(tilde2);
  if (!support_matches(tilde, [](int d) { return 3 * d; }))
    throw ShapeError("integral route: potential support off k = 3d");
  InvariantTable table{InvariantKind::elliptic, {}, "integral"};
  table.values.reserve(static_cast<size_t>(d_max));
  for (int d = 1; d <= d_max; ++d)
    table.values.push_back(factorial(static_cast<unsigned long>(3 * d)) *
                           tilde.coefficient(d, 3 * d));
  return table;
}

BigradedSeries getzler_pde_residual(const BigradedSeries& gamma, const EllipticPotential& e) {
  if (gamma.truncation() != e.tilde.truncation())
    throw std::invalid_argument("getzler_pde_residual: truncation mismatch");
  const int trunc = gamma.truncation();

  const BigradedSeries e1 = d1(e.tilde) + BigradedSeries::monomial(0, 0, Rational(-1, 8), trunc);
  const BigradedSeries e2 = d2(e.tilde);
  const BigradedSeries e11 = d1(d1(e.tilde));
  const BigradedSeries e12 = d2(d1(e.tilde));
  const BigradedSeries e22 = d2(e2);

  const BigradedSeries g1 = d1(gamma);
  const BigradedSeries g11 = d1(g1);
  const BigradedSeries g111 = d1(g11);
  const BigradedSeries g112 = d2(g11);
  const BigradedSeries g1112 = d2(g111);
  const BigradedSeries g122 = d2(d2(g1));
  const BigradedSeries g1122 = d2(g112);
  const BigradedSeries g1222 = d2(g122);
  const BigradedSeries g12222 = d2(g1222);
  const BigradedSeries g222 = d2(d2(d2(gamma)));
  const BigradedSeries g2222 = d2(g222);
  const BigradedSeries g22222 = d2(g2222);

  const BigradedSeries residual =
      Rational(36) * (e11 * (g122 * g122)) - Rational(48) * (e12 * (g112 * g122)) -
      Rational(48) * (e22 * g222) - Rational(12) * (e1 * (g1122 * g122)) +
      Rational(24) * (e1 * (g112 * g1222)) + Rational(24) * (e2 * g2222) +
      Rational(2) * (g1222 * g1112) + Rational(1, 2) * (g12222 * g111) +
      Rational(3, 2) * g22222 - Rational(3) * (g1122 * g1122);
  assert_pde_shape(residual);
  return residual;
}

InvariantTable elliptic_via_pde(const BigradedSeries& gamma, int d_max) {
  if (gamma.truncation() < d_max + 2)
    throw std::invalid_argument("elliptic_via_pde: need gamma truncation >= d_max + 2");
  const int trunc = gamma.truncation();

  InvariantTable table{InvariantKind::elliptic, {}, "pde"};
  table.values.reserve(static_cast<size_t>(d_max));
  for (int m = 1; m <= d_max; ++m) {
    auto residual_for = [&](const Rational& candidate) {
      std::vector<Rational> values = table.values;
      values.push_back(candidate);
      return getzler_pde_residual(gamma, EllipticPotential{tilde_from_values(values, trunc)});
    };
    const BigradedSeries res0 = residual_for(Rational(0));
    const BigradedSeries res1 = residual_for(Rational(1));

    // The candidate's influence must start exactly two degrees up.
    const BigradedSeries influence = res1 - res0;
    if (lowest_degree(influence) != m + 2)
      throw SolverError("elliptic_via_pde: unknown at degree " + std::to_string(m) +
                        " first acts at degree " + std::to_string(lowest_degree(influence)) +
                        ", expected " + std::to_string(m + 2));

    const Rational r0 = res0.coefficient(m + 2, 3 * m);
    const Rational slope = res1.coefficient(m + 2, 3 * m) - r0;
    if (slope.is_zero()) {
      if (r0.is_zero())
        throw SolverError("elliptic_via_pde: underdetermined at d = " + std::to_string(m));
      throw SolverError("elliptic_via_pde: inconsistent at d = " + std::to_string(m));
    }
    table.values.push_back(-r0 / slope);
  }
  return table;
}

bool check_tilde_scaling(const BigradedSeries& tilde) {
  const BigradedSeries lhs = d1(tilde);
  const BigradedSeries rhs =
      Rational(1, 3) * (BigradedSeries::y2(tilde.truncation()) * d2(tilde));
  return sub(lhs, rhs).is_zero();
}

std::optional<RouteDiff> first_route_difference(const InvariantTable& a, const InvariantTable& b) {
  const int common = std::min(a.d_max(), b.d_max());
  for (int d = 1; d <= common; ++d)
    if (a.at(d) != b.at(d))
      return RouteDiff{d, a.route, b.route, a.at(d), b.at(d)};
  return std::nullopt;
}

}  // namespace gw
