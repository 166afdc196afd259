#include "gw/rational_invariants.hpp"

#include <stdexcept>

namespace gw {

BigradedSeries gamma_series(const InvariantTable& table, int truncation) {
  if (table.d_max() < truncation)
    throw std::invalid_argument("gamma_series: table covers d <= " +
                                std::to_string(table.d_max()) + ", need " +
                                std::to_string(truncation));
  std::map<TermKey, Rational> terms;
  for (int d = 1; d <= truncation; ++d) {
    const Rational c = table.at(d) / factorial(static_cast<unsigned long>(3 * d - 1));
    if (!c.is_zero()) terms.emplace(TermKey{d, gamma_key_k(d)}, c);
  }
  return BigradedSeries::from_terms(std::move(terms), truncation);
}

BigradedSeries wdvv_residual(const BigradedSeries& gamma) {
  const BigradedSeries g1 = d1(gamma);
  const BigradedSeries g11 = d1(g1);
  const BigradedSeries g111 = d1(g11);
  const BigradedSeries g112 = d2(g11);
  const BigradedSeries g122 = d2(d2(g1));
  const BigradedSeries g222 = d2(d2(d2(gamma)));
  return g222 - g112 * g112 + g111 * g122;
}

bool check_gamma_scaling(const BigradedSeries& gamma) {
  const int trunc = gamma.truncation();
  const BigradedSeries lhs = d1(gamma);
  const BigradedSeries rhs = Rational(1, 3) * (BigradedSeries::y2(trunc) * d2(gamma)) +
                             Rational(1, 3) * gamma;
  return sub(lhs, rhs).is_zero();
}

namespace {

// Residual coefficient at the probe key (d, 3d-4) for a candidate N_d, with
// support off k = 3d-4 rejected.
Rational probe_residual(const std::vector<Rational>& known, const Rational& candidate, int d) {
  InvariantTable probe{InvariantKind::rational, known, "probe"};
  probe.values.push_back(candidate);
  const BigradedSeries psi = wdvv_residual(gamma_series(probe, d));
  for (const auto& [key, c] : psi.terms())
    if (key.k != 3 * key.d - 4)
      throw ShapeError("wdvv residual support at (" + std::to_string(key.d) + "," +
                       std::to_string(key.k) + "), expected k = 3d-4");
  return psi.coefficient(d, 3 * d - 4);
}

}  // namespace

InvariantTable solve_wdvv(int d_max, SolveStats* stats, const std::vector<Rational>& warm_start) {
  if (d_max < 1) throw std::invalid_argument("solve_wdvv: d_max must be >= 1");

  InvariantTable table{InvariantKind::rational, {}, "wdvv"};
  table.values.reserve(static_cast<size_t>(d_max));
  table.values.emplace_back(1);  // seed: one line through two general points
  if (!warm_start.empty() && warm_start.front() != Rational(1))
    throw SolverError("solve_wdvv: warm start contradicts the seed N_1 = 1");
  for (size_t i = 1; i < warm_start.size() && table.d_max() < d_max; ++i)
    table.values.push_back(warm_start[i]);

  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  for (int d = table.d_max() + 1; d <= d_max; ++d) {
    const Rational r0 = probe_residual(table.values, Rational(0), d);
    const Rational r1 = probe_residual(table.values, Rational(1), d);
    st.probes += 2;
    const Rational slope = r1 - r0;
    if (slope.is_zero()) {
      if (r0.is_zero())
        throw SolverError("solve_wdvv: underdetermined at d = " + std::to_string(d));
      throw SolverError("solve_wdvv: inconsistent at d = " + std::to_string(d) +
                        ", residual " + r0.str());
    }
    table.values.push_back(-r0 / slope);
    ++st.degrees_computed;
  }
  return table;
}

}  // namespace gw
