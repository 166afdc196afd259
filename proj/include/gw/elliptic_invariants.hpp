#pragma once

#include <optional>

#include "gw/invariants.hpp"
#include "gw/series.hpp"

namespace gw {

/// Genus-1 potential with its constant-map part removed: the true potential
/// is this series minus y1/8. Support sits at keys (d, 3d) only, with the
/// d = 1, 2 coefficients zero.
struct EllipticPotential {
  BigradedSeries tilde;

  static EllipticPotential from_table(const InvariantTable& table, int truncation);
};

/// Closed recursion for the genus-1 counts from the genus-0 table:
///   N_d / (3d-1)! = (1/12) C(d,3) N'_d / (3d-1)!
///                   + sum_{d1+d2=d} (3 d1^2 d2 - 2 d1 d2)/9
///                     * N'_{d1}/(3d1-1)! * N_{d2}/(3d2)!
/// where N' is the genus-0 table and N the genus-1 one.
InvariantTable ehx_table(const InvariantTable& rational, int d_max);

/// Genus-1 counts via the closed integral form: integrate
///   (G_111 - 3 G_11 + 2 G_1)/72 * (1 - (1/9) y2 G_11 + (2/27) y2 G_1)^{-1}
/// along y2 and read the (d, 3d) coefficients. Throws ShapeError if the
/// integrated potential has support off the k = 3d line.
InvariantTable elliptic_via_integral(const BigradedSeries& gamma, int d_max);

/// The ten-term boundary-relation PDE evaluated on the pair (gamma, e);
/// identically empty through truncation for a consistent pair. Every term of
/// a nonzero residual sits at k = 3d - 6 (asserted during assembly).
BigradedSeries getzler_pde_residual(const BigradedSeries& gamma, const EllipticPotential& e);

/// Genus-1 counts by solving the PDE order-by-order. The unknown degree-m
/// coefficient first appears in the residual at total degree m + 2; the
/// offset is discovered by the linearity probe and asserted. Requires
/// gamma.truncation() >= d_max + 2.
InvariantTable elliptic_via_pde(const BigradedSeries& gamma, int d_max);

/// Structural grading identity for (d, 3d)-supported series: E_1 = (y2/3) E_2.
bool check_tilde_scaling(const BigradedSeries& tilde);

struct RouteDiff {
  int degree = 0;
  std::string route_a, route_b;
  Rational value_a, value_b;
};

/// First degree (through the shorter table) where two tables disagree.
std::optional<RouteDiff> first_route_difference(const InvariantTable& a, const InvariantTable& b);

}  // namespace gw
