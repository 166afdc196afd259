#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gw/diffpoly.hpp"

namespace gw {

/// Associativity combination  Psi = G[0,3] - G[2,1]^2 + G[3,0]*G[1,2].
DiffPoly wdvv_poly();

/// Unit factor  Q = 1 - (1/9) y2 G[2,0] + (2/27) y2 G[1,0]  of the closed
/// integral form; the required equation below is cleared by Q^2.
DiffPoly unit_factor_poly();

/// Numerator  P = (G[3,0] - 3 G[2,0] + 2 G[1,0]) / 72  of the closed form.
DiffPoly numerator_poly();

/// The equation the genus-0 potential must satisfy for the closed integral
/// form to solve the ten-term PDE: substitute
///   E_1  = (y2/3) E_2 - 1/8,
///   E_11 = (y2^2/9) E_22 + (y2/9) E_2,
///   E_12 = (y2/3) E_22 + (1/3) E_2,
/// then E_2 = P/Q and E_22 = (P' Q - P Q')/Q^2, and clear denominators by Q^2.
DiffPoly build_required_pde();

/// The combination  A*Psi + B*Psi' + C*Psi'^2 + D*Psi''  with the four
/// explicit coefficient polynomials, transcribed verbatim.
DiffPoly build_fform_rhs();

/// Ingredients of the identity check, overridable for perturbation tests.
struct IdentityContext {
  DiffPoly required;
  DiffPoly rhs;
  DiffPoly unit_factor;
};

IdentityContext default_identity_context();

struct VerificationReport {
  bool success = false;
  bool degenerate = false;      // a side normalized to the zero polynomial
  Rational kappa;               // nonzero scale on success
  int q_power = 0;              // extra unit-factor power applied
  bool q_on_required = true;    // normalize(R)*Q^q = kappa * normalize(S) vs the flip
  std::string detail;           // first mismatching monomial, or the residual
};

/// Reduces both sides to normal form and searches for a nonzero rational
/// kappa and a power q <= q_max of the unit factor (on either side) making
/// them proportional. kappa is fixed from the first nonzero coefficient in
/// canonical order, then every coefficient is verified. Failure is a report,
/// not an exception: the mismatch channel is a result.
VerificationReport verify_fform(const IdentityContext& ctx, int q_max = 4);
VerificationReport verify_fform();

struct PointWitness {
  int trial = 0;
  JetPoint point;
  Rational lhs, rhs;
};

/// Confirms the verified identity numerically: at seeded random jet points,
/// the un-normalized sides are evaluated exactly (jets with a >= 1 take the
/// values the grading relation forces) and compared under the claimed
/// (kappa, q). Throws std::invalid_argument when trials < 1.
bool random_point_check(const IdentityContext& ctx, const VerificationReport& claim,
                        int trials, std::uint64_t seed,
                        PointWitness* witness = nullptr);

/// Convenience form over the default context and its verified report.
bool random_point_check(int trials, std::uint64_t seed);

}  // namespace gw
