#include "gw/identity.hpp"

#include <random>
#include <stdexcept>

namespace gw {

DiffPoly wdvv_poly() {
  return DiffPoly::jet(0, 3) - DiffPoly::jet(2, 1, 2) +
         DiffPoly::jet(3, 0) * DiffPoly::jet(1, 2);
}

DiffPoly unit_factor_poly() {
  return DiffPoly::constant(Rational(1)) -
         Rational(1, 9) * (DiffPoly::y2() * DiffPoly::jet(2, 0)) +
         Rational(2, 27) * (DiffPoly::y2() * DiffPoly::jet(1, 0));
}

DiffPoly numerator_poly() {
  return Rational(1, 72) * (DiffPoly::jet(3, 0) - Rational(3) * DiffPoly::jet(2, 0) +
                            Rational(2) * DiffPoly::jet(1, 0));
}

DiffPoly build_required_pde() {
  const DiffPoly p = numerator_poly();
  const DiffPoly q = unit_factor_poly();
  const DiffPoly p_prime = dp_derive_y2(p);
  const DiffPoly q_prime = dp_derive_y2(q);

  const DiffPoly pq = p * q;                      // E_2  * Q^2
  const DiffPoly w = p_prime * q - p * q_prime;   // E_22 * Q^2
  const DiffPoly qq = q * q;
  const DiffPoly y2 = DiffPoly::y2();
  const DiffPoly e1_qq = Rational(1, 3) * (y2 * pq) - Rational(1, 8) * qq;  // E_1 * Q^2

  DiffPoly r;
  // 36 E_11 G122^2, with E_11 = (y2^2/9) E_22 + (y2/9) E_2
  r += Rational(36) * ((Rational(1, 9) * (DiffPoly::y2(2) * w) +
                        Rational(1, 9) * (y2 * pq)) *
                       DiffPoly::jet(1, 2, 2));
  // -48 E_12 G112 G122, with E_12 = (y2/3) E_22 + (1/3) E_2
  r -= Rational(48) * ((Rational(1, 3) * (y2 * w) + Rational(1, 3) * pq) *
                       (DiffPoly::jet(2, 1) * DiffPoly::jet(1, 2)));
  // -48 E_22 G222
  r -= Rational(48) * (w * DiffPoly::jet(0, 3));
  // -12 E_1 G1122 G122
  r -= Rational(12) * (e1_qq * (DiffPoly::jet(2, 2) * DiffPoly::jet(1, 2)));
  // +24 E_1 G112 G1222
  r += Rational(24) * (e1_qq * (DiffPoly::jet(2, 1) * DiffPoly::jet(1, 3)));
  // +24 E_2 G2222
  r += Rational(24) * (pq * DiffPoly::jet(0, 4));
  // potential-only terms, cleared by Q^2
  r += (Rational(2) * (DiffPoly::jet(1, 3) * DiffPoly::jet(3, 1)) +
        Rational(1, 2) * (DiffPoly::jet(1, 4) * DiffPoly::jet(3, 0)) +
        Rational(3, 2) * DiffPoly::jet(0, 5) -
        Rational(3) * DiffPoly::jet(2, 2, 2)) *
       qq;
  return r;
}

DiffPoly build_fform_rhs() {
  const DiffPoly g = DiffPoly::jet(0, 0);
  const DiffPoly g1 = DiffPoly::jet(1, 0);
  const DiffPoly g11 = DiffPoly::jet(2, 0);
  const DiffPoly g111 = DiffPoly::jet(3, 0);
  const DiffPoly g22 = DiffPoly::jet(0, 2);
  const DiffPoly g222 = DiffPoly::jet(0, 3);
  const DiffPoly y2 = DiffPoly::y2();

  const DiffPoly a =
      Rational(-128) *
      (Rational(36) * (y2 * g22) + Rational(24) * (DiffPoly::y2(2) * g222) -
       Rational(4) * (g1 * g11) - Rational(9) * (g11 * g11) +
       Rational(4, 3) * (g1 * g1) + Rational(12) * (g1 * g111) -
       Rational(18) * (g11 * g111) + Rational(27) * (g111 * g111));

  const DiffPoly b =
      Rational(-64) *
      (Rational(-60) * g + Rational(375) * g1 - Rational(1521, 2) * g11 +
       Rational(783, 2) * g111 + Rational(2) * (y2 * (g1 * g1)) -
       Rational(6) * (y2 * (g1 * g11)) + Rational(8) * (y2 * (g1 * g111)) -
       Rational(11, 2) * (y2 * (g11 * g11)) - Rational(9) * (y2 * (g11 * g111)) +
       Rational(9, 2) * (y2 * (g111 * g111)));

  const DiffPoly c = Rational(-64) * DiffPoly::y2(4);

  const DiffPoly d =
      Rational(-32) * ((y2 * g111 + DiffPoly::constant(Rational(9))) *
                       (Rational(3) * (y2 * g11) - Rational(2) * (y2 * g1) -
                        DiffPoly::constant(Rational(27))));

  const DiffPoly psi = wdvv_poly();
  const DiffPoly psi_p = dp_derive_y2(psi);
  const DiffPoly psi_pp = dp_derive_y2(psi_p);
  return a * psi + b * psi_p + c * (psi_p * psi_p) + d * psi_pp;
}

IdentityContext default_identity_context() {
  return IdentityContext{build_required_pde(), build_fform_rhs(), unit_factor_poly()};
}

namespace {

// kappa making lhs == kappa*rhs, fixed on rhs's first monomial then fully
// verified; nullopt plus the offending monomial otherwise.
std::optional<Rational> proportional(const DiffPoly& lhs, const DiffPoly& rhs,
                                     std::string* mismatch) {
  const auto& anchor = *rhs.terms().begin();
  const Rational kappa = lhs.coefficient(anchor.first) / anchor.second;
  if (kappa.is_zero()) {
    if (mismatch)
      *mismatch = to_string(DiffPoly::from_terms({{anchor.first, anchor.second}}));
    return std::nullopt;
  }
  const DiffPoly diff = lhs - kappa * rhs;
  if (diff.is_zero()) return kappa;
  if (mismatch) {
    const auto& first = *diff.terms().begin();
    *mismatch = "kappa " + kappa.str() + " leaves " +
                to_string(DiffPoly::from_terms({{first.first, first.second}}));
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_fform(const IdentityContext& ctx, int q_max) {
  VerificationReport report;
  const DiffPoly rn = normalize_ll(ctx.required);
  const DiffPoly sn = normalize_ll(ctx.rhs);
  const DiffPoly qn = normalize_ll(ctx.unit_factor);
  if (rn.is_zero() || sn.is_zero()) {
    report.degenerate = true;
    report.detail = "degenerate: a side normalizes to the zero polynomial";
    return report;
  }

  std::string first_failure;
  for (int q = 0; q <= q_max; ++q) {
    const DiffPoly qpow = pow(qn, q);
    for (const bool on_required : {true, false}) {
      if (q == 0 && !on_required) continue;
      const DiffPoly lhs = on_required ? rn * qpow : rn;
      const DiffPoly rhs = on_required ? sn : sn * qpow;
      std::string mismatch;
      if (auto kappa = proportional(lhs, rhs, &mismatch)) {
        report.success = true;
        report.kappa = *kappa;
        report.q_power = q;
        report.q_on_required = on_required;
        return report;
      }
      if (first_failure.empty()) first_failure = mismatch;
    }
  }

  // No (kappa, q) in range: emit the q = 0 residual for inspection.
  const auto& anchor = *sn.terms().begin();
  const Rational kappa0 = rn.coefficient(anchor.first) / anchor.second;
  report.detail = "first mismatch: " + first_failure + "; residual at q=0, kappa=" +
                  kappa0.str() + ": " + to_string(rn - kappa0 * sn);
  return report;
}

VerificationReport verify_fform() { return verify_fform(default_identity_context()); }

namespace {

Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 25u) - 12;
  const long den = static_cast<long>(rng() % 12u) + 1;
  return Rational(num, den);
}

}  // namespace

bool random_point_check(const IdentityContext& ctx, const VerificationReport& claim,
                        int trials, std::uint64_t seed, PointWitness* witness) {
  if (trials < 1) throw std::invalid_argument("random_point_check: trials must be >= 1");
  if (!claim.success || claim.kappa.is_zero()) return false;

  int order = std::max(ctx.required.max_jet_order(), ctx.rhs.max_jet_order());
  order = std::max(order, ctx.unit_factor.max_jet_order());
  const size_t base_size = static_cast<size_t>(order < 0 ? 0 : order) + 1;

  for (int t = 0; t < trials; ++t) {
    // per-trial generator derived from the master seed
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
    JetPoint point;
    point.y2 = random_rational(rng);
    point.base.reserve(base_size);
    for (size_t i = 0; i < base_size; ++i) point.base.push_back(random_rational(rng));

    const Rational r = eval_point(ctx.required, point);
    const Rational s = eval_point(ctx.rhs, point);
    const Rational qv = eval_point(ctx.unit_factor, point);
    const Rational qp = pow(qv, static_cast<unsigned>(claim.q_power));
    const Rational lhs = claim.q_on_required ? r * qp : r;
    const Rational rhs = claim.kappa * (claim.q_on_required ? s : s * qp);
    if (lhs != rhs) {
      if (witness) *witness = PointWitness{t, point, lhs, rhs};
      return false;
    }
  }
  return true;
}

bool random_point_check(int trials, std::uint64_t seed) {
  const IdentityContext ctx = default_identity_context();
  const VerificationReport claim = verify_fform(ctx);
  if (!claim.success) return false;
  return random_point_check(ctx, claim, trials, seed);
}

}  // namespace gw
