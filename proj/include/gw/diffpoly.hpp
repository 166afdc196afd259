#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gw/rational.hpp"
#include "gw/series.hpp"

namespace gw {

/// Formal jet symbol for the a-th y1- and b-th y2-derivative of the genus-0
/// potential. Mixed partials commute, so (a, b) identifies the jet.
struct JetVar {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const JetVar&, const JetVar&) = default;
};

/// Monomial y2^y2_pow * prod J(a,b)^e with jet factors sorted by (a,b) and
/// exponents >= 1. Ordered graded-lexicographically: by total degree, then
/// y2 power, then the sorted jet list. The order is part of the rendering
/// contract, so mismatch reports are stable.
struct JetMonomial {
  int y2_pow = 0;
  std::vector<std::pair<JetVar, int>> jets;

  int total_degree() const;
  int max_jet_order() const;  // largest a + b among factors, -1 if none

  /// Monomial with one more J(a,b)^count factor, kept canonical.
  JetMonomial times_jet(JetVar v, int count = 1) const;

  friend bool operator==(const JetMonomial&, const JetMonomial&) = default;
  friend bool operator<(const JetMonomial&, const JetMonomial&);
};

/// Exact-coefficient polynomial in y2 and the jet variables; the carrier of
/// the symbolic identity work. Zero coefficients are never stored.
class DiffPoly {
 public:
  DiffPoly() = default;

  static DiffPoly constant(const Rational& c);
  static DiffPoly y2(int power = 1);
  static DiffPoly jet(int a, int b, int power = 1);
  static DiffPoly from_terms(std::map<JetMonomial, Rational> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::map<JetMonomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const JetMonomial& m) const;

  /// Largest a appearing in any jet factor; 0 for jet-free polynomials.
  int max_a() const;
  /// Largest a + b appearing in any jet factor; -1 for jet-free polynomials.
  int max_jet_order() const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const Rational& c, const DiffPoly& p);

  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  std::map<JetMonomial, Rational> terms_;
};

DiffPoly pow(const DiffPoly& p, int exp);

/// Total y2-derivative: y2^p picks up p*y2^{p-1}, each jet J(a,b) advances to
/// J(a,b+1), extended by the Leibniz rule.
DiffPoly dp_derive_y2(const DiffPoly& p);

/// Normal form modulo the grading relation
///   J(a,b) -> (y2/3) J(a-1,b+1) + ((b+1)/3) J(a-1,b)   for a >= 1,
/// the b-fold y2-derivative of  G_1 = (y2/3) G_2 + G/3  lifted through d/dy1
/// (which kills y2). Every rewrite lowers the total a-count, so the result
/// contains only a = 0 jets.
DiffPoly normalize_ll(const DiffPoly& p);

/// Rendering grammar, one term per ' + ' in canonical monomial order:
///   term   := coef {" * " factor}
///   factor := "y2" | "y2^" int | "G[" a "," b "]" | "G[" a "," b "]^" int
/// with coef an exact rational ("p" or "p/q", possibly negative). The zero
/// polynomial prints as "0".
std::string to_string(const DiffPoly& p);

std::ostream& operator<<(std::ostream& os, const DiffPoly& p);

/// Substitutes J(a,b) -> d1^a d2^b gamma and y2 -> the series y2; an exact
/// differential-ring homomorphism into the truncated series world.
BigradedSeries eval_series(const DiffPoly& p, const BigradedSeries& gamma);

/// Numeric jet point: a y2 value plus values for the pure-y2 jets J(0,b),
/// 0 <= b < base.size(). Jets with a >= 1 take the value forced by the
/// grading relation.
struct JetPoint {
  Rational y2;
  std::vector<Rational> base;

  /// Value of J(a,b); requires base to cover b' <= a + b.
  Rational jet_value(int a, int b) const;
};

/// Exact evaluation at a jet point.
Rational eval_point(const DiffPoly& p, const JetPoint& point);

}  // namespace gw
