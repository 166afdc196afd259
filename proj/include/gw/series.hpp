#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>

#include "gw/errors.hpp"
#include "gw/rational.hpp"

namespace gw {

/// Grading key of one term c * exp(d*y1) * y2^k.
struct TermKey {
  int d = 0;
  int k = 0;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Truncated series  sum c(d,k) * exp(d*y1) * y2^k  with exact coefficients,
/// known for every term with d <= truncation. Zero coefficients are never
/// stored; a coefficient with d beyond the truncation bound is unknown, not
/// zero, and asking for one is an error.
class BigradedSeries {
 public:
  explicit BigradedSeries(int truncation);

  /// Single term c * exp(d*y1) * y2^k; empty when c = 0. Requires d <= truncation.
  static BigradedSeries monomial(int d, int k, const Rational& c, int truncation);

  static BigradedSeries one(int truncation) { return monomial(0, 0, 1, truncation); }
  static BigradedSeries y2(int truncation) { return monomial(0, 1, 1, truncation); }

  /// Builds from an explicit term table, dropping zeros. Requires every key
  /// to satisfy 0 <= d <= truncation and k >= 0.
  static BigradedSeries from_terms(std::map<TermKey, Rational> terms, int truncation);

  int truncation() const { return truncation_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TermKey, Rational>& terms() const { return terms_; }

  /// Stored value or 0; throws TruncationError when d > truncation.
  Rational coefficient(int d, int k) const;

  /// Equal truncation and identical term tables.
  friend bool operator==(const BigradedSeries&, const BigradedSeries&) = default;

 private:
  BigradedSeries() = default;
  std::map<TermKey, Rational> terms_;
  int truncation_ = 0;
};

/// Coefficient-wise sum; result truncation is the minimum of the inputs.
BigradedSeries add(const BigradedSeries& f, const BigradedSeries& g);
BigradedSeries sub(const BigradedSeries& f, const BigradedSeries& g);

/// Bilinear convolution (d1,k1)x(d2,k2) -> (d1+d2, k1+k2); terms with d beyond
/// the minimum truncation are discarded.
BigradedSeries mul(const BigradedSeries& f, const BigradedSeries& g);

BigradedSeries scale(const BigradedSeries& f, const Rational& c);

/// Derivative along y1: acts on exp(d*y1) as multiplication by d.
BigradedSeries d1(const BigradedSeries& f);

/// Derivative along y2: (d,k,c) -> (d,k-1,k*c); k = 0 terms vanish.
BigradedSeries d2(const BigradedSeries& f);

/// Inverse of 1 + n where every term of n has d >= 1, by geometric-series
/// accumulation in the d-grading. Throws NonUnitError when the constant term
/// is not exactly 1 or a d = 0 term remains elsewhere.
BigradedSeries invert_unit(const BigradedSeries& f);

/// Antiderivative along y2 with integration constant 0 in every d-graded piece.
BigradedSeries integrate_y2(const BigradedSeries& f);

inline BigradedSeries operator+(const BigradedSeries& f, const BigradedSeries& g) { return add(f, g); }
inline BigradedSeries operator-(const BigradedSeries& f, const BigradedSeries& g) { return sub(f, g); }
inline BigradedSeries operator*(const BigradedSeries& f, const BigradedSeries& g) { return mul(f, g); }
inline BigradedSeries operator*(const Rational& c, const BigradedSeries& f) { return scale(f, c); }

/// True iff every stored term sits at k = k_of_d(d).
bool support_matches(const BigradedSeries& f, const std::function<int(int)>& k_of_d);

/// Smallest d carrying a nonzero term, or -1 when empty.
int lowest_degree(const BigradedSeries& f);

/// One-line rendering "c*e^(d y1)*y2^k + ..." in key order, for diagnostics.
std::string to_string(const BigradedSeries& f);

std::ostream& operator<<(std::ostream& os, const BigradedSeries& f);

}  // namespace gw
