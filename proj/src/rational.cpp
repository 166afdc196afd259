#include "gw/rational.hpp"

#include <ostream>

#include "gw/errors.hpp"

namespace gw {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw DataError("Rational: cannot parse '" + text + "'");
  if (q.get_den() == 0)
    throw DataError("Rational: zero denominator in '" + text + "'");
  q.canonicalize();
  Rational r;
  r.v_ = q;
  return r;
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exp) {
  Rational r(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace gw
