#include "gw/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gw {

BigradedSeries::BigradedSeries(int truncation) : truncation_(truncation) {
  if (truncation < 0) throw std::invalid_argument("BigradedSeries: negative truncation");
}

BigradedSeries BigradedSeries::monomial(int d, int k, const Rational& c, int truncation) {
  BigradedSeries s(truncation);
  if (d < 0 || k < 0) throw std::invalid_argument("BigradedSeries: negative exponent");
  if (d > truncation)
    throw TruncationError("monomial: d = " + std::to_string(d) + " exceeds truncation " +
                          std::to_string(truncation));
  if (!c.is_zero()) s.terms_.emplace(TermKey{d, k}, c);
  return s;
}

BigradedSeries BigradedSeries::from_terms(std::map<TermKey, Rational> terms, int truncation) {
  BigradedSeries s(truncation);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.d < 0 || it->first.k < 0)
      throw std::invalid_argument("BigradedSeries: negative exponent");
    if (it->first.d > truncation)
      throw TruncationError("from_terms: d = " + std::to_string(it->first.d) +
                            " exceeds truncation " + std::to_string(truncation));
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  s.terms_ = std::move(terms);
  return s;
}

Rational BigradedSeries::coefficient(int d, int k) const {
  if (d > truncation_)
    throw TruncationError("coefficient: d = " + std::to_string(d) +
                          " beyond truncation " + std::to_string(truncation_) +
                          " (unknown, not zero)");
  auto it = terms_.find(TermKey{d, k});
  return it == terms_.end() ? Rational(0) : it->second;
}

BigradedSeries add(const BigradedSeries& f, const BigradedSeries& g) {
  const int trunc = std::min(f.truncation(), g.truncation());
  std::map<TermKey, Rational> out;
  for (const auto& [key, c] : f.terms())
    if (key.d <= trunc) out.emplace(key, c);
  for (const auto& [key, c] : g.terms()) {
    if (key.d > trunc) continue;
    auto [it, inserted] = out.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return BigradedSeries::from_terms(std::move(out), trunc);
}

BigradedSeries sub(const BigradedSeries& f, const BigradedSeries& g) {
  return add(f, scale(g, Rational(-1)));
}

BigradedSeries mul(const BigradedSeries& f, const BigradedSeries& g) {
  const int trunc = std::min(f.truncation(), g.truncation());
  std::map<TermKey, Rational> out;
  for (const auto& [ka, ca] : f.terms()) {
    if (ka.d > trunc) continue;
    for (const auto& [kb, cb] : g.terms()) {
      if (ka.d + kb.d > trunc) continue;
      const TermKey key{ka.d + kb.d, ka.k + kb.k};
      auto [it, inserted] = out.emplace(key, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return BigradedSeries::from_terms(std::move(out), trunc);
}

BigradedSeries scale(const BigradedSeries& f, const Rational& c) {
  std::map<TermKey, Rational> out;
  if (!c.is_zero())
    for (const auto& [key, v] : f.terms()) out.emplace(key, c * v);
  return BigradedSeries::from_terms(std::move(out), f.truncation());
}

BigradedSeries d1(const BigradedSeries& f) {
  std::map<TermKey, Rational> out;
  for (const auto& [key, c] : f.terms())
    if (key.d > 0) out.emplace(key, Rational(key.d) * c);
  return BigradedSeries::from_terms(std::move(out), f.truncation());
}

BigradedSeries d2(const BigradedSeries& f) {
  std::map<TermKey, Rational> out;
  for (const auto& [key, c] : f.terms())
    if (key.k > 0) out.emplace(TermKey{key.d, key.k - 1}, Rational(key.k) * c);
  return BigradedSeries::from_terms(std::move(out), f.truncation());
}

BigradedSeries invert_unit(const BigradedSeries& f) {
  if (f.coefficient(0, 0) != Rational(1))
    throw NonUnitError("invert_unit: constant term is not 1");
  for (const auto& [key, c] : f.terms())
    if (key.d == 0 && key.k != 0)
      throw NonUnitError("invert_unit: d = 0 term at k = " + std::to_string(key.k));

  const int trunc = f.truncation();
  const BigradedSeries unit = BigradedSeries::one(trunc);
  const BigradedSeries n = sub(f, unit);  // every term has d >= 1
  BigradedSeries result = unit;
  BigradedSeries power = unit;
  // (-n)^j has lowest degree >= j, so j > trunc contributes nothing.
  for (int j = 1; j <= trunc; ++j) {
    power = mul(power, n);
    if (power.is_zero()) break;
    result = add(result, scale(power, Rational(j % 2 == 0 ? 1 : -1)));
  }
  return result;
}

BigradedSeries integrate_y2(const BigradedSeries& f) {
  std::map<TermKey, Rational> out;
  for (const auto& [key, c] : f.terms())
    out.emplace(TermKey{key.d, key.k + 1}, c / Rational(key.k + 1));
  return BigradedSeries::from_terms(std::move(out), f.truncation());
}

bool support_matches(const BigradedSeries& f, const std::function<int(int)>& k_of_d) {
  for (const auto& [key, c] : f.terms())
    if (key.k != k_of_d(key.d)) return false;
  return true;
}

int lowest_degree(const BigradedSeries& f) {
  int low = -1;
  for (const auto& [key, c] : f.terms())
    if (low < 0 || key.d < low) low = key.d;
  return low;
}

std::string to_string(const BigradedSeries& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (key.d != 0) os << "*e^(" << key.d << " y1)";
    if (key.k == 1) os << "*y2";
    if (key.k > 1) os << "*y2^" << key.k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BigradedSeries& f) {
  return os << to_string(f);
}

}  // namespace gw
