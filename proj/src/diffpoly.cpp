#include "gw/diffpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gw {

int JetMonomial::total_degree() const {
  int deg = y2_pow;
  for (const auto& [v, e] : jets) deg += e;
  return deg;
}

int JetMonomial::max_jet_order() const {
  int order = -1;
  for (const auto& [v, e] : jets) order = std::max(order, v.a + v.b);
  return order;
}

JetMonomial JetMonomial::times_jet(JetVar v, int count) const {
  JetMonomial out = *this;
  auto it = std::lower_bound(out.jets.begin(), out.jets.end(), v,
                             [](const auto& p, const JetVar& x) { return p.first < x; });
  if (it != out.jets.end() && it->first == v)
    it->second += count;
  else
    out.jets.insert(it, {v, count});
  return out;
}

bool operator<(const JetMonomial& lhs, const JetMonomial& rhs) {
  const int dl = lhs.total_degree(), dr = rhs.total_degree();
  if (dl != dr) return dl < dr;
  if (lhs.y2_pow != rhs.y2_pow) return lhs.y2_pow < rhs.y2_pow;
  return lhs.jets < rhs.jets;
}

DiffPoly DiffPoly::constant(const Rational& c) {
  DiffPoly p;
  if (!c.is_zero()) p.terms_.emplace(JetMonomial{}, c);
  return p;
}

DiffPoly DiffPoly::y2(int power) {
  if (power < 0) throw std::invalid_argument("DiffPoly::y2: negative power");
  DiffPoly p;
  p.terms_.emplace(JetMonomial{power, {}}, Rational(1));
  return p;
}

DiffPoly DiffPoly::jet(int a, int b, int power) {
  if (a < 0 || b < 0 || power < 1) throw std::invalid_argument("DiffPoly::jet: bad indices");
  DiffPoly p;
  p.terms_.emplace(JetMonomial{}.times_jet(JetVar{a, b}, power), Rational(1));
  return p;
}

DiffPoly DiffPoly::from_terms(std::map<JetMonomial, Rational> terms) {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  DiffPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Rational DiffPoly::coefficient(const JetMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int DiffPoly::max_a() const {
  int a = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.jets) a = std::max(a, v.a);
  return a;
}

int DiffPoly::max_jet_order() const {
  int order = -1;
  for (const auto& [m, c] : terms_) order = std::max(order, m.max_jet_order());
  return order;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) { return *this += -o; }

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  std::map<JetMonomial, Rational> out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      JetMonomial m = ma;
      m.y2_pow += mb.y2_pow;
      for (const auto& [v, e] : mb.jets) m = m.times_jet(v, e);
      auto [it, inserted] = out.emplace(std::move(m), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return DiffPoly::from_terms(std::move(out));
}

DiffPoly operator*(const Rational& c, const DiffPoly& p) {
  std::map<JetMonomial, Rational> out;
  if (!c.is_zero())
    for (const auto& [m, v] : p.terms()) out.emplace(m, c * v);
  return DiffPoly::from_terms(std::move(out));
}

DiffPoly pow(const DiffPoly& p, int exp) {
  if (exp < 0) throw std::invalid_argument("pow(DiffPoly): negative exponent");
  DiffPoly r = DiffPoly::constant(Rational(1));
  for (int i = 0; i < exp; ++i) r = r * p;
  return r;
}

DiffPoly dp_derive_y2(const DiffPoly& p) {
  DiffPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.y2_pow > 0) {
      JetMonomial lowered = m;
      lowered.y2_pow -= 1;
      out += Rational(m.y2_pow) * c * DiffPoly::from_terms({{lowered, Rational(1)}});
    }
    for (size_t i = 0; i < m.jets.size(); ++i) {
      const auto [v, e] = m.jets[i];
      JetMonomial advanced = m;
      if (e == 1)
        advanced.jets.erase(advanced.jets.begin() + static_cast<std::ptrdiff_t>(i));
      else
        advanced.jets[i].second -= 1;
      advanced = advanced.times_jet(JetVar{v.a, v.b + 1});
      out += Rational(e) * c * DiffPoly::from_terms({{advanced, Rational(1)}});
    }
  }
  return out;
}

namespace {

// Normal form of a single jet under the grading rewrite; recursion depth a.
DiffPoly jet_normal_form(int a, int b) {
  if (a == 0) return DiffPoly::jet(0, b);
  const DiffPoly up = jet_normal_form(a - 1, b + 1);
  const DiffPoly down = jet_normal_form(a - 1, b);
  return Rational(1, 3) * (DiffPoly::y2() * up) + Rational(b + 1, 3) * down;
}

}  // namespace

DiffPoly normalize_ll(const DiffPoly& p) {
  DiffPoly out;
  for (const auto& [m, c] : p.terms()) {
    DiffPoly term = c * DiffPoly::y2(m.y2_pow);
    for (const auto& [v, e] : m.jets) {
      const DiffPoly factor = v.a == 0 ? DiffPoly::jet(v.a, v.b) : jet_normal_form(v.a, v.b);
      term = term * pow(factor, e);
    }
    out += term;
  }
  return out;
}

std::string to_string(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (m.y2_pow == 1) os << " * y2";
    if (m.y2_pow > 1) os << " * y2^" << m.y2_pow;
    for (const auto& [v, e] : m.jets) {
      os << " * G[" << v.a << "," << v.b << "]";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiffPoly& p) {
  return os << to_string(p);
}

BigradedSeries eval_series(const DiffPoly& p, const BigradedSeries& gamma) {
  const int trunc = gamma.truncation();
  std::map<JetVar, BigradedSeries> jet_cache;
  auto jet_series = [&](JetVar v) -> const BigradedSeries& {
    auto it = jet_cache.find(v);
    if (it != jet_cache.end()) return it->second;
    BigradedSeries s = gamma;
    for (int i = 0; i < v.a; ++i) s = d1(s);
    for (int i = 0; i < v.b; ++i) s = d2(s);
    return jet_cache.emplace(v, std::move(s)).first->second;
  };

  BigradedSeries result(trunc);
  const BigradedSeries y2s = BigradedSeries::y2(trunc);
  for (const auto& [m, c] : p.terms()) {
    BigradedSeries term = BigradedSeries::monomial(0, m.y2_pow, c, trunc);
    for (const auto& [v, e] : m.jets)
      for (int i = 0; i < e; ++i) term = term * jet_series(v);
    result = result + term;
  }
  return result;
}

Rational JetPoint::jet_value(int a, int b) const {
  if (a == 0) {
    if (b >= static_cast<int>(base.size()))
      throw std::invalid_argument("JetPoint: no value for J(0," + std::to_string(b) + ")");
    return base[static_cast<size_t>(b)];
  }
  return y2 / Rational(3) * jet_value(a - 1, b + 1) +
         Rational(b + 1, 3) * jet_value(a - 1, b);
}

Rational eval_point(const DiffPoly& p, const JetPoint& point) {
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c * pow(point.y2, static_cast<unsigned>(m.y2_pow));
    for (const auto& [v, e] : m.jets)
      term *= pow(point.jet_value(v.a, v.b), static_cast<unsigned>(e));
    sum += term;
  }
  return sum;
}

}  // namespace gw
