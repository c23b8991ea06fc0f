#include "zetagraph/poly.hpp"

#include <algorithm>
#include <sstream>

namespace zg {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::one_minus_t2_pow(unsigned k) { return RationalPoly{1, 0, -1}.pow(k); }

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPoly RationalPoly::reflect() const {
  RationalPoly out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  RationalPoly out = *this;
  const Rational lead = out.coeffs_.back();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

bool RationalPoly::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2)
    if (sgn(coeffs_[k]) != 0) return false;
  return true;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RationalPoly RationalPoly::pow(unsigned k) const {
  RationalPoly result{1};
  RationalPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (!unit) os << mag.get_str() << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& num, const RationalPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {RationalPoly{}, num};
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  const Rational& lead = den.leading();
  for (int k = num.degree(); k >= dd; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] / lead;
    if (sgn(q) == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    RationalPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

std::vector<std::pair<RationalPoly, int>> square_free_factorization(const RationalPoly& f) {
  std::vector<std::pair<RationalPoly, int>> out;
  if (f.degree() <= 0) return out;
  RationalPoly a = f.monic();
  RationalPoly da = a.derivative();
  RationalPoly g = gcd(a, da);
  RationalPoly b = divmod(a, g).first;
  RationalPoly c = divmod(da, g).first;
  RationalPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RationalPoly h = gcd(b, d);
    if (h.degree() > 0) out.emplace_back(h, i);
    b = divmod(b, h).first;
    c = divmod(d, h).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------

RationalFn::RationalFn(RationalPoly num) : num_(std::move(num)), den_(RationalPoly{1}) {}

RationalFn::RationalFn(RationalPoly num, RationalPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RationalFn RationalFn::one_minus_t2_pow(long k) {
  if (k >= 0) return RationalFn(RationalPoly::one_minus_t2_pow(static_cast<unsigned>(k)));
  return RationalFn(RationalPoly{1}, RationalPoly::one_minus_t2_pow(static_cast<unsigned>(-k)));
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = RationalPoly{1};
    return;
  }
  if (den_.degree() > 0) {
    RationalPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= Rational(1) / lead;
    den_ *= Rational(1) / lead;
  }
}

Rational RationalFn::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

RationalFn RationalFn::reflect() const { return RationalFn(num_.reflect(), den_.reflect()); }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFn RationalFn::pow(unsigned k) const { return RationalFn(num_.pow(k), den_.pow(k)); }

std::string RationalFn::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace zg
