#include "zetagraph/poly.hpp"

#include <sstream>

namespace zg {

TruncatedSeries::TruncatedSeries(std::size_t order) : order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::from_poly(const RationalPoly& p, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order && k < p.coeffs().size(); ++k) s.coeffs_[k] = p.coeffs()[k];
  return s;
}

TruncatedSeries TruncatedSeries::from_fn(const RationalFn& f, std::size_t order) {
  return from_poly(f.num(), order) * from_poly(f.den(), order).inverse();
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  const std::size_t order = std::min(order_, o.order_);
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  order_ = order;
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (sgn(coeffs_[0]) == 0) throw SeriesDomainError("series inverse needs a nonzero constant term");
  TruncatedSeries inv(order_);
  const Rational c0inv = Rational(1) / coeffs_[0];
  inv.coeffs_[0] = c0inv;
  for (std::size_t k = 1; k <= order_; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (sgn(coeffs_[j]) != 0) acc += coeffs_[j] * inv.coeffs_[k - j];
    inv.coeffs_[k] = -acc * c0inv;
  }
  return inv;
}

TruncatedSeries TruncatedSeries::reflect() const {
  TruncatedSeries out = *this;
  for (std::size_t k = 1; k <= order_; k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > order_) throw std::invalid_argument("cannot raise the truncation order of a series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1),
                         order);
}

RationalPoly TruncatedSeries::to_poly() const { return RationalPoly(coeffs_); }

std::string TruncatedSeries::to_string() const { return to_poly().to_string() + " + O(t^" + std::to_string(order_ + 1) + ")"; }

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (sgn(s[0]) != 0) throw SeriesDomainError("series_exp needs a zero constant term");
  const std::size_t order = s.order();
  TruncatedSeries e(order);
  e[0] = 1;
  // E' = S' E  =>  k e_k = sum_{j=1}^{k} j s_j e_{k-j}
  for (std::size_t k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (sgn(s[j]) != 0) acc += Rational(static_cast<long>(j)) * s[j] * e[k - j];
    e[k] = acc / static_cast<long>(k);
  }
  return e;
}

TruncatedSeries series_log(const TruncatedSeries& s) {
  if (s[0] != 1) throw SeriesDomainError("series_log needs constant term 1");
  const std::size_t order = s.order();
  TruncatedSeries l(order);
  // S L' = S'  =>  k l_k = k s_k - sum_{j=1}^{k-1} j l_j s_{k-j}
  for (std::size_t k = 1; k <= order; ++k) {
    Rational acc = Rational(static_cast<long>(k)) * s[k];
    for (std::size_t j = 1; j < k; ++j)
      if (sgn(s[k - j]) != 0) acc -= Rational(static_cast<long>(j)) * l[j] * s[k - j];
    l[k] = acc / static_cast<long>(k);
  }
  return l;
}

TruncatedSeries series_pow(const TruncatedSeries& s, const Rational& r) {
  if (s[0] != 1) throw SeriesDomainError("series_pow needs constant term 1");
  return series_exp(r * series_log(s));
}

}  // namespace zg
