#include "zetagraph/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "zetagraph/determinant.hpp"

namespace zg {

namespace {

RationalPoly cyclotomic_poly(unsigned n) {
  static std::map<unsigned, RationalPoly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Rational> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  RationalPoly p(std::move(c));
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = divmod(p, cyclotomic_poly(d)).first;
  cache.emplace(n, p);
  return p;
}

std::vector<Rational> padded(const RationalPoly& p, std::size_t n) {
  std::vector<Rational> v(n);
  for (std::size_t k = 0; k < p.coeffs().size() && k < n; ++k) v[k] = p.coeffs()[k];
  return v;
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned order) : order_(order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  phi_ = cyclotomic_poly(order);
  dim_ = static_cast<std::size_t>(phi_.degree());
  for (std::size_t k = 0; k < 2 * dim_; ++k) {
    std::vector<Rational> c(k + 1);
    c[k] = 1;
    wide_.push_back(reduce(c));
  }
  for (unsigned j = 0; j < order_; ++j) {
    std::vector<Rational> c(j + 1);
    c[j] = 1;
    powers_.push_back(reduce(c));
  }
}

CyclotomicField::Elem CyclotomicField::reduce(const std::vector<Rational>& coeffs) const {
  return padded(divmod(RationalPoly(coeffs), phi_).second, dim_);
}

CyclotomicField::Elem CyclotomicField::from_rational(const Rational& r) const {
  Elem e(dim_);
  e[0] = r;
  return e;
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = a[i] + b[i];
  return c;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = a[i] - b[i];
  return c;
}

CyclotomicField::Elem CyclotomicField::scale(const Rational& s, const Elem& a) const {
  Elem c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = s * a[i];
  return c;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  if (dim_ == 1) return {a[0] * b[0]};
  std::vector<Rational> prod(2 * dim_ - 1);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(b[j]) != 0) prod[i + j] += a[i] * b[j];
  }
  Elem c(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(dim_));
  for (std::size_t k = dim_; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) c[i] += prod[k] * wide_[k][i];
  }
  return c;
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in a cyclotomic field");
  if (dim_ == 1) return {1 / a[0]};
  // Extended Euclid: s * a + (...) * phi = gcd, a constant since phi is irreducible.
  RationalPoly r0 = phi_, r1(a);
  RationalPoly s0, s1{1};
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RationalPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational c = r1.coeff(0);
  return padded(divmod(Rational(1) / c * s1, phi_).second, dim_);
}

bool CyclotomicField::is_zero(const Elem& a) const {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

bool CyclotomicField::is_rational(const Elem& a) const {
  for (std::size_t i = 1; i < dim_; ++i)
    if (sgn(a[i]) != 0) return false;
  return true;
}

Complex CyclotomicField::to_complex(const Elem& a) const {
  Complex s{};
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
    s += a[i].get_d() * Complex{std::cos(angle), std::sin(angle)};
  }
  return s;
}

std::optional<CyclotomicField::Elem> CyclotomicField::recognize(Complex z, double tol) const {
  if (std::abs(z) < tol) return zero();
  for (unsigned j = 0; j < order_; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_);
    if (std::abs(z - Complex{std::cos(angle), std::sin(angle)}) < tol) return root_power(j);
  }
  return std::nullopt;
}

CycloPoly CycloPoly::from_rational(const CyclotomicField& f, const RationalPoly& p) {
  CycloPoly c;
  c.parts.assign(f.dim(), RationalPoly{});
  c.parts[0] = p;
  return c;
}

bool CycloPoly::is_rational() const {
  for (std::size_t j = 1; j < parts.size(); ++j)
    if (!parts[j].is_zero()) return false;
  return true;
}

ComplexPoly CycloPoly::to_complex(const CyclotomicField& f, double tol) const {
  std::size_t len = 0;
  for (const auto& p : parts) len = std::max(len, p.coeffs().size());
  std::vector<Complex> c(len);
  for (std::size_t k = 0; k < len; ++k) {
    CyclotomicField::Elem e(f.dim());
    for (std::size_t j = 0; j < parts.size(); ++j) e[j] = parts[j].coeff(k);
    c[k] = f.to_complex(e);
  }
  return ComplexPoly(std::move(c), tol);
}

CycloPoly CycloPoly::reflect() const {
  CycloPoly out = *this;
  for (auto& p : out.parts) p = p.reflect();
  return out;
}

CycloPoly CycloPoly::scaled_by(const RationalFn& r) const {
  CycloPoly out;
  for (const auto& p : parts) {
    auto [q, rem] = divmod(p * r.num(), r.den());
    if (!rem.is_zero()) throw std::domain_error("cyclotomic polynomial is not divisible by the requested factor");
    out.parts.push_back(std::move(q));
  }
  return out;
}

CycloPoly multiply(const CyclotomicField& f, const CycloPoly& a, const CycloPoly& b) {
  const std::size_t dim = f.dim();
  std::vector<RationalPoly> wide(2 * dim - 1);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a.parts[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j)
      if (!b.parts[j].is_zero()) wide[i + j] += a.parts[i] * b.parts[j];
  }
  CycloPoly out;
  out.parts.assign(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(dim));
  for (std::size_t k = dim; k < wide.size(); ++k) {
    if (wide[k].is_zero()) continue;
    const auto& basis = f.root_power(static_cast<unsigned>(k));
    for (std::size_t i = 0; i < dim; ++i)
      if (sgn(basis[i]) != 0) out.parts[i] += basis[i] * wide[k];
  }
  return out;
}

namespace {

using Elem = CyclotomicField::Elem;

Elem field_det(const CyclotomicField& f, std::vector<Elem> a, std::size_t n) {
  Elem d = f.from_rational(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && f.is_zero(a[piv * n + k])) ++piv;
    if (piv == n) return f.zero();
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      d = f.scale(-1, d);
    }
    d = f.mul(d, a[k * n + k]);
    const Elem inv = f.inv(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (f.is_zero(a[i * n + k])) continue;
      const Elem factor = f.mul(a[i * n + k], inv);
      for (std::size_t j = k + 1; j < n; ++j)
        if (!f.is_zero(a[k * n + j])) a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[k * n + j]));
    }
  }
  return d;
}

}  // namespace

CycloPoly cyclotomic_pencil_det(const CyclotomicField& f, const Matrix<Elem>& x, const Matrix<Elem>& y) {
  detail::require(x.is_square() && y.rows() == x.rows() && y.cols() == x.cols(), "cyclotomic_pencil_det: shape mismatch");
  const std::size_t n = x.rows();
  if (n == 0) return CycloPoly::from_rational(f, RationalPoly{1});
  bool y_zero = true;
  for (const auto& e : y.data()) y_zero = y_zero && f.is_zero(e);
  const std::size_t bound = n * (y_zero ? 1 : 2);
  const std::int64_t start = -static_cast<std::int64_t>(bound / 2);

  std::vector<Integer> nodes(bound + 1);
  std::vector<std::vector<Rational>> values(f.dim(), std::vector<Rational>(bound + 1));
  std::vector<Elem> at(n * n);
  for (std::size_t k = 0; k <= bound; ++k) {
    const long node = static_cast<long>(start + static_cast<std::int64_t>(k));
    nodes[k] = node;
    const Rational s(node), s2(node * node);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Elem e = f.sub(f.scale(s2, y(i, j)), f.scale(s, x(i, j)));
        if (i == j) e[0] += 1;
        at[i * n + j] = std::move(e);
      }
    const Elem d = field_det(f, at, n);
    for (std::size_t c = 0; c < f.dim(); ++c) values[c][k] = d[c];
  }
  CycloPoly out;
  for (std::size_t c = 0; c < f.dim(); ++c) out.parts.push_back(interpolate(nodes, std::move(values[c])));
  return out;
}

std::optional<Matrix<Elem>> recognize_matrix(const CyclotomicField& f, const Matrix<Complex>& m, double tol) {
  Matrix<Elem> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto e = f.recognize(m(i, j), tol);
      if (!e) return std::nullopt;
      out(i, j) = std::move(*e);
    }
  return out;
}

}  // namespace zg
