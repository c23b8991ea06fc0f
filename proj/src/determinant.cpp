#include "zetagraph/determinant.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace zg {

namespace {

// Fraction-free Gaussian elimination on an integer matrix, in place.
Integer bareiss_det(Matrix<Integer>& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  Integer tmp;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(a(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    const Integer& pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = sgn(a(i, k)) == 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(tmp.get_mpz_t(), a(i, j).get_mpz_t(), pivot.get_mpz_t());
        if (!lead_zero) mpz_submul(tmp.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = pivot;
  }
  Integer d = a(n - 1, n - 1);
  return sign > 0 ? d : Integer(-d);
}

int max_entry_degree(const Matrix<RationalPoly>& m) {
  int d = 0;
  for (const auto& e : m.data()) d = std::max(d, e.degree());
  return d;
}

int max_entry_degree(const Matrix<ComplexPoly>& m) {
  int d = 0;
  for (const auto& e : m.data()) d = std::max(d, e.degree());
  return d;
}

}  // namespace

RationalPoly interpolate(const std::vector<Integer>& x, std::vector<Rational> c) {
  detail::require(x.size() == c.size() && !x.empty(), "interpolate: node/value mismatch");
  const std::size_t n = x.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / Rational(x[i] - x[i - j]);
      if (i == j) break;
    }
  std::vector<Rational> p{c[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // p <- p * (t - x_i) + c_i
    std::vector<Rational> next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= p[k] * x[i];
    }
    next[0] += c[i];
    p = std::move(next);
  }
  return RationalPoly(std::move(p));
}

Rational det(const Matrix<Rational>& m) {
  detail::require(m.is_square(), "det: matrix not square");
  const std::size_t n = m.rows();
  Matrix<Integer> a(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    scale *= row_lcm;
  }
  Rational d(bareiss_det(a), scale);
  d.canonicalize();
  return d;
}

RationalPoly poly_det(const Matrix<RationalPoly>& m, std::optional<std::int64_t> first_node) {
  detail::require(m.is_square(), "poly_det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return RationalPoly{1};
  const std::size_t bound = n * static_cast<std::size_t>(max_entry_degree(m));
  const std::int64_t start = first_node.value_or(-static_cast<std::int64_t>(bound / 2));

  std::vector<Integer> nodes(bound + 1);
  std::vector<Rational> values(bound + 1);
  Matrix<Rational> at(n, n);
  for (std::size_t k = 0; k <= bound; ++k) {
    nodes[k] = Integer(static_cast<long>(start + static_cast<std::int64_t>(k)));
    const Rational x(nodes[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).eval(x);
    values[k] = det(at);
  }
  return interpolate(nodes, std::move(values));
}

Complex det(const Matrix<Complex>& m) {
  detail::require(m.is_square(), "det: matrix not square");
  Matrix<Complex> a = m;
  const std::size_t n = a.rows();
  Complex d{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        piv = i;
      }
    if (best == 0.0) return Complex{};
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      d = -d;
    }
    const Complex pivot = a(k, k);
    d *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a(i, k) / pivot;
      if (f == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

ComplexPoly cpoly_det(const Matrix<ComplexPoly>& m, double tol) {
  detail::require(m.is_square(), "cpoly_det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return ComplexPoly({Complex{1.0, 0.0}}, tol);
  const std::size_t count = n * static_cast<std::size_t>(max_entry_degree(m)) + 1;
  assert(count >= 1);

  auto root = [count](std::size_t k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % count) / static_cast<double>(count);
    return Complex{std::cos(angle), std::sin(angle)};
  };

  std::vector<Complex> values(count);
  Matrix<Complex> at(n, n);
  for (std::size_t k = 0; k < count; ++k) {
    const Complex w = root(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).eval(w);
    values[k] = det(at);
  }
  std::vector<Complex> coeffs(count);
  for (std::size_t c = 0; c < count; ++c) {
    Complex acc{};
    for (std::size_t k = 0; k < count; ++k) acc += values[k] * std::conj(root(k * c));
    acc /= static_cast<double>(count);
    if (std::fabs(acc.imag()) < tol) acc.imag(0.0);
    coeffs[c] = acc;
  }
  return ComplexPoly(std::move(coeffs), tol);
}

Matrix<RationalPoly> to_poly_matrix(const Matrix<long>& m) {
  return map_entries<RationalPoly>(m, [](long v) { return RationalPoly::constant(Rational(v)); });
}

Matrix<RationalPoly> quadratic_pencil(const Matrix<Rational>& x, const Matrix<Rational>& y) {
  detail::require(x.is_square() && y.rows() == x.rows() && y.cols() == x.cols(), "quadratic_pencil: shape mismatch");
  const std::size_t n = x.rows();
  Matrix<RationalPoly> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = RationalPoly(std::vector<Rational>{Rational(i == j ? 1 : 0), -x(i, j), y(i, j)});
  return out;
}

Matrix<RationalPoly> quadratic_pencil(const Matrix<long>& x, const Matrix<long>& y) {
  auto lift = [](long v) { return Rational(v); };
  return quadratic_pencil(map_entries<Rational>(x, lift), map_entries<Rational>(y, lift));
}

Matrix<ComplexPoly> quadratic_pencil(const Matrix<Complex>& x, const Matrix<Complex>& y, double tol) {
  detail::require(x.is_square() && y.rows() == x.rows() && y.cols() == x.cols(), "quadratic_pencil: shape mismatch");
  const std::size_t n = x.rows();
  Matrix<ComplexPoly> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = ComplexPoly({Complex{i == j ? 1.0 : 0.0, 0.0}, -x(i, j), y(i, j)}, tol);
  return out;
}

}  // namespace zg
