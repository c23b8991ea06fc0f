#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zetagraph/matrix.hpp"
#include "zetagraph/poly.hpp"

namespace zg {

/// The field Q(zeta_N), elements stored as coordinate vectors in the power
/// basis 1, zeta, ..., zeta^(phi(N)-1).
class CyclotomicField {
 public:
  using Elem = std::vector<Rational>;

  explicit CyclotomicField(unsigned order);

  unsigned order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  const RationalPoly& minimal_poly() const noexcept { return phi_; }

  Elem zero() const { return Elem(dim_); }
  Elem from_rational(const Rational& r) const;
  /// zeta^j for any j (reduced mod N).
  const Elem& root_power(unsigned j) const { return powers_.at(j % order_); }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Rational& s, const Elem& a) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  bool is_rational(const Elem& a) const;
  Complex to_complex(const Elem& a) const;

  /// 0 or zeta^j when z lies within tol of one of them.
  std::optional<Elem> recognize(Complex z, double tol = 1e-9) const;

  /// Reduces a polynomial in zeta (index = power) to the basis.
  Elem reduce(const std::vector<Rational>& coeffs) const;

 private:
  unsigned order_;
  std::size_t dim_;
  RationalPoly phi_;
  std::vector<Elem> powers_;
  // basis images of zeta^k for k < 2 * dim, used by mul
  std::vector<Elem> wide_;
};

/// Polynomial in t over Q(zeta_N): component j is the coefficient
/// polynomial of zeta^j.
struct CycloPoly {
  std::vector<RationalPoly> parts;

  static CycloPoly from_rational(const CyclotomicField& f, const RationalPoly& p);
  bool is_rational() const;
  /// Component 0 when is_rational().
  RationalPoly rational_part() const { return parts.empty() ? RationalPoly{} : parts[0]; }
  ComplexPoly to_complex(const CyclotomicField& f, double tol = kDefaultRationalizeTol) const;
  CycloPoly reflect() const;
  CycloPoly scaled_by(const RationalFn& r) const;  ///< requires exact divisibility
};

CycloPoly multiply(const CyclotomicField& f, const CycloPoly& a, const CycloPoly& b);

/// det(I - t X + t^2 Y) over Q(zeta_N) by evaluation at integer nodes and
/// componentwise interpolation.
CycloPoly cyclotomic_pencil_det(const CyclotomicField& f, const Matrix<CyclotomicField::Elem>& x,
                                const Matrix<CyclotomicField::Elem>& y);

/// Lifts a complex matrix whose entries are 0 or N-th roots of unity (within tol).
std::optional<Matrix<CyclotomicField::Elem>> recognize_matrix(const CyclotomicField& f, const Matrix<Complex>& m,
                                                              double tol = 1e-9);

}  // namespace zg
