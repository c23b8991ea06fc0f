#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace zg {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

/// Raised when a series operation's constant-term precondition fails.
class SeriesDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Univariate polynomial in t with exact rational coefficients.
/// Coefficient k multiplies t^k; the zero polynomial has no coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<long> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, std::size_t degree);
  /// (1 - t^2)^k for k >= 0.
  static RationalPoly one_minus_t2_pow(unsigned k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  /// p(-t).
  RationalPoly reflect() const;
  RationalPoly derivative() const;
  RationalPoly monic() const;
  /// True when only even powers of t carry nonzero coefficients.
  bool is_even() const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  RationalPoly operator-() const;

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  RationalPoly pow(unsigned k) const;

  /// Human-readable form, e.g. "1 - 2*t^3 + t^6".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& num, const RationalPoly& den);
/// Monic greatest common divisor (zero if both inputs are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);
/// Square-free decomposition f = c * prod g_i^i (Yun); returns (g_i, i) with
/// nonconstant monic g_i. The constant c is dropped.
std::vector<std::pair<RationalPoly, int>> square_free_factorization(const RationalPoly& f);

/// num/den in lowest terms with monic denominator.
class RationalFn {
 public:
  RationalFn() : num_(RationalPoly{1}), den_(RationalPoly{1}) {}
  RationalFn(RationalPoly num);  // NOLINT(google-explicit-constructor)
  RationalFn(RationalPoly num, RationalPoly den);

  /// (1 - t^2)^k for any integer k.
  static RationalFn one_minus_t2_pow(long k);

  const RationalPoly& num() const noexcept { return num_; }
  const RationalPoly& den() const noexcept { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  Rational eval(const Rational& x) const;
  RationalFn reflect() const;

  RationalFn& operator*=(const RationalFn& o);
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  RationalFn pow(unsigned k) const;

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  RationalPoly num_;
  RationalPoly den_;
};

/// Power series in t truncated after t^order; coefficients beyond the
/// order are never read or produced.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);

  static TruncatedSeries from_poly(const RationalPoly& p, std::size_t order);
  /// Expansion of num/den; den(0) must be nonzero.
  static TruncatedSeries from_fn(const RationalFn& f, std::size_t order);

  std::size_t order() const noexcept { return order_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& s);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inverse() const;
  TruncatedSeries reflect() const;
  /// Truncation to a lower order.
  TruncatedSeries truncated(std::size_t order) const;
  RationalPoly to_poly() const;

  std::string to_string() const;

 private:
  std::size_t order_;
  std::vector<Rational> coeffs_;
};

/// exp(S); requires S(0) = 0.
TruncatedSeries series_exp(const TruncatedSeries& s);
/// log(S); requires S(0) = 1.
TruncatedSeries series_log(const TruncatedSeries& s);
/// S^r = exp(r log S); requires S(0) = 1.
TruncatedSeries series_pow(const TruncatedSeries& s, const Rational& r);

inline constexpr double kDefaultRationalizeTol = 1e-9;
inline constexpr long kRationalizeMaxDen = 1'000'000;

/// Thrown when a complex polynomial does not snap onto rational coefficients.
class RationalizationError : public std::runtime_error {
 public:
  RationalizationError(const std::string& what, std::vector<Complex> raw)
      : std::runtime_error(what), raw_(std::move(raw)) {}
  const std::vector<Complex>& raw() const noexcept { return raw_; }

 private:
  std::vector<Complex> raw_;
};

/// Nearest rational with denominator <= max_den if it lies within tol of x.
std::optional<Rational> snap_rational(double x, double tol = kDefaultRationalizeTol,
                                      long max_den = kRationalizeMaxDen);

/// Polynomial with complex double coefficients, carrying the tolerance
/// used to snap it back onto exact rationals.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<Complex> coeffs, double tol = kDefaultRationalizeTol);
  static ComplexPoly from_rational(const RationalPoly& p, double tol = kDefaultRationalizeTol);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }
  double tol() const noexcept { return tol_; }

  Complex eval(Complex x) const;
  ComplexPoly reflect() const;
  /// Exact division by (1 - t^2)^k; the remainder must vanish within tol.
  ComplexPoly divide_one_minus_t2(unsigned k) const;

  ComplexPoly& operator*=(const ComplexPoly& o);
  friend ComplexPoly operator*(ComplexPoly a, const ComplexPoly& b) { return a *= b; }
  ComplexPoly& operator+=(const ComplexPoly& o);
  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  ComplexPoly pow(unsigned k) const;

  /// Largest coefficient difference against another polynomial.
  double distance(const ComplexPoly& o) const;

  std::optional<RationalPoly> try_rationalize() const;
  /// Throws RationalizationError carrying the raw coefficients.
  RationalPoly rationalize() const;

 private:
  std::vector<Complex> coeffs_;
  double tol_ = kDefaultRationalizeTol;
};

}  // namespace zg
