#include "zetagraph/poly.hpp"

#include <cmath>
#include <sstream>

namespace zg {

namespace {

// A true rational p/q recovered from double arithmetic sits far closer to x
// than a generic convergent does; |x - p/q| * q^2 bounds that closeness.
constexpr double kReconstructionSlack = 1e-3;

}  // namespace

std::optional<Rational> snap_rational(double x, double tol, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  const double nearest = std::nearbyint(x);
  if (std::fabs(x - nearest) <= tol) {
    Integer z;
    mpz_set_d(z.get_mpz_t(), nearest);
    return Rational(z);
  }
  if (std::fabs(x) > 1e9) return std::nullopt;

  // Continued-fraction convergents h/k of x.
  long double rest = x;
  long long h_prev = 1, h = static_cast<long long>(std::floor(rest));
  long long k_prev = 0, k = 1;
  rest -= std::floor(rest);
  while (rest > 1e-18L) {
    rest = 1.0L / rest;
    const long double a = std::floor(rest);
    rest -= a;
    if (a > 1e12L) break;
    const long long ai = static_cast<long long>(a);
    const long long h_next = ai * h + h_prev;
    const long long k_next = ai * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    const double err = std::fabs(x - static_cast<double>(h) / static_cast<double>(k));
    if (err <= tol) {
      if (err * static_cast<double>(k) * static_cast<double>(k) > kReconstructionSlack) return std::nullopt;
      Rational r(Integer(static_cast<long>(h)), Integer(static_cast<long>(k)));
      r.canonicalize();
      return r;
    }
  }
  return std::nullopt;
}

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs, double tol) : coeffs_(std::move(coeffs)), tol_(tol) {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

ComplexPoly ComplexPoly::from_rational(const RationalPoly& p, double tol) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.emplace_back(q.get_d(), 0.0);
  return ComplexPoly(std::move(c), tol);
}

Complex ComplexPoly::eval(Complex x) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexPoly ComplexPoly::reflect() const {
  ComplexPoly out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

ComplexPoly ComplexPoly::divide_one_minus_t2(unsigned k) const {
  std::vector<Complex> c = coeffs_;
  for (unsigned step = 0; step < k; ++step) {
    // Solve c = (1 - t^2) q from the low end: q_j = c_j + q_{j-2}.
    if (c.size() < 3) throw RationalizationError("polynomial not divisible by (1 - t^2)", coeffs_);
    std::vector<Complex> q(c.size() - 2);
    for (std::size_t j = 0; j < q.size(); ++j) q[j] = c[j] + (j >= 2 ? q[j - 2] : Complex{});
    // Remainder check on the two top coefficients.
    const std::size_t n = c.size();
    const Complex r1 = c[n - 1] + q[n - 3];
    const Complex r2 = c[n - 2] + (n >= 4 ? q[n - 4] : Complex{});
    double scale = 1.0;
    for (const auto& z : c) scale = std::max(scale, std::abs(z));
    if (std::abs(r1) > tol_ * scale || std::abs(r2) > tol_ * scale)
      throw RationalizationError("polynomial not divisible by (1 - t^2)", coeffs_);
    c = std::move(q);
  }
  return ComplexPoly(std::move(c), tol_);
}

ComplexPoly& ComplexPoly::operator*=(const ComplexPoly& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Complex> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  tol_ = std::max(tol_, o.tol_);
  return *this;
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

ComplexPoly ComplexPoly::pow(unsigned k) const {
  ComplexPoly result(std::vector<Complex>{Complex{1.0, 0.0}}, tol_);
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

double ComplexPoly::distance(const ComplexPoly& o) const {
  const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  double d = 0.0;
  for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(coeff(k) - o.coeff(k)));
  return d;
}

std::optional<RationalPoly> ComplexPoly::try_rationalize() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& z : coeffs_) {
    if (std::fabs(z.imag()) >= tol_) return std::nullopt;
    auto r = snap_rational(z.real(), tol_);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return RationalPoly(std::move(out));
}

RationalPoly ComplexPoly::rationalize() const {
  auto r = try_rationalize();
  if (!r) {
    std::ostringstream os;
    os.precision(17);
    os << "coefficients do not rationalize within tol " << tol_ << ":";
    for (const auto& z : coeffs_) os << " (" << z.real() << "," << z.imag() << ")";
    throw RationalizationError(os.str(), coeffs_);
  }
  return *r;
}

}  // namespace zg
