#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetagraph/graph.hpp"

namespace zg {

/// A real argument left the region where the formula's logarithms are defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class SpectrumSource { transition, laplacian, torus_closed_form };

/// Sorted eigenvalues with multiplicity.
struct Spectrum {
  std::vector<double> values;
  SpectrumSource source = SpectrumSource::transition;
};

/// Eigenvalues of P = D^-1 A, computed from the similar symmetric matrix D^-1/2 A D^-1/2.
Spectrum transition_spectrum(const Graph& g);
/// Eigenvalues of D - A.
Spectrum laplacian_spectrum(const Graph& g);
/// (1/d) sum_j cos(2 pi k_j / N) over k in {0..N-1}^d.
Spectrum torus_spectrum(std::size_t d, std::size_t side);

enum class SpectralBasis { transition, laplacian };

/// n-th root of Z_a(G,t)^-1 for a (q+1)-regular graph from its spectrum:
/// (1-t^2)^(q-1) exp(mean over lambda of log F(lambda)), where
/// F = (1+qt^2)^2 - (q+1)^2 t^2 lambda^2 for P, and
/// F = (1-(q+1)t+qt^2+t lambda)(1+(q+1)t+qt^2-t lambda) for the Laplacian.
double zeta_a_from_spectrum(const Spectrum& s, std::size_t regular_degree, double t);
double zeta_a_spectral(const Graph& g, double t, SpectralBasis basis = SpectralBasis::transition);

/// Midpoint tensor grid on [0, 2pi)^d with G nodes per axis, nodes 2pi(k+1/2)/G.
/// d = 0 is the one-point grid.
struct QuadratureGrid {
  std::size_t d = 1;
  std::size_t points = 128;

  static QuadratureGrid make(std::size_t d, std::size_t points);
  std::size_t node_count() const;
  double node(std::size_t k) const;
};

inline constexpr std::size_t kDefaultGrid = 128;
/// Grid size used for d = 4 when the default is requested.
inline constexpr std::size_t kDefaultGrid4d = 48;
std::size_t default_grid(std::size_t d);

/// Mean of f(sum_j cos theta_j) over the grid (compensated summation, fixed order).
template <class F>
double torus_mean(const QuadratureGrid& grid, F&& f);

/// N^d-th root of zeta_a(T^d_N, t)^-1 from the closed-form torus spectrum.
double torus_finite_reciprocal(std::size_t d, std::size_t side, double t);
/// (1-t^2)^(2(d-1)) exp(integral of log{(1+(2d-1)t^2)^2 - 4t^2 (sum cos theta_j)^2}).
double torus_limit(std::size_t d, double t, const QuadratureGrid& grid);
/// log of torus_limit.
double log_zeta_torus(std::size_t d, double t, const QuadratureGrid& grid);

struct MahlerResult {
  double value = 0.0;
  std::size_t skipped_nodes = 0;      ///< nodes with |f| < 1e-14, left out of the mean
  std::vector<std::string> warnings;
};

/// m(sign * sum_j (X_j + 1/X_j) - c) over the grid; d = 0 gives log|c|.
MahlerResult mahler_measure(std::size_t d, int sign, double c, const QuadratureGrid& grid);

struct TorusMahlerReport {
  double lhs = 0.0, rhs = 0.0, diff = 0.0;
  double c = 0.0;
};

/// Compares log_zeta_torus with 2(d-1)log(1-t^2) + 2log(-t) + m(2S - c) + m(-2S - c),
/// c = (2d-1)t + 1/t; requires -1/(2d-1) < t < 0.
TorusMahlerReport torus_mahler_check(std::size_t d, double t, const QuadratureGrid& grid);

/// Midpoint-rule mean of log(1 - r cos theta) on G nodes.
double log_cos_mean(double r, std::size_t points);
/// log((1 + sqrt(1 - r^2)) / 2).
double log_cos_mean_closed_form(double r);

// ---------------------------------------------------------------------------

namespace detail {
struct Neumaier {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
    else comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};
}  // namespace detail

template <class F>
double torus_mean(const QuadratureGrid& grid, F&& f) {
  std::vector<double> cosines(grid.points);
  for (std::size_t k = 0; k < grid.points; ++k) cosines[k] = std::cos(grid.node(k));
  detail::Neumaier acc;
  std::vector<std::size_t> idx(grid.d, 0);
  const std::size_t total = grid.node_count();
  for (std::size_t count = 0; count < total; ++count) {
    double s = 0.0;
    for (std::size_t j = 0; j < grid.d; ++j) s += cosines[idx[j]];
    acc.add(f(s));
    for (std::size_t j = 0; j < grid.d; ++j) {
      if (++idx[j] < grid.points) break;
      idx[j] = 0;
    }
  }
  return acc.value() / static_cast<double>(total);
}

}  // namespace zg
