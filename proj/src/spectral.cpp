#include "zetagraph/spectral.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace zg {

namespace {

constexpr double kSingularTol = 1e-14;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Spectrum symmetric_spectrum(const Eigen::MatrixXd& m, SpectrumSource src) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  Spectrum s;
  s.source = src;
  const auto& ev = solver.eigenvalues();
  s.values.assign(ev.data(), ev.data() + ev.size());
  std::sort(s.values.begin(), s.values.end());
  return s;
}

std::size_t regular_or_throw(const Graph& g) {
  auto r = g.regular_degree();
  if (!r) throw DomainError("spectral formula needs a regular graph");
  return *r;
}

double checked_log(double arg, double lambda) {
  if (!(arg > 0.0))
    throw DomainError("nonpositive log argument " + fmt(arg) + " at eigenvalue " + fmt(lambda));
  return std::log(arg);
}

double torus_integrand(std::size_t d, double t, double s) {
  const double a = 1.0 + (2.0 * static_cast<double>(d) - 1.0) * t * t;
  return a * a - 4.0 * t * t * s * s;
}

void require_grid(std::size_t d, std::size_t points, bool allow_constant = false) {
  if (d == 0 && !allow_constant) throw std::invalid_argument("torus dimension must be at least 1");
  if (points < 2) throw std::invalid_argument("quadrature grid needs at least 2 points per axis");
}

}  // namespace

Spectrum transition_spectrum(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto a = g.adjacency();
  Eigen::MatrixXd m(n, n);
  std::vector<double> inv_sqrt(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto deg = g.degree(static_cast<Vertex>(v));
    inv_sqrt[v] = deg == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(deg));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          static_cast<double>(a(i, j)) * inv_sqrt[i] * inv_sqrt[j];
  return symmetric_spectrum(m, SpectrumSource::transition);
}

Spectrum laplacian_spectrum(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto a = g.adjacency();
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = -static_cast<double>(a(i, j));
  for (std::size_t v = 0; v < n; ++v)
    m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) += static_cast<double>(g.degree(static_cast<Vertex>(v)));
  return symmetric_spectrum(m, SpectrumSource::laplacian);
}

Spectrum torus_spectrum(std::size_t d, std::size_t side) {
  if (d == 0) throw std::invalid_argument("torus dimension must be at least 1");
  if (side < 3) throw std::invalid_argument("torus side must be at least 3");
  std::vector<double> cosines(side);
  for (std::size_t k = 0; k < side; ++k)
    cosines[k] = std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(side));
  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) total *= side;
  Spectrum s;
  s.source = SpectrumSource::torus_closed_form;
  s.values.reserve(total);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t count = 0; count < total; ++count) {
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) sum += cosines[idx[j]];
    s.values.push_back(sum / static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j) {
      if (++idx[j] < side) break;
      idx[j] = 0;
    }
  }
  std::sort(s.values.begin(), s.values.end());
  return s;
}

double zeta_a_from_spectrum(const Spectrum& s, std::size_t regular_degree, double t) {
  if (s.values.empty()) throw std::invalid_argument("empty spectrum");
  if (regular_degree == 0) throw DomainError("regular degree must be positive");
  const double k = static_cast<double>(regular_degree);
  const double q = k - 1.0;
  const double t2 = t * t;
  detail::Neumaier acc;
  for (double lambda : s.values) {
    double arg;
    if (s.source == SpectrumSource::laplacian) {
      const double lo = 1.0 - k * t + q * t2 + t * lambda;
      const double hi = 1.0 + k * t + q * t2 - t * lambda;
      arg = lo * hi;
    } else {
      const double a = 1.0 + q * t2;
      arg = a * a - k * k * t2 * lambda * lambda;
    }
    acc.add(checked_log(arg, lambda));
  }
  const double mean = acc.value() / static_cast<double>(s.values.size());
  return std::pow(1.0 - t2, q - 1.0) * std::exp(mean);
}

double zeta_a_spectral(const Graph& g, double t, SpectralBasis basis) {
  const std::size_t k = regular_or_throw(g);
  const Spectrum s = basis == SpectralBasis::laplacian ? laplacian_spectrum(g) : transition_spectrum(g);
  return zeta_a_from_spectrum(s, k, t);
}

QuadratureGrid QuadratureGrid::make(std::size_t d, std::size_t points) {
  require_grid(d, points, true);
  return QuadratureGrid{d, points};
}

std::size_t QuadratureGrid::node_count() const {
  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) total *= points;
  return total;
}

double QuadratureGrid::node(std::size_t k) const {
  return 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(points);
}

std::size_t default_grid(std::size_t d) {
  if (d <= 3) return kDefaultGrid;
  if (d == 4) return kDefaultGrid4d;
  return 16;
}

double torus_finite_reciprocal(std::size_t d, std::size_t side, double t) {
  const Spectrum s = torus_spectrum(d, side);
  const double dd = static_cast<double>(d);
  const double a = 1.0 + (2.0 * dd - 1.0) * t * t;
  detail::Neumaier acc;
  for (double lambda : s.values) acc.add(checked_log(a * a - 4.0 * dd * dd * t * t * lambda * lambda, lambda));
  const double mean = acc.value() / static_cast<double>(s.values.size());
  return std::pow(1.0 - t * t, 2.0 * (dd - 1.0)) * std::exp(mean);
}

double log_zeta_torus(std::size_t d, double t, const QuadratureGrid& grid) {
  require_grid(grid.d, grid.points);
  if (grid.d != d) throw std::invalid_argument("quadrature grid dimension does not match d");
  if (!(1.0 - t * t > 0.0)) throw DomainError("|t| must be below 1, got t = " + fmt(t));
  const double mean = torus_mean(grid, [&](double s) {
    const double f = torus_integrand(d, t, s);
    if (!(f > 0.0)) throw DomainError("torus integrand nonpositive (" + fmt(f) + ") at cosine sum " + fmt(s));
    return std::log(f);
  });
  return 2.0 * (static_cast<double>(d) - 1.0) * std::log1p(-t * t) + mean;
}

double torus_limit(std::size_t d, double t, const QuadratureGrid& grid) {
  return std::exp(log_zeta_torus(d, t, grid));
}

MahlerResult mahler_measure(std::size_t d, int sign, double c, const QuadratureGrid& grid) {
  require_grid(grid.d, grid.points, true);
  if (grid.d != d) throw std::invalid_argument("quadrature grid dimension does not match d");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  MahlerResult r;
  if (std::abs(c) <= 2.0 * static_cast<double>(d))
    r.warnings.push_back("|c| <= 2d: the integrand vanishes somewhere on the torus");

  std::vector<double> cosines(grid.points);
  for (std::size_t k = 0; k < grid.points; ++k) cosines[k] = std::cos(grid.node(k));
  detail::Neumaier acc;
  std::vector<std::size_t> idx(d, 0);
  std::vector<std::string> singular;
  const std::size_t total = grid.node_count();
  for (std::size_t count = 0; count < total; ++count) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) s += cosines[idx[j]];
    const double f = static_cast<double>(sign) * 2.0 * s - c;
    if (std::abs(f) < kSingularTol) {
      ++r.skipped_nodes;
      if (singular.size() < 16) {
        std::ostringstream os;
        os << '(';
        for (std::size_t j = 0; j < d; ++j) os << (j ? "," : "") << idx[j];
        os << ')';
        singular.push_back(os.str());
      }
    } else {
      acc.add(std::log(std::abs(f)));
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (++idx[j] < grid.points) break;
      idx[j] = 0;
    }
  }
  if (r.skipped_nodes > 0) {
    std::string msg = "singular integrand at " + std::to_string(r.skipped_nodes) + " node(s):";
    for (const auto& s : singular) msg += " " + s;
    if (r.skipped_nodes > singular.size()) msg += " ...";
    r.warnings.push_back(msg);
  }
  const std::size_t used = total - r.skipped_nodes;
  r.value = used == 0 ? 0.0 : acc.value() / static_cast<double>(used);
  return r;
}

TorusMahlerReport torus_mahler_check(std::size_t d, double t, const QuadratureGrid& grid) {
  const double bound = -1.0 / (2.0 * static_cast<double>(d) - 1.0);
  if (!(t > bound && t < 0.0))
    throw DomainError("t = " + fmt(t) + " outside the open interval (" + fmt(bound) + ", 0)");
  TorusMahlerReport r;
  r.c = (2.0 * static_cast<double>(d) - 1.0) * t + 1.0 / t;
  r.lhs = log_zeta_torus(d, t, grid);
  const double plus = mahler_measure(d, 1, r.c, grid).value;
  const double minus = mahler_measure(d, -1, r.c, grid).value;
  r.rhs = 2.0 * (static_cast<double>(d) - 1.0) * std::log1p(-t * t) + 2.0 * std::log(-t) + plus + minus;
  r.diff = std::abs(r.lhs - r.rhs);
  return r;
}

double log_cos_mean(double r, std::size_t points) {
  if (std::abs(r) > 1.0) throw DomainError("|r| must be at most 1, got r = " + fmt(r));
  const QuadratureGrid grid = QuadratureGrid::make(1, points);
  return torus_mean(grid, [&](double s) { return std::log1p(-r * s); });
}

double log_cos_mean_closed_form(double r) {
  if (std::abs(r) > 1.0) throw DomainError("|r| must be at most 1, got r = " + fmt(r));
  return std::log((1.0 + std::sqrt(1.0 - r * r)) / 2.0);
}

}  // namespace zg
