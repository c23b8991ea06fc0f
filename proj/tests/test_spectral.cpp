#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "zetagraph/spectral.hpp"
#include "zetagraph/zeta.hpp"

using namespace zg;

namespace {

double exact_root(const Graph& g, double t) {
  const double v = alt_reciprocal_graph(g).value.eval(Rational(t)).get_d();
  REQUIRE(v > 0);
  return std::pow(v, 1.0 / static_cast<double>(g.vertex_count()));
}

void check_values(const Spectrum& s, std::vector<double> want) {
  REQUIRE(s.values.size() == want.size());
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(s.values[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

}  // namespace

TEST_CASE("spectra") {
  check_values(transition_spectrum(complete_graph(2)), {-1, 1});
  check_values(transition_spectrum(complete_graph(3)), {-0.5, -0.5, 1});
  check_values(laplacian_spectrum(complete_graph(3)), {0, 3, 3});
  check_values(torus_spectrum(2, 3), {1, 0.25, 0.25, 0.25, 0.25, -0.5, -0.5, -0.5, -0.5});
  const auto t = torus_spectrum(2, 4);
  CHECK(t.values.size() == 16);
  check_values(transition_spectrum(torus_graph(2, 4)), t.values);
  for (const Graph& g : {cycle_graph(7), complete_graph(5), torus_graph(2, 5), path_graph(4)}) {
    for (double l : transition_spectrum(g).values) {
      CHECK(l >= -1 - 1e-12);
      CHECK(l <= 1 + 1e-12);
    }
    for (double l : laplacian_spectrum(g).values) CHECK(l >= -1e-12);
  }
  CHECK_THROWS(torus_spectrum(2, 2));
}

TEST_CASE("spectral alternating zeta at sample points") {
  for (SpectralBasis b : {SpectralBasis::transition, SpectralBasis::laplacian}) {
    CHECK(zeta_a_spectral(complete_graph(4), 0.0, b) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(zeta_a_spectral(complete_graph(3), 0.1, b) == doctest::Approx(std::pow(1 - 1e-6, 2.0 / 3.0)).epsilon(1e-13));
  }
  const Graph t24 = torus_graph(2, 4);
  CHECK(std::abs(zeta_a_spectral(t24, 0.05, SpectralBasis::transition) -
                 zeta_a_spectral(t24, 0.05, SpectralBasis::laplacian)) < 1e-9);
  CHECK(std::abs(zeta_a_from_spectrum(torus_spectrum(2, 4), 4, 0.05) -
                 zeta_a_spectral(t24, 0.05, SpectralBasis::transition)) < 1e-12);
}

TEST_CASE("spectral route matches the exact reciprocal root") {
  std::vector<Graph> graphs;
  for (std::size_t n = 3; n <= 8; ++n) graphs.push_back(cycle_graph(n));
  for (std::size_t n = 3; n <= 5; ++n) graphs.push_back(complete_graph(n));
  graphs.push_back(torus_graph(2, 3));
  graphs.push_back(torus_graph(2, 4));
  for (const Graph& g : graphs)
    for (double t : {-0.2, -0.1, -0.05, 0.05, 0.1, 0.2}) {
      CAPTURE(g.fingerprint());
      CAPTURE(t);
      const double want = exact_root(g, t);
      const double p = zeta_a_spectral(g, t, SpectralBasis::transition);
      const double l = zeta_a_spectral(g, t, SpectralBasis::laplacian);
      CHECK(std::abs(p - want) < 1e-9);
      CHECK(std::abs(l - want) < 1e-9);
      CHECK(std::abs(p - l) < 1e-9);
    }
}

TEST_CASE("spectral route rejects bad input") {
  try {
    zeta_a_spectral(complete_graph(3), 1.0, SpectralBasis::transition);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("eigenvalue 1") != std::string::npos);
  }
  CHECK_THROWS_AS(zeta_a_spectral(path_graph(3), 0.1, SpectralBasis::transition), DomainError);
}

TEST_CASE("finite tori and the torus limit") {
  for (double t : {0.05, -0.1, 0.2}) {
    CAPTURE(t);
    CHECK(std::abs(torus_finite_reciprocal(2, 3, t) - exact_root(torus_graph(2, 3), t)) < 1e-9);
    CHECK(std::abs(torus_finite_reciprocal(2, 4, t) - exact_root(torus_graph(2, 4), t)) < 1e-9);
    CHECK(std::abs(torus_finite_reciprocal(1, 7, t) - exact_root(cycle_graph(7), t)) < 1e-9);
  }
  const auto g1 = QuadratureGrid::make(1, kDefaultGrid);
  for (double t : {-0.5, -0.2, -0.05, 0.05, 0.2, 0.5}) CHECK(std::abs(torus_limit(1, t, g1) - 1.0) < 1e-8);
  const auto g2 = QuadratureGrid::make(2, kDefaultGrid);
  CHECK(torus_limit(2, 0.0, g2) == 1.0);
  CHECK(std::abs(torus_limit(2, 0.1, g2) - torus_finite_reciprocal(2, 64, 0.1)) < 1e-4);
  CHECK(std::abs(log_zeta_torus(2, 0.1, g2) - std::log(torus_limit(2, 0.1, g2))) < 1e-14);
  CHECK_THROWS_AS(log_zeta_torus(2, 1.0, g2), DomainError);
  CHECK_THROWS_AS(torus_limit(3, 0.1, g2), std::invalid_argument);
}

TEST_CASE("quadrature doubling converges") {
  for (std::size_t d = 1; d <= 3; ++d)
    for (double t : {-0.15, 0.05, 0.15}) {
      CAPTURE(d);
      CAPTURE(t);
      const double a = torus_limit(d, t, QuadratureGrid::make(d, 64));
      const double b = torus_limit(d, t, QuadratureGrid::make(d, 128));
      CHECK(std::abs(a - b) < 1e-10);
    }
  CHECK(default_grid(2) == kDefaultGrid);
  CHECK(default_grid(4) == kDefaultGrid4d);
}

TEST_CASE("Mahler measures") {
  const auto g0 = QuadratureGrid::make(0, 2);
  CHECK(mahler_measure(0, 1, 3.5, g0).value == doctest::Approx(std::log(3.5)).epsilon(1e-15));
  CHECK(mahler_measure(0, 1, -2.0, g0).value == doctest::Approx(std::log(2.0)).epsilon(1e-15));

  const auto r4 = mahler_measure(1, 1, 4.0, QuadratureGrid::make(1, 256));
  CHECK(std::abs(r4.value - std::log(2 + std::sqrt(3.0))) < 1e-12);
  CHECK(r4.warnings.empty());
  CHECK(std::abs(mahler_measure(1, -1, 4.0, QuadratureGrid::make(1, 256)).value - std::log(2 + std::sqrt(3.0))) < 1e-12);

  const auto r0 = mahler_measure(1, 1, 0.0, QuadratureGrid::make(1, 1 << 16));
  CHECK(std::abs(r0.value) < 1e-4);
  CHECK_FALSE(r0.warnings.empty());

  const auto sing = mahler_measure(1, 1, 0.0, QuadratureGrid::make(1, 6));
  CHECK(sing.skipped_nodes == 2);
  REQUIRE(sing.warnings.size() == 2);
  CHECK(sing.warnings[1].find("(1)") != std::string::npos);
  CHECK(sing.warnings[1].find("(4)") != std::string::npos);
  CHECK_THROWS(mahler_measure(1, 2, 4.0, QuadratureGrid::make(1, 16)));
}

TEST_CASE("logarithmic torus zeta against Mahler measures") {
  const auto g2 = QuadratureGrid::make(2, 256);
  for (double t : {-0.1, -0.3}) {
    const auto r = torus_mahler_check(2, t, g2);
    CHECK(r.diff < 1e-6);
    CHECK(r.c == doctest::Approx(3 * t + 1 / t));
  }
  const auto small = torus_mahler_check(2, -1e-4, g2);
  CHECK(small.diff < 1e-3);
  CHECK(std::abs(small.lhs) < 1e-6);
  CHECK(torus_mahler_check(3, -0.05, QuadratureGrid::make(3, 128)).diff < 1e-6);
  CHECK_THROWS_AS(torus_mahler_check(2, -0.5, g2), DomainError);
  CHECK_THROWS_AS(torus_mahler_check(2, 0.1, g2), DomainError);
  CHECK_THROWS_AS(torus_mahler_check(2, -1.0 / 3.0, g2), DomainError);
}

TEST_CASE("log cosine mean") {
  for (double r : {0.0, 0.3, -0.3, 0.9, -0.9}) {
    CAPTURE(r);
    CHECK(std::abs(log_cos_mean(r, 1 << 14) - log_cos_mean_closed_form(r)) < 1e-10);
  }
  CHECK(log_cos_mean_closed_form(0.0) == 0.0);
  CHECK_THROWS_AS(log_cos_mean(1.5, 64), DomainError);
}
