#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zetagraph/cycles.hpp"
#include "zetagraph/graph.hpp"
#include "zetagraph/zeta.hpp"

using namespace zg;
using zgtest::binomial_poly;

namespace {

RationalPoly k4_factored() {
  // (1 - t^2)^2 (1 - t)(1 - 2t)(1 + t + 2t^2)^3
  return RationalPoly::one_minus_t2_pow(2) * RationalPoly{1, -1} * RationalPoly{1, -2} * RationalPoly{1, 1, 2}.pow(3);
}

TruncatedSeries root_series(const RationalFn& reciprocal, std::size_t n, std::size_t order) {
  return series_pow(TruncatedSeries::from_fn(reciprocal, order), Rational(-1) / Rational(static_cast<long>(n)));
}

}  // namespace

TEST_CASE("Ihara zeta reciprocals") {
  for (Method m : {Method::hashimoto, Method::ihara}) {
    CAPTURE(method_name(m));
    CHECK(ihara_reciprocal(complete_graph(3), m).value == RationalFn(binomial_poly(-1, 3).pow(2)));
    CHECK(ihara_reciprocal(path_graph(5), m).value == RationalFn(RationalPoly{1}));
    CHECK(ihara_reciprocal(complete_graph(4), m).value == RationalFn(k4_factored()));
  }
}

TEST_CASE("K4 reciprocal matches brute-force cycle counts to length 12") {
  const Graph k4 = complete_graph(4);
  const auto counts = zgtest::naive_reduced_counts(k4, 12);
  const auto sums = zgtest::newton_sums(ihara_reciprocal(k4).value.num(), 12);
  for (std::size_t k = 1; k <= 12; ++k) {
    CAPTURE(k);
    CHECK(sums[k] == Rational(static_cast<long>(counts[k])));
  }
}

TEST_CASE("alternating zeta of digraphs") {
  for (Method m : {Method::hashimoto, Method::ihara}) {
    CAPTURE(method_name(m));
    CHECK(alt_reciprocal_digraph(symmetric_digraph(complete_graph(3)), m).value ==
          RationalFn(binomial_poly(-1, 6).pow(2)));
    CHECK(alt_reciprocal_digraph(Digraph::build(2, {{0, 1}}), m).value == RationalFn(RationalPoly{1}));
    CHECK(alt_reciprocal_digraph(symmetric_digraph(cycle_graph(9)), m).value ==
          RationalFn(binomial_poly(-1, 18).pow(2)));
  }
}

TEST_CASE("alternating zeta of graphs") {
  for (Method m : {Method::factorized, Method::hashimoto, Method::ihara}) {
    CAPTURE(method_name(m));
    const RationalPoly k3 = binomial_poly(-1, 3).pow(2) * binomial_poly(1, 3).pow(2);
    CHECK(k3 == binomial_poly(-1, 6).pow(2));
    CHECK(alt_reciprocal_graph(complete_graph(3), m).value == RationalFn(k3));
    CHECK(alt_reciprocal_graph(path_graph(4), m).value == RationalFn(RationalPoly{1}));
    CHECK(alt_reciprocal_graph(cycle_graph(4), m).value == RationalFn(binomial_poly(-1, 4).pow(4)));
  }
  CHECK(ihara_reciprocal(cycle_graph(4)).value == RationalFn(binomial_poly(-1, 4).pow(2)));
}

TEST_CASE("regular spectral route") {
  CHECK(regular_spectral_reciprocal(complete_graph(3)).value == RationalFn(binomial_poly(-1, 6).pow(2)));
  CHECK(regular_spectral_reciprocal(cycle_graph(4)).value == RationalFn(binomial_poly(-1, 4).pow(4)));
  for (const Graph& g : {complete_graph(4), complete_graph(5), torus_graph(2, 3), cycle_graph(7)})
    CHECK(regular_spectral_reciprocal(g).value == alt_reciprocal_graph(g).value);
  CHECK_THROWS_AS(regular_spectral_reciprocal(path_graph(3)), NotRegularError);
}

TEST_CASE("generalized alternating zeta series") {
  SUBCASE("K3") {
    const auto s = generalized_alt_zeta_series(complete_graph(3), 12);
    CHECK(s.coeffs() == zgtest::binomial_series(Rational(-2, 3), -1, 6, 12));
    CHECK(s[6] == Rational(2, 3));
    CHECK(s[12] == Rational(5, 9));
  }
  SUBCASE("K2") {
    CHECK(generalized_alt_zeta_series(complete_graph(2), 10) == TruncatedSeries::from_poly(RationalPoly{1}, 10));
  }
  SUBCASE("C4") {
    const auto s = generalized_alt_zeta_series(cycle_graph(4), 16);
    for (std::size_t k = 0; k <= 16; ++k) CHECK(s[k] == Rational(k % 4 == 0 ? 1 : 0));
  }
  SUBCASE("product of the two Ihara roots on vertex-transitive graphs") {
    for (const Graph& g : {cycle_graph(5), complete_graph(4), complete_graph(5), torus_graph(2, 3)}) {
      const std::size_t order = 12;
      const RationalFn z = ihara_reciprocal(g).value;
      const auto plus = root_series(z, g.vertex_count(), order);
      const auto minus = root_series(z.reflect(), g.vertex_count(), order);
      CHECK(generalized_alt_zeta_series(g, order) == plus * minus);
      CHECK(generalized_zeta_series(g, order) == plus);
    }
  }
}

TEST_CASE("cross-route equality and structural properties on random graphs") {
  std::mt19937_64 rng(20);
  std::uniform_int_distribution<std::size_t> nn(2, 8);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = nn(rng);
    std::uniform_int_distribution<std::size_t> mm(n - 1, std::min<std::size_t>(14, n * (n - 1) / 2));
    const Graph g = zgtest::random_connected_graph(rng, n, mm(rng));
    CAPTURE(g.fingerprint());
    const auto h = ihara_reciprocal(g, Method::hashimoto).value;
    CHECK(h == ihara_reciprocal(g, Method::ihara).value);
    const auto a = alt_reciprocal_graph(g, Method::factorized).value;
    CHECK(a == alt_reciprocal_graph(g, Method::hashimoto).value);
    CHECK(a == alt_reciprocal_graph(g, Method::ihara).value);
    CHECK(a.num().is_even());
    CHECK(a.reflect() == a);
    CHECK(a.eval(Rational(0)) == 1);

    std::size_t min_deg = g.vertex_count();
    for (std::size_t d : g.degree_sequence()) min_deg = std::min(min_deg, d);
    if (min_deg >= 2) CHECK(h.num().degree() == static_cast<int>(2 * g.edge_count()));
  }
}

TEST_CASE("digraph routes agree on random digraphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const Digraph d = zgtest::random_digraph(rng, 2 + trial % 4, 3 + trial % 6);
    CAPTURE(d.fingerprint());
    const auto h = alt_reciprocal_digraph(d, Method::hashimoto).value;
    CHECK(h == alt_reciprocal_digraph(d, Method::ihara).value);
    CHECK(h.num().is_even());
  }
}

TEST_CASE("method names round-trip") {
  for (Method m : {Method::hashimoto, Method::ihara, Method::factorized, Method::euler_truncated})
    CHECK(parse_method(method_name(m)) == m);
  CHECK_THROWS(parse_method("cofactor"));
}

TEST_CASE("reciprocals carry the input fingerprint") {
  const Graph g = complete_graph(4);
  CHECK(ihara_reciprocal(g).graph_hash == g.fingerprint());
  CHECK(ihara_reciprocal(g).graph_hash != ihara_reciprocal(complete_graph(3)).graph_hash);
}

TEST_CASE("square-free factorization hint") {
  const auto hint = factored_hint(RationalFn(k4_factored()));
  RationalPoly product{1};
  for (const auto& [p, e] : hint) product *= p.pow(static_cast<unsigned>(e));
  CHECK(product.monic() == k4_factored().monic());
}
