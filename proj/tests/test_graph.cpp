#include <doctest.h>

#include <random>
#include <string>

#include "support.hpp"
#include "zetagraph/graph.hpp"
#include "zetagraph/voltage.hpp"
#include "zetagraph/zeta.hpp"

using namespace zg;

namespace {

bool is_cycle_graph(const Graph& g, std::size_t n) {
  return g.vertex_count() == n && g.edge_count() == n && g.is_connected() && g.regular_degree() == std::size_t{2};
}

}  // namespace

TEST_CASE("triangle, single edge and square") {
  const Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(tri.arc_count() == 6);
  CHECK(tri.regular_degree() == std::size_t{2});
  for (ArcId e = 0; e < 3; ++e) {
    CHECK(tri.inverse(e) == e + 3);
    CHECK(tri.origin(e + 3) == tri.terminus(e));
  }

  const Graph k2 = build_graph(2, {{0, 1}});
  CHECK(k2.arc_count() == 2);
  CHECK(k2.inverse(0) == 1);
  CHECK(k2.inverse(1) == 0);

  const Graph sq = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(sq.arc_count() == 8);
  CHECK(sq.regular_degree() == std::size_t{2});
}

TEST_CASE("invalid graphs are rejected") {
  CHECK_THROWS_AS(build_graph(3, {{0, 0}, {0, 1}, {1, 2}}), GraphError);
  CHECK_THROWS_AS(build_graph(3, {{0, 5}}), GraphError);
  try {
    (void)build_graph(4, {{0, 1}, {2, 3}});
    FAIL("disconnected input accepted");
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("2 components") != std::string::npos);
  }
  const Graph split = Graph::build(4, {{0, 1}, {2, 3}}, Connectivity::report);
  CHECK_FALSE(split.is_connected());
}

TEST_CASE("parallel edges are accepted") {
  const Graph g = build_graph(2, {{0, 1}, {0, 1}});
  CHECK(g.arc_count() == 4);
  CHECK(g.adjacency()(0, 1) == 2);
  CHECK(ihara_reciprocal(g, Method::hashimoto).value == ihara_reciprocal(g, Method::ihara).value);
}

TEST_CASE("inverse involution") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = zgtest::random_connected_graph(rng, 6, 9);
    for (ArcId e = 0; e < g.arc_count(); ++e) {
      CHECK(g.inverse(g.inverse(e)) == e);
      CHECK(g.inverse(e) != e);
    }
    CHECK(g.arc_count() == 2 * g.edge_count());
  }
}

TEST_CASE("symmetric digraphs") {
  CHECK(symmetric_digraph(complete_graph(3)).arc_count() == 6);
  CHECK(symmetric_digraph(complete_graph(2)).arc_count() == 2);
  const Digraph c9 = symmetric_digraph(cycle_graph(9));
  CHECK(c9.arc_count() == 18);
  for (ArcId e = 0; e < c9.arc_count(); ++e) CHECK(c9.partner(e).has_value());
}

TEST_CASE("tori") {
  const Graph t23 = torus_graph(2, 3);
  CHECK(t23.vertex_count() == 9);
  CHECK(t23.edge_count() == 18);
  CHECK(t23.regular_degree() == std::size_t{4});

  const Graph t15 = torus_graph(1, 5);
  CHECK(is_cycle_graph(t15, 5));
  CHECK(ihara_reciprocal(t15).value == ihara_reciprocal(cycle_graph(5)).value);

  const Graph t34 = torus_graph(3, 4);
  CHECK(t34.vertex_count() == 64);
  CHECK(t34.edge_count() == 192);
  CHECK(t34.regular_degree() == std::size_t{6});

  CHECK_THROWS(torus_graph(2, 2));
}

TEST_CASE("structure matrices") {
  SUBCASE("K2 has B = J0") {
    const auto s = struct_matrices(complete_graph(2));
    CHECK(s.B == s.J0);
  }
  SUBCASE("K3 trace of (B - J0)^3") {
    const auto s = struct_matrices(complete_graph(3));
    CHECK(trace(power(s.B - s.J0, 3)) == 6);
  }
  SUBCASE("one-arc digraph") {
    const Digraph d = Digraph::build(2, {{0, 1}});
    const auto s = struct_matrices(d);
    CHECK(s.B1 == Matrix<long>(1, 1, 1));
    CHECK(s.B2 == Matrix<long>(1, 1, 1));
    CHECK(s.calB == s.calJ);
  }
  SUBCASE("identities on random graphs") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = zgtest::random_connected_graph(rng, 7, 11);
      const auto s = struct_matrices(g);
      const std::size_t m2 = g.arc_count();
      CHECK(s.J0 * s.J0 == Matrix<long>::identity(m2));
      CHECK(s.J0 == hadamard(s.B, transpose(s.B)));
      for (ArcId e = 0; e < m2; ++e) {
        long row = 0;
        for (ArcId f = 0; f < m2; ++f) row += s.B(e, f);
        CHECK(row == static_cast<long>(g.degree(g.terminus(e))));
      }
      CHECK(s.Q == s.D - Matrix<long>::identity(g.vertex_count()));

      const Digraph d = symmetric_digraph(g);
      const auto ds = struct_matrices(d);
      CHECK(ds.D1 == s.D);
      CHECK(ds.D2 == s.D);
      CHECK(ds.calJ * ds.calJ == Matrix<long>::identity(2 * m2));
      for (ArcId e = 0; e < m2; ++e)
        for (ArcId f = 0; f < m2; ++f) CHECK(ds.B1(g.inverse(e), g.inverse(f)) == ds.B2(e, f));
    }
  }
}

TEST_CASE("derived graphs") {
  SUBCASE("triangle over Z_3 is the 9-cycle") {
    const auto vg = VoltageGraph::build(complete_graph(3), FiniteGroup::cyclic(3), cyclic_characters(3), {1, 0, 0});
    const Graph cover = derived_graph(vg);
    CHECK(is_cycle_graph(cover, 9));
    CHECK(alt_reciprocal_graph(cover).value == alt_reciprocal_graph(torus_graph(1, 9)).value);
  }
  SUBCASE("trivial group gives the base graph") {
    const Graph k4 = complete_graph(4);
    const auto vg = VoltageGraph::build(k4, FiniteGroup::cyclic(1), cyclic_characters(1), std::vector<GroupElem>(6, 0));
    const Graph cover = derived_graph(vg);
    CHECK(cover.adjacency() == k4.adjacency());
  }
  SUBCASE("triangle over Z_2 with one twisted edge is the 6-cycle") {
    const auto vg = VoltageGraph::build(cycle_graph(3), FiniteGroup::cyclic(2), cyclic_characters(2), {1, 0, 0});
    const Graph cover = derived_graph(vg);
    CHECK(is_cycle_graph(cover, 6));
    CHECK(ihara_reciprocal(cover).value == ihara_reciprocal(cycle_graph(6)).value);
  }
  SUBCASE("vertex and edge counts multiply by the group order") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = zgtest::random_connected_graph(rng, 5, 7);
      const std::size_t p = 2 + trial % 4;
      std::uniform_int_distribution<GroupElem> el(0, p - 1);
      std::vector<GroupElem> volts(g.edge_count());
      for (auto& v : volts) v = el(rng);
      const auto vg = VoltageGraph::build(g, FiniteGroup::cyclic(p), cyclic_characters(p), volts);
      const Graph cover = derived_graph(vg);
      CHECK(cover.vertex_count() == p * g.vertex_count());
      CHECK(cover.edge_count() == p * g.edge_count());
      for (ArcId e = 0; e < g.arc_count(); ++e)
        CHECK(vg.group().mul(vg.voltage(g.inverse(e)), vg.voltage(e)) == vg.group().identity());
    }
  }
}

TEST_CASE("voltage matrices") {
  SUBCASE("Z_3 voltages on the triangle") {
    const auto vg = VoltageGraph::build(complete_graph(3), FiniteGroup::cyclic(3), cyclic_characters(3), {1, 0, 0});
    const auto blocks = voltage_matrices(vg, "chi1");
    const Complex eta = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    CHECK(std::abs(blocks.A(0, 1) - eta) < 1e-12);
    CHECK(std::abs(blocks.A(1, 0) - std::conj(eta)) < 1e-12);
    CHECK(std::abs(blocks.A(1, 2) - 1.0) < 1e-12);
    CHECK(std::abs(blocks.A(0, 0)) < 1e-12);
  }
  SUBCASE("trivial representation gives the plain adjacency") {
    const Graph k4 = complete_graph(4);
    const auto vg = VoltageGraph::build(k4, FiniteGroup::cyclic(2), cyclic_characters(2), {1, 0, 1, 0, 0, 1});
    const auto blocks = voltage_matrices(vg, "chi0");
    const auto a = k4.adjacency();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(blocks.A(i, j) - static_cast<double>(a(i, j))) < 1e-12);
  }
  SUBCASE("sign character on the triangle with one twisted edge") {
    const auto vg = VoltageGraph::build(cycle_graph(3), FiniteGroup::cyclic(2), cyclic_characters(2), {1, 0, 0});
    const auto blocks = voltage_matrices(vg, "chi1");
    for (std::size_t i = 0; i < 3; ++i) {
      double row = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        const double x = blocks.A(i, j).real();
        CHECK(std::abs(blocks.A(i, j).imag()) < 1e-12);
        CHECK((std::abs(x) < 1e-12 || std::abs(std::abs(x) - 1.0) < 1e-12));
        row += x;
      }
      const long r = std::lround(row);
      CHECK(r >= -1);
      CHECK(r <= 2);
    }
  }
  SUBCASE("unknown representation id") {
    const auto vg = VoltageGraph::build(cycle_graph(3), FiniteGroup::cyclic(2), cyclic_characters(2), {1, 0, 0});
    CHECK_THROWS_AS(voltage_matrices(vg, "nope"), VoltageError);
  }
}

TEST_CASE("groups and representations are validated") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), VoltageError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), VoltageError);
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  CHECK(z3.inverse(1) == 2);

  Representation bad{"bad", 1, {Matrix<Complex>(1, 1, 1.0), Matrix<Complex>(1, 1, 2.0), Matrix<Complex>(1, 1, 1.0)}};
  CHECK_THROWS_AS(validate_representation(z3, bad), VoltageError);
  Representation wrong{"wrong", 1, {Matrix<Complex>(1, 1, 1.0), Matrix<Complex>(1, 1, -1.0), Matrix<Complex>(1, 1, 1.0)}};
  CHECK_THROWS_AS(validate_representation(z3, wrong), VoltageError);
  for (const auto& chi : cyclic_characters(5)) CHECK_NOTHROW(validate_representation(FiniteGroup::cyclic(5), chi));

  const auto chars = cyclic_characters(4);
  CHECK(std::abs(character_inner(FiniteGroup::cyclic(4), chars[1], chars[1]) - 1.0) < 1e-12);
  CHECK(std::abs(character_inner(FiniteGroup::cyclic(4), chars[1], chars[2])) < 1e-12);
}

TEST_CASE("digraph construction") {
  CHECK_THROWS_AS(Digraph::build(2, {{0, 1}, {0, 1}}), GraphError);
  CHECK_NOTHROW(Digraph::build(2, {{0, 1}, {0, 1}}, true));
  CHECK_THROWS_AS(Digraph::build(3, {{0, 1}}), GraphError);
  const Digraph d = Digraph::build(3, {{0, 1}, {1, 2}, {2, 1}});
  CHECK(d.partner(1) == ArcId{2});
  CHECK_FALSE(d.partner(0).has_value());
  CHECK(d.outdeg(1) == 1);
  CHECK(d.indeg(1) == 2);
  CHECK(d.reversed().adjacency() == transpose(d.adjacency()));
}
