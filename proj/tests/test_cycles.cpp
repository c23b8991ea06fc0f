#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zetagraph/cycles.hpp"
#include "zetagraph/zeta.hpp"

using namespace zg;

namespace {

Matrix<long> matrix_power(const Matrix<long>& m, unsigned k) {
  Matrix<long> out = Matrix<long>::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

Digraph one_arc() { return Digraph::build(2, {{0, 1}}); }

}  // namespace

TEST_CASE("reduced cycle counts") {
  Budget b;
  CHECK(count_reduced_cycles(complete_graph(3), 3, b) == 6);
  CHECK(count_reduced_cycles(complete_graph(3), 2, b) == 0);
  CHECK(count_reduced_cycles(complete_graph(4), 3, b) == 24);
  CHECK(count_reduced_cycles(path_graph(5), 4, b) == 0);
  const auto c = reduced_cycle_counts(cycle_graph(5), 10, b);
  for (unsigned k = 0; k <= 10; ++k) CHECK(c[k] == (k != 0 && k % 5 == 0 ? 10u : 0u));
}

TEST_CASE("reduced alternating cycle counts") {
  Budget b;
  const Digraph dk3 = symmetric_digraph(complete_graph(3));
  CHECK(count_reduced_alt_cycles(dk3, 6, b) == 12);
  for (unsigned k : {1u, 3u, 5u, 7u}) CHECK(count_reduced_alt_cycles(dk3, k, b) == 0);
  for (unsigned k = 1; k <= 8; ++k) CHECK(count_reduced_alt_cycles(one_arc(), k, b) == 0);
}

TEST_CASE("prime classes") {
  Budget b;
  CHECK(prime_classes(complete_graph(3), 3, b).size() == 2);
  CHECK(prime_alt_classes(symmetric_digraph(complete_graph(3)), 6, b).size() == 2);
  const auto c4 = prime_alt_classes(symmetric_digraph(cycle_graph(4)), 4, b);
  CHECK(c4.size() == 4);
  for (const auto& c : c4) {
    CHECK(c.length() == 4);
    CHECK(c.kind == CycleKind::alternating);
    CHECK(c.prime);
  }
  const auto k4 = prime_classes(complete_graph(4), 6, b);
  for (std::size_t i = 1; i < k4.size(); ++i) CHECK(k4[i - 1].length() <= k4[i].length());
}

TEST_CASE("Euler truncation agrees with the determinant") {
  Budget b(50'000'000);
  for (const Graph& g : {complete_graph(3), complete_graph(4), cycle_graph(4), build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}})}) {
    CAPTURE(g.fingerprint());
    const unsigned L = 8;
    const auto euler = euler_truncation(prime_classes(g, L, b), L);
    CHECK(euler == TruncatedSeries::from_fn(ihara_reciprocal(g).value, L).inverse());
    const auto alt = euler_truncation(prime_alt_classes(symmetric_digraph(g), L, b), L);
    CHECK(alt == TruncatedSeries::from_fn(alt_reciprocal_graph(g).value, L).inverse());
  }
}

TEST_CASE("cycle correspondence between a graph and its symmetric digraph") {
  Budget b;
  for (const Graph& g : {complete_graph(3), cycle_graph(4), path_graph(5), complete_graph(4)}) {
    CAPTURE(g.fingerprint());
    const auto r = correspondence_check(g, 8, b);
    CHECK(r.ok());
    CHECK(r.problems.empty());
  }
  const auto tree = correspondence_check(path_graph(5), 8, b);
  CHECK(tree.entries.empty());
  CHECK(tree.alt_class_count == 0);

  const auto k3 = correspondence_check(complete_graph(3), 6, b);
  CHECK(k3.alt_class_count == 2);
  for (const auto& e : k3.entries) {
    REQUIRE(e.images.size() == 1);
    CHECK(e.images[0].length() == 2 * e.cycle.length());
  }
  const auto c4 = correspondence_check(cycle_graph(4), 4, b);
  for (const auto& e : c4.entries) CHECK(e.images.size() == 2);
}

TEST_CASE("non-backtracking alternating walk matrices") {
  Budget b;
  const Digraph dk3 = symmetric_digraph(complete_graph(3));
  const auto w = nbtaw_matrices(dk3, 4, b);
  const auto s = struct_matrices(dk3);
  const auto id = Matrix<long>::identity(3);
  CHECK(w.p[0] == id);
  CHECK(w.q[0] == id);
  CHECK(w.p[1] == s.A);
  CHECK(w.q[1] == transpose(s.A));
  CHECK(w.p[2] == s.A * transpose(s.A) - s.D1);
  CHECK(w.q[2] == transpose(s.A) * s.A - s.D2);

  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 10; ++trial) {
    const Digraph d = zgtest::random_digraph(rng, 3 + trial % 3, 4 + trial % 5);
    CAPTURE(d.fingerprint());
    const auto fwd = nbtaw_matrices(d, 6, b);
    const auto rev = nbtaw_matrices(d.reversed(), 6, b);
    const auto sd = struct_matrices(d);
    CHECK(fwd.p[1] == sd.A);
    CHECK(fwd.p[2] == sd.A * transpose(sd.A) - sd.D1);
    for (unsigned k = 0; k <= 6; ++k) {
      CHECK(rev.p[k] == fwd.q[k]);
      CHECK(rev.q[k] == fwd.p[k]);
    }
  }
}

TEST_CASE("resolvent identity") {
  Budget b;
  for (const Digraph& d : {symmetric_digraph(complete_graph(3)), one_arc(), symmetric_digraph(cycle_graph(4))}) {
    CAPTURE(d.fingerprint());
    const auto r = resolvent_identity_check(d, 8, b);
    CHECK(r.max_residual == 0);
    CHECK(r.residual_by_order.size() == 9);
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Digraph d = zgtest::random_digraph(rng, 2 + trial % 4, 3 + trial % 7);
    CAPTURE(d.fingerprint());
    CHECK(resolvent_identity_check(d, 8, b).max_residual == 0);
  }
}

TEST_CASE("enumeration budget") {
  Budget tiny(100);
  CHECK_THROWS_AS(reduced_cycle_counts(complete_graph(5), 10, tiny), BudgetExceeded);
  Budget shared(1'000'000);
  reduced_cycle_counts(complete_graph(3), 6, shared);
  const auto used = shared.used();
  CHECK(used > 0);
  reduced_cycle_counts(complete_graph(3), 6, shared);
  CHECK(shared.used() == 2 * used);
}

TEST_CASE("oracle counts agree with a naive walk enumeration") {
  std::mt19937_64 rng(32);
  Budget b(100'000'000);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const Graph g = zgtest::random_connected_graph(rng, n, n + 1 + trial % 3);
    CAPTURE(g.fingerprint());
    CHECK(reduced_cycle_counts(g, 8, b) == zgtest::naive_reduced_counts(g, 8));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const Digraph d = zgtest::random_digraph(rng, 2 + trial % 4, 3 + trial % 6);
    CAPTURE(d.fingerprint());
    CHECK(reduced_alt_cycle_counts(d, 8, b) == zgtest::naive_alt_counts(d, 8));
  }
}

TEST_CASE("counts equal traces of the edge matrices and the log-series of the determinant") {
  std::mt19937_64 rng(33);
  Budget b(100'000'000);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const Graph g = zgtest::random_connected_graph(rng, n, n + trial % 4);
    CAPTURE(g.fingerprint());
    const unsigned L = 9;
    const auto counts = reduced_cycle_counts(g, L, b);
    const auto s = struct_matrices(g);
    const auto w = s.B - s.J0;
    const auto sums = zgtest::newton_sums(ihara_reciprocal(g).value.num(), L);
    for (unsigned k = 1; k <= L; ++k) {
      CAPTURE(k);
      CHECK(static_cast<long>(counts[k]) == trace(matrix_power(w, k)));
      CHECK(sums[k] == Rational(static_cast<long>(counts[k])));
    }

    const Digraph d = symmetric_digraph(g);
    const auto alt = reduced_alt_cycle_counts(d, L, b);
    const auto sd = struct_matrices(d);
    const auto wa = sd.calB - sd.calJ;
    const auto alt_sums = zgtest::newton_sums(alt_reciprocal_digraph(d).value.num(), L);
    for (unsigned k = 1; k <= L; ++k) {
      CAPTURE(k);
      CHECK(static_cast<long>(alt[k]) == trace(matrix_power(wa, k)));
      CHECK(alt_sums[k] == Rational(static_cast<long>(alt[k])));
    }
  }
}
