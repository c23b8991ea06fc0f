#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "zetagraph/graph.hpp"
#include "zetagraph/matrix.hpp"
#include "zetagraph/poly.hpp"

namespace zgtest {

using zg::Rational;
using zg::RationalPoly;

inline RationalPoly binomial_poly(long c, std::size_t power) {
  RationalPoly p = RationalPoly::monomial(Rational(c), power);
  return p + RationalPoly{1};
}

/// (1 + c t^step)^r as a coefficient list up to `order`, from the binomial series.
inline std::vector<Rational> binomial_series(const Rational& r, long c, std::size_t step, std::size_t order) {
  std::vector<Rational> out(order + 1);
  Rational term = 1;
  for (std::size_t j = 0; j * step <= order; ++j) {
    out[j * step] = term;
    term *= (r - Rational(static_cast<long>(j))) / Rational(static_cast<long>(j + 1)) * Rational(c);
  }
  return out;
}

/// Power sums N_k with exp(-sum N_k t^k / k) = f, by Newton's identities
/// applied to f(t) = 1 + c_1 t + c_2 t^2 + ...
inline std::vector<Rational> newton_sums(const RationalPoly& f, std::size_t order) {
  std::vector<Rational> n(order + 1);
  for (std::size_t k = 1; k <= order; ++k) {
    Rational s = -Rational(static_cast<long>(k)) * f.coeff(k);
    for (std::size_t j = 1; j < k; ++j) s -= f.coeff(j) * n[k - j];
    n[k] = s;
  }
  return n;
}

/// Cofactor expansion along the first row.
inline RationalPoly cofactor_det(const zg::Matrix<RationalPoly>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return RationalPoly{1};
  if (n == 1) return m(0, 0);
  RationalPoly total;
  for (std::size_t j = 0; j < n; ++j) {
    zg::Matrix<RationalPoly> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    RationalPoly term = m(0, j) * cofactor_det(minor);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

/// Random simple connected graph: a random spanning tree plus extra edges.
inline zg::Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<std::pair<zg::Vertex, zg::Vertex>> edges;
  std::set<std::pair<zg::Vertex, zg::Vertex>> used;
  auto add = [&](zg::Vertex a, zg::Vertex b) {
    auto key = std::minmax(a, b);
    if (a == b || used.count(key)) return false;
    used.insert(key);
    edges.emplace_back(a, b);
    return true;
  };
  std::vector<zg::Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    add(order[i], order[pick(rng)]);
  }
  const std::size_t cap = std::min(m, n * (n - 1) / 2);
  std::uniform_int_distribution<zg::Vertex> v(0, n - 1);
  while (edges.size() < cap) add(v(rng), v(rng));
  return zg::Graph::build(n, std::move(edges));
}

/// Random weakly connected digraph without duplicate arcs.
inline zg::Digraph random_digraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<zg::Arc> arcs;
  std::set<std::pair<zg::Vertex, zg::Vertex>> used;
  auto add = [&](zg::Vertex a, zg::Vertex b) {
    if (a == b || used.count({a, b})) return false;
    used.insert({a, b});
    arcs.push_back({a, b});
    return true;
  };
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    const zg::Vertex j = pick(rng);
    if (coin(rng)) add(i, j);
    else add(j, i);
  }
  const std::size_t cap = std::min(m, n * (n - 1));
  std::uniform_int_distribution<zg::Vertex> v(0, n - 1);
  while (arcs.size() < cap) add(v(rng), v(rng));
  return zg::Digraph::build(n, std::move(arcs));
}

/// Reduced cycle counts of length 1..L by walking every arc sequence that
/// follows heads to tails, then testing the cyclic no-backtracking rule.
inline std::vector<std::uint64_t> naive_reduced_counts(const zg::Graph& g, unsigned max_len) {
  std::vector<std::uint64_t> counts(max_len + 1, 0);
  std::vector<zg::ArcId> seq;
  std::function<void()> grow = [&] {
    const std::size_t k = seq.size();
    const zg::ArcId last = seq.back();
    if (g.terminus(last) == g.origin(seq.front()) && seq.front() != g.inverse(last)) ++counts[k];
    if (k == max_len) return;
    for (zg::ArcId f : g.out_arcs(g.terminus(last))) {
      if (f == g.inverse(last)) continue;
      seq.push_back(f);
      grow();
      seq.pop_back();
    }
  };
  for (zg::ArcId e = 0; e < g.arc_count(); ++e) {
    seq.assign(1, e);
    grow();
  }
  return counts;
}

/// Alternating cycle counts: sequences where consecutive arcs alternately share
/// a terminus and an origin, distinct consecutive arcs, closed cyclically.
inline std::vector<std::uint64_t> naive_alt_counts(const zg::Digraph& d, unsigned max_len) {
  std::vector<std::uint64_t> counts(max_len + 1, 0);
  std::vector<zg::ArcId> seq;
  // shares_head[i]: arc i and arc i+1 share a terminus (otherwise an origin).
  std::function<void(bool)> grow = [&](bool first_head) {
    const std::size_t k = seq.size();
    const zg::ArcId last = seq.back();
    const bool last_head = (k % 2 == 1) ? first_head : !first_head;
    if (k % 2 == 0) {
      const zg::ArcId first = seq.front();
      const bool closes = last_head ? d.arc(last).terminus == d.arc(first).terminus
                                    : d.arc(last).origin == d.arc(first).origin;
      if (closes && first != last) ++counts[k];
    }
    if (k == max_len) return;
    const auto& next = last_head ? d.in_arcs(d.arc(last).terminus) : d.out_arcs(d.arc(last).origin);
    for (zg::ArcId f : next) {
      if (f == last) continue;
      seq.push_back(f);
      grow(first_head);
      seq.pop_back();
    }
  };
  for (zg::ArcId e = 0; e < d.arc_count(); ++e)
    for (bool head : {true, false}) {
      seq.assign(1, e);
      grow(head);
    }
  return counts;
}

}  // namespace zgtest
