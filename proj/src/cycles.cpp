#include "zetagraph/cycles.hpp"

#include <algorithm>
#include <set>

namespace zg {

namespace {

// Walk states with their successor lists. Graph cycles use one state per
// arc; alternating cycles use state 2 * arc + link.
struct StateGraph {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> next;
  std::vector<char> adj;  // size x size
  bool linked(std::size_t a, std::size_t b) const { return adj[a * size + b] != 0; }
  void finish() {
    adj.assign(size * size, 0);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b : next[a]) adj[a * size + b] = 1;
  }
};

StateGraph reduced_states(const Graph& g) {
  StateGraph s;
  s.size = g.arc_count();
  s.next.resize(s.size);
  for (ArcId e = 0; e < s.size; ++e)
    for (ArcId f : g.out_arcs(g.terminus(e)))
      if (f != g.inverse(e)) s.next[e].push_back(f);
  s.finish();
  return s;
}

StateGraph alternating_states(const Digraph& d) {
  StateGraph s;
  s.size = 2 * d.arc_count();
  s.next.resize(s.size);
  for (ArcId e = 0; e < d.arc_count(); ++e) {
    for (ArcId f : d.out_arcs(d.arc(e).origin))
      if (f != e) s.next[2 * e].push_back(2 * f + 1);
    for (ArcId f : d.in_arcs(d.arc(e).terminus))
      if (f != e) s.next[2 * e + 1].push_back(2 * f);
    std::sort(s.next[2 * e].begin(), s.next[2 * e].end());
    std::sort(s.next[2 * e + 1].begin(), s.next[2 * e + 1].end());
  }
  s.finish();
  return s;
}

// Closed state walks of each length 1..L, counted with all starting points.
std::vector<std::uint64_t> closed_walk_counts(const StateGraph& s, unsigned max_len, Budget& budget) {
  std::vector<std::uint64_t> counts(max_len + 1, 0);
  if (max_len == 0) return counts;
  std::vector<std::size_t> path;
  path.reserve(max_len);
  for (std::size_t start = 0; start < s.size; ++start) {
    auto visit = [&](auto&& self, std::size_t cur) -> void {
      const std::size_t len = path.size();
      if (s.linked(cur, start)) ++counts[len];
      if (len == max_len) return;
      for (std::size_t nxt : s.next[cur]) {
        budget.spend();
        path.push_back(nxt);
        self(self, nxt);
        path.pop_back();
      }
    };
    path.push_back(start);
    visit(visit, start);
    path.pop_back();
  }
  return counts;
}

// True when seq is strictly smaller than each of its nontrivial rotations.
bool primitive_minimal(const std::vector<std::size_t>& seq) {
  const std::size_t k = seq.size();
  for (std::size_t r = 1; r < k; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t a = seq[i], b = seq[(i + r) % k];
      if (b < a) return false;
      if (b > a) goto next_rotation;
    }
    return false;  // equal rotation: a proper power
  next_rotation:;
  }
  return true;
}

std::vector<std::vector<std::size_t>> prime_state_cycles(const StateGraph& s, unsigned max_len, Budget& budget) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < s.size; ++start) {
    auto visit = [&](auto&& self, std::size_t cur) -> void {
      if (s.linked(cur, start) && primitive_minimal(path)) out.push_back(path);
      if (path.size() == max_len) return;
      for (std::size_t nxt : s.next[cur]) {
        if (nxt < start) continue;
        budget.spend();
        path.push_back(nxt);
        self(self, nxt);
        path.pop_back();
      }
    };
    path.assign(1, start);
    if (max_len >= 1) visit(visit, start);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::size_t> min_rotation(const std::vector<std::size_t>& seq) {
  std::vector<std::size_t> best = seq;
  std::vector<std::size_t> rot(seq.size());
  for (std::size_t r = 1; r < seq.size(); ++r) {
    for (std::size_t i = 0; i < seq.size(); ++i) rot[i] = seq[(i + r) % seq.size()];
    if (rot < best) best = rot;
  }
  return best;
}

CycleClass alt_class_from_states(const std::vector<std::size_t>& states) {
  CycleClass c;
  c.kind = CycleKind::alternating;
  for (std::size_t st : states) {
    c.rep.push_back(st / 2);
    c.links.push_back(static_cast<int>(st % 2));
  }
  return c;
}

// Walk weights multiplied along closed state walks, traced, summed per length.
std::vector<Complex> weighted_closed_walks(const StateGraph& s, const std::vector<Matrix<Complex>>& weight,
                                           unsigned max_len, Budget& budget) {
  std::vector<Complex> sums(max_len + 1, Complex{});
  std::vector<Matrix<Complex>> prefix(max_len + 1);
  std::size_t len = 0;
  for (std::size_t start = 0; start < s.size; ++start) {
    auto visit = [&](auto&& self, std::size_t cur) -> void {
      if (s.linked(cur, start)) sums[len] += trace(prefix[len]);
      if (len == max_len) return;
      for (std::size_t nxt : s.next[cur]) {
        budget.spend();
        prefix[len + 1] = prefix[len] * weight[nxt];
        ++len;
        self(self, nxt);
        --len;
      }
    };
    if (max_len == 0) break;
    prefix[1] = weight[start];
    len = 1;
    visit(visit, start);
  }
  return sums;
}

}  // namespace

std::vector<std::uint64_t> reduced_cycle_counts(const Graph& g, unsigned max_len, Budget& budget) {
  return closed_walk_counts(reduced_states(g), max_len, budget);
}

std::uint64_t count_reduced_cycles(const Graph& g, unsigned k, Budget& budget) {
  if (k == 0) throw std::invalid_argument("cycle length must be at least 1");
  return reduced_cycle_counts(g, k, budget)[k];
}

std::vector<std::uint64_t> reduced_alt_cycle_counts(const Digraph& d, unsigned max_len, Budget& budget) {
  auto counts = closed_walk_counts(alternating_states(d), max_len, budget);
  return counts;
}

std::uint64_t count_reduced_alt_cycles(const Digraph& d, unsigned k, Budget& budget) {
  if (k == 0) throw std::invalid_argument("cycle length must be at least 1");
  if (k % 2 == 1) return 0;
  return reduced_alt_cycle_counts(d, k, budget)[k];
}

std::vector<CycleClass> prime_classes(const Graph& g, unsigned max_len, Budget& budget) {
  std::vector<CycleClass> out;
  for (auto& seq : prime_state_cycles(reduced_states(g), max_len, budget)) {
    CycleClass c;
    c.rep.assign(seq.begin(), seq.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CycleClass> prime_alt_classes(const Digraph& d, unsigned max_len, Budget& budget) {
  std::vector<CycleClass> out;
  for (auto& seq : prime_state_cycles(alternating_states(d), max_len, budget)) out.push_back(alt_class_from_states(seq));
  return out;
}

TruncatedSeries euler_truncation(const std::vector<CycleClass>& classes, std::size_t order) {
  // Multiply by 1/(1 - t^L) = 1 + t^L + t^2L + ... in place.
  TruncatedSeries s = TruncatedSeries::from_poly(RationalPoly{1}, order);
  for (const auto& c : classes) {
    const std::size_t len = c.length();
    if (len == 0 || len > order) continue;
    for (std::size_t k = len; k <= order; ++k) s[k] += s[k - len];
  }
  return s;
}

CorrespondenceReport correspondence_check(const Graph& g, unsigned max_len, Budget& budget) {
  CorrespondenceReport rep;
  const Digraph d = symmetric_digraph(g);
  const StateGraph alt = alternating_states(d);
  const auto cycles = prime_classes(g, max_len, budget);
  const auto alt_classes = prime_alt_classes(d, max_len, budget);
  rep.alt_class_count = alt_classes.size();

  auto to_states = [&](const std::vector<ArcId>& arcs, int first_link) {
    std::vector<std::size_t> st;
    for (std::size_t i = 0; i < arcs.size(); ++i) st.push_back(2 * arcs[i] + static_cast<std::size_t>((first_link + i) % 2));
    return st;
  };
  auto closed = [&](const std::vector<std::size_t>& st) {
    for (std::size_t i = 0; i < st.size(); ++i)
      if (!alt.linked(st[i], st[(i + 1) % st.size()])) return false;
    return true;
  };

  std::set<std::vector<std::size_t>> seen;
  for (const auto& c : cycles) {
    const std::size_t len = c.length();
    const bool even = len % 2 == 0;
    if (!even && 2 * len > max_len) continue;
    CorrespondenceEntry entry{c, {}};
    std::vector<std::vector<ArcId>> image_arcs;
    std::vector<int> first_links;
    std::vector<ArcId> tilde, bar;
    const std::size_t reps = even ? len : 2 * len;
    for (std::size_t i = 0; i < reps; ++i) {
      const ArcId e = c.rep[i % len];
      tilde.push_back(i % 2 == 0 ? e : g.inverse(e));
      bar.push_back(i % 2 == 0 ? g.inverse(e) : e);
    }
    image_arcs.push_back(tilde);
    first_links.push_back(1);
    if (even) {
      image_arcs.push_back(bar);
      first_links.push_back(0);
    }
    for (std::size_t i = 0; i < image_arcs.size(); ++i) {
      auto st = to_states(image_arcs[i], first_links[i]);
      if (!closed(st)) {
        rep.pairing_ok = false;
        rep.problems.push_back("image of a cycle of length " + std::to_string(len) + " is not an alternating cycle");
        continue;
      }
      auto canon = min_rotation(st);
      if (!primitive_minimal(canon)) {
        rep.pairing_ok = false;
        rep.problems.push_back("image of a cycle of length " + std::to_string(len) + " is not prime");
      }
      if (!seen.insert(canon).second) {
        rep.bijection_ok = false;
        rep.problems.push_back("two cycles map to the same alternating class");
      }
      entry.images.push_back(alt_class_from_states(canon));
    }
    const std::size_t want = even ? 2 : 1;
    for (const auto& im : entry.images)
      if (im.length() != (even ? len : 2 * len)) rep.pairing_ok = false;
    if (entry.images.size() != want) rep.pairing_ok = false;
    rep.entries.push_back(std::move(entry));
  }

  std::set<std::vector<std::size_t>> targets;
  for (const auto& a : alt_classes) {
    std::vector<std::size_t> st;
    for (std::size_t i = 0; i < a.length(); ++i) st.push_back(2 * a.rep[i] + static_cast<std::size_t>(a.links[i]));
    targets.insert(st);
  }
  if (targets != seen) {
    rep.bijection_ok = false;
    std::size_t missing = 0;
    for (const auto& t : targets)
      if (!seen.count(t)) ++missing;
    rep.problems.push_back(std::to_string(missing) + " alternating classes have no preimage; " +
                           std::to_string(seen.size() + missing - targets.size()) + " images are not alternating classes");
  }
  return rep;
}

WalkCountMatrices nbtaw_matrices(const Digraph& d, unsigned max_len, Budget& budget) {
  const std::size_t n = d.vertex_count();
  const StateGraph s = alternating_states(d);
  auto vertex_of = [&](std::size_t st) {
    const Arc& a = d.arc(st / 2);
    return st % 2 == 1 ? a.terminus : a.origin;
  };
  WalkCountMatrices w;
  w.p.assign(max_len + 1, Matrix<long>(n, n, 0));
  w.q.assign(max_len + 1, Matrix<long>(n, n, 0));
  w.p[0] = w.q[0] = Matrix<long>::identity(n);

  auto walk = [&](std::vector<Matrix<long>>& target, Vertex u, std::size_t first) {
    auto visit = [&](auto&& self, std::size_t cur, unsigned len) -> void {
      ++target[len](u, vertex_of(cur));
      if (len == max_len) return;
      for (std::size_t nxt : s.next[cur]) {
        budget.spend();
        self(self, nxt, len + 1);
      }
    };
    budget.spend();
    visit(visit, first, 1);
  };
  if (max_len >= 1) {
    for (Vertex u = 0; u < n; ++u) {
      for (ArcId e : d.out_arcs(u)) walk(w.p, u, 2 * e + 1);
      for (ArcId e : d.in_arcs(u)) walk(w.q, u, 2 * e);
    }
  }
  const Matrix<long> zero(n, n, 0);
  for (unsigned k = 0; k <= max_len; ++k)
    w.r.push_back(k % 2 == 0 ? block2x2(w.p[k], zero, zero, w.q[k]) : block2x2(zero, w.p[k], w.q[k], zero));
  return w;
}

ResolventReport resolvent_identity_check(const Digraph& d, unsigned max_len, Budget& budget) {
  const auto w = nbtaw_matrices(d, max_len, budget);
  const auto s = struct_matrices(d);
  const std::size_t n2 = s.calA.rows();
  const auto id = Matrix<long>::identity(n2);
  const auto shift = s.Delta - id;
  ResolventReport rep;
  for (unsigned k = 0; k <= max_len; ++k) {
    Matrix<long> lhs = w.r[k];
    if (k >= 1) lhs = lhs - w.r[k - 1] * s.calA;
    if (k >= 2) lhs = lhs + w.r[k - 2] * shift;
    if (k == 0) lhs = lhs - id;
    if (k == 2) lhs = lhs + id;
    long worst = 0;
    for (long v : lhs.data()) worst = std::max(worst, std::labs(v));
    rep.residual_by_order.push_back(worst);
    rep.max_residual = std::max(rep.max_residual, worst);
  }
  return rep;
}

std::vector<Complex> weighted_reduced_cycle_sums(const VoltageGraph& vg, const Representation& rho,
                                                 unsigned max_len, Budget& budget) {
  const Graph& g = vg.base();
  std::vector<Matrix<Complex>> weight;
  for (ArcId e = 0; e < g.arc_count(); ++e) weight.push_back(rho.images.at(vg.voltage(e)));
  return weighted_closed_walks(reduced_states(g), weight, max_len, budget);
}

std::vector<Complex> weighted_alt_cycle_sums(const VoltageDigraph& vd, const Representation& rho,
                                             unsigned max_len, Budget& budget) {
  const Digraph& d = vd.base();
  std::vector<Matrix<Complex>> weight;
  for (ArcId e = 0; e < d.arc_count(); ++e) {
    // Link 0: the walk leaves e through its origin, so e was traversed backwards.
    weight.push_back(rho.images.at(vd.group().inverse(vd.voltage(e))));
    weight.push_back(rho.images.at(vd.voltage(e)));
  }
  return weighted_closed_walks(alternating_states(d), weight, max_len, budget);
}

}  // namespace zg
