#include "zetagraph/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

namespace zg {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> components(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  UnionFind uf(n);
  for (auto [u, v] : pairs) uf.unite(u, v);
  std::vector<std::vector<Vertex>> by_root(n);
  for (Vertex v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& c : by_root)
    if (!c.empty()) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::string component_report(const std::vector<std::vector<Vertex>>& comps) {
  std::ostringstream os;
  os << "input is disconnected: " << comps.size() << " components";
  for (const auto& c : comps) {
    os << " {";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "}";
  }
  return os.str();
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

Graph Graph::build(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges, Connectivity mode) {
  if (n == 0) throw GraphError("graph needs at least one vertex");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u >= n || v >= n)
      throw GraphError("edge " + std::to_string(i) + " has a vertex index out of range");
    if (u == v) throw GraphError("edge " + std::to_string(i) + " is a self-loop at vertex " + std::to_string(u));
  }
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  auto comps = components(n, g.edges_);
  g.connected_ = comps.size() == 1;
  if (!g.connected_ && mode == Connectivity::require) throw GraphError(component_report(comps));
  g.out_arcs_.assign(n, {});
  for (ArcId e = 0; e < g.arc_count(); ++e) g.out_arcs_[g.origin(e)].push_back(e);
  return g;
}

Arc Graph::arc(ArcId e) const {
  const std::size_t m = edges_.size();
  if (e >= 2 * m) throw std::out_of_range("arc id out of range");
  const auto& [u, v] = edges_[e % m];
  return e < m ? Arc{u, v} : Arc{v, u};
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

std::optional<std::size_t> Graph::regular_degree() const {
  const std::size_t d0 = degree(0);
  for (Vertex v = 1; v < n_; ++v)
    if (degree(v) != d0) return std::nullopt;
  return d0;
}

Matrix<long> Graph::adjacency() const {
  Matrix<long> a(n_, n_, 0);
  for (auto [u, v] : edges_) {
    ++a(u, v);
    ++a(v, u);
  }
  return a;
}

std::string Graph::fingerprint() const {
  std::ostringstream os;
  os << "G" << n_;
  for (auto [u, v] : edges_) os << ";" << u << "-" << v;
  return fnv1a(os.str());
}

// ---------------------------------------------------------------------------

Digraph Digraph::build(std::size_t n, std::vector<Arc> arcs, bool allow_multi, Connectivity mode) {
  if (n == 0) throw GraphError("digraph needs at least one vertex");
  std::set<std::pair<Vertex, Vertex>> seen;
  bool multi = false;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    if (a.origin >= n || a.terminus >= n)
      throw GraphError("arc " + std::to_string(i) + " has a vertex index out of range");
    if (a.origin == a.terminus) throw GraphError("arc " + std::to_string(i) + " is a self-loop");
    if (!seen.insert({a.origin, a.terminus}).second) {
      if (!allow_multi) throw GraphError("duplicate arc " + std::to_string(i) + " in a simple digraph");
      multi = true;
    }
  }
  Digraph d;
  d.n_ = n;
  d.arcs_ = std::move(arcs);
  d.multi_ = multi;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& a : d.arcs_) pairs.emplace_back(a.origin, a.terminus);
  auto comps = components(n, pairs);
  d.connected_ = comps.size() == 1;
  if (!d.connected_ && mode == Connectivity::require) throw GraphError(component_report(comps));
  d.out_arcs_.assign(n, {});
  d.in_arcs_.assign(n, {});
  for (ArcId e = 0; e < d.arcs_.size(); ++e) {
    d.out_arcs_[d.arcs_[e].origin].push_back(e);
    d.in_arcs_[d.arcs_[e].terminus].push_back(e);
  }
  // Pair each arc with a distinct reverse arc where one exists.
  d.partner_.assign(d.arcs_.size(), std::nullopt);
  for (ArcId e = 0; e < d.arcs_.size(); ++e) {
    if (d.partner_[e]) continue;
    for (ArcId f : d.out_arcs_[d.arcs_[e].terminus]) {
      if (d.arcs_[f].terminus == d.arcs_[e].origin && !d.partner_[f]) {
        d.partner_[e] = f;
        d.partner_[f] = e;
        break;
      }
    }
  }
  return d;
}

Matrix<long> Digraph::adjacency() const {
  Matrix<long> a(n_, n_, 0);
  for (const auto& arc : arcs_) ++a(arc.origin, arc.terminus);
  return a;
}

Digraph Digraph::reversed() const {
  std::vector<Arc> rev;
  rev.reserve(arcs_.size());
  for (const auto& a : arcs_) rev.push_back({a.terminus, a.origin});
  return build(n_, std::move(rev), multi_, Connectivity::report);
}

std::string Digraph::fingerprint() const {
  std::ostringstream os;
  os << "D" << n_;
  for (const auto& a : arcs_) os << ";" << a.origin << ">" << a.terminus;
  return fnv1a(os.str());
}

// ---------------------------------------------------------------------------

Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return Graph::build(n, edges, Connectivity::require);
}

Digraph symmetric_digraph(const Graph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (ArcId e = 0; e < g.arc_count(); ++e) arcs.push_back(g.arc(e));
  Digraph d = Digraph::build(g.vertex_count(), std::move(arcs), /*allow_multi=*/true,
                             g.is_connected() ? Connectivity::require : Connectivity::report);
  return d;
}

Graph torus_graph(std::size_t d, std::size_t side) {
  if (d == 0) throw GraphError("torus dimension must be at least 1");
  if (side < 3) throw GraphError("torus side must be at least 3 (smaller sides create parallel edges)");
  std::size_t n = 1;
  for (std::size_t j = 0; j < d; ++j) n *= side;
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(d * n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t stride = 1;
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t coord = (v / stride) % side;
      const Vertex w = v - coord * stride + ((coord + 1) % side) * stride;
      edges.emplace_back(v, w);
      stride *= side;
    }
  }
  return Graph::build(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle graph needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::build(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  if (n < 2) throw GraphError("complete graph needs n >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  if (n < 2) throw GraphError("path graph needs n >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, std::move(edges));
}

// ---------------------------------------------------------------------------

GraphMatrices struct_matrices(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t arcs = g.arc_count();
  GraphMatrices s;
  s.A = g.adjacency();
  s.D = Matrix<long>(n, n, 0);
  for (Vertex v = 0; v < n; ++v) s.D(v, v) = static_cast<long>(g.degree(v));
  s.Q = s.D - Matrix<long>::identity(n);
  s.B = Matrix<long>(arcs, arcs, 0);
  s.J0 = Matrix<long>(arcs, arcs, 0);
  for (ArcId e = 0; e < arcs; ++e) {
    for (ArcId f : g.out_arcs(g.terminus(e))) s.B(e, f) = 1;
    s.J0(e, g.inverse(e)) = 1;
  }
  return s;
}

DigraphMatrices struct_matrices(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  const std::size_t m = d.arc_count();
  DigraphMatrices s;
  s.A = d.adjacency();
  s.D1 = Matrix<long>(n, n, 0);
  s.D2 = Matrix<long>(n, n, 0);
  for (Vertex v = 0; v < n; ++v) {
    s.D1(v, v) = static_cast<long>(d.outdeg(v));
    s.D2(v, v) = static_cast<long>(d.indeg(v));
  }
  s.B1 = Matrix<long>(m, m, 0);
  s.B2 = Matrix<long>(m, m, 0);
  for (ArcId e = 0; e < m; ++e) {
    for (ArcId f : d.out_arcs(d.arc(e).origin)) s.B1(e, f) = 1;
    for (ArcId f : d.in_arcs(d.arc(e).terminus)) s.B2(e, f) = 1;
  }
  const Matrix<long> zm(m, m, 0), im = Matrix<long>::identity(m), zn(n, n, 0);
  s.calB = block2x2(zm, s.B1, s.B2, zm);
  s.calJ = block2x2(zm, im, im, zm);
  s.calA = block2x2(zn, s.A, transpose(s.A), zn);
  s.Delta = block2x2(s.D1, zn, zn, s.D2);
  return s;
}

}  // namespace zg
