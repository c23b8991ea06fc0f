#include "zetagraph/voltage.hpp"

#include <cmath>
#include <numbers>

namespace zg {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<GroupElem>> table) {
  const std::size_t p = table.size();
  if (p == 0) throw VoltageError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != p) throw VoltageError("group table is not square");
    for (GroupElem x : row)
      if (x >= p) throw VoltageError("group table entry out of range");
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  const auto& t = g.table_;

  bool found = false;
  for (GroupElem e = 0; e < p && !found; ++e) {
    bool ok = true;
    for (GroupElem x = 0; x < p && ok; ++x) ok = t[e][x] == x && t[x][e] == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw VoltageError("group table has no identity element");

  g.inverse_.assign(p, p);
  for (GroupElem a = 0; a < p; ++a) {
    for (GroupElem b = 0; b < p; ++b)
      if (t[a][b] == g.identity_ && t[b][a] == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] == p) throw VoltageError("element " + std::to_string(a) + " has no inverse");
  }
  for (GroupElem a = 0; a < p; ++a)
    for (GroupElem b = 0; b < p; ++b)
      for (GroupElem c = 0; c < p; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) throw VoltageError("group table is not associative");
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t k) {
  if (k == 0) throw VoltageError("cyclic group order must be positive");
  std::vector<std::vector<GroupElem>> table(k, std::vector<GroupElem>(k));
  for (GroupElem a = 0; a < k; ++a)
    for (GroupElem b = 0; b < k; ++b) table[a][b] = (a + b) % k;
  return from_table(std::move(table));
}

Complex Representation::character(GroupElem g) const { return trace(images.at(g)); }

bool Representation::is_trivial(double tol) const {
  if (degree != 1) return false;
  for (const auto& m : images)
    if (std::abs(m(0, 0) - Complex{1.0, 0.0}) > tol) return false;
  return true;
}

namespace {

double max_abs_diff(const Matrix<Complex>& a, const Matrix<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

Matrix<Complex> adjoint(const Matrix<Complex>& a) {
  Matrix<Complex> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

template <class Reps>
const Representation& find_rep(const Reps& reps, const std::string& id) {
  for (const auto& r : reps)
    if (r.id == id) return r;
  throw VoltageError("unknown representation id '" + id + "'");
}

void validate_reps(const FiniteGroup& group, const std::vector<Representation>& reps) {
  for (std::size_t i = 0; i < reps.size(); ++i) {
    validate_representation(group, reps[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (reps[i].id == reps[j].id) throw VoltageError("duplicate representation id '" + reps[i].id + "'");
  }
}

}  // namespace

void validate_representation(const FiniteGroup& group, const Representation& rho, double tol) {
  const std::size_t p = group.order();
  const std::string who = "representation '" + rho.id + "': ";
  if (rho.images.size() != p) throw VoltageError(who + "needs one image per group element");
  if (rho.degree == 0) throw VoltageError(who + "degree must be positive");
  const auto id = Matrix<Complex>::identity(rho.degree);
  for (GroupElem g = 0; g < p; ++g) {
    const auto& m = rho.images[g];
    if (m.rows() != rho.degree || m.cols() != rho.degree)
      throw VoltageError(who + "image of " + std::to_string(g) + " has the wrong size");
    if (max_abs_diff(m * adjoint(m), id) > tol)
      throw VoltageError(who + "image of " + std::to_string(g) + " is not unitary");
  }
  for (GroupElem a = 0; a < p; ++a)
    for (GroupElem b = 0; b < p; ++b)
      if (max_abs_diff(rho.images[a] * rho.images[b], rho.images[group.mul(a, b)]) > tol)
        throw VoltageError(who + "not a homomorphism at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
}

std::vector<Representation> cyclic_characters(std::size_t k) {
  std::vector<Representation> out;
  for (std::size_t i = 0; i < k; ++i) {
    Representation r{"chi" + std::to_string(i), 1, {}};
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t e = (i * j) % k;
      Complex z{1.0, 0.0};
      if (e != 0) {
        // Exact values at the quarter turns keep small cases clean.
        if (4 * e == k) z = {0.0, 1.0};
        else if (2 * e == k) z = {-1.0, 0.0};
        else if (4 * e == 3 * k) z = {0.0, -1.0};
        else {
          const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(k);
          z = {std::cos(angle), std::sin(angle)};
        }
      }
      r.images.emplace_back(1, 1, z);
    }
    out.push_back(std::move(r));
  }
  return out;
}

Complex character_inner(const FiniteGroup& group, const Representation& a, const Representation& b) {
  Complex s{};
  for (GroupElem g = 0; g < group.order(); ++g) s += a.character(g) * std::conj(b.character(g));
  return s / static_cast<double>(group.order());
}

VoltageGraph VoltageGraph::build(Graph base, FiniteGroup group, std::vector<Representation> reps,
                                 const std::vector<GroupElem>& edge_voltages) {
  const std::size_t m = base.edge_count();
  if (edge_voltages.size() != m)
    throw VoltageError("expected " + std::to_string(m) + " edge voltages, got " + std::to_string(edge_voltages.size()));
  validate_reps(group, reps);
  VoltageGraph vg(std::move(base), std::move(group));
  vg.reps_ = std::move(reps);
  vg.voltages_.resize(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (edge_voltages[i] >= vg.group_.order()) throw VoltageError("voltage of edge " + std::to_string(i) + " out of range");
    vg.voltages_[i] = edge_voltages[i];
    vg.voltages_[i + m] = vg.group_.inverse(edge_voltages[i]);
  }
  return vg;
}

const Representation& VoltageGraph::rep(const std::string& id) const { return find_rep(reps_, id); }

VoltageDigraph VoltageDigraph::build(Digraph base, FiniteGroup group, std::vector<Representation> reps,
                                     std::vector<GroupElem> arc_voltages) {
  if (arc_voltages.size() != base.arc_count()) throw VoltageError("expected one voltage per arc");
  validate_reps(group, reps);
  for (ArcId e = 0; e < arc_voltages.size(); ++e) {
    if (arc_voltages[e] >= group.order()) throw VoltageError("voltage of arc " + std::to_string(e) + " out of range");
    if (auto f = base.partner(e); f && arc_voltages[*f] != group.inverse(arc_voltages[e]))
      throw VoltageError("arcs " + std::to_string(e) + " and " + std::to_string(*f) +
                         " are reverse to each other but their voltages are not inverse");
  }
  VoltageDigraph vd(std::move(base), std::move(group));
  vd.reps_ = std::move(reps);
  vd.voltages_ = std::move(arc_voltages);
  return vd;
}

const Representation& VoltageDigraph::rep(const std::string& id) const { return find_rep(reps_, id); }

Graph derived_graph(const VoltageGraph& vg) {
  const Graph& g = vg.base();
  const std::size_t p = vg.group().order();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(p * g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto [u, v] = g.edges()[i];
    for (GroupElem h = 0; h < p; ++h) edges.emplace_back(u * p + h, v * p + vg.group().mul(h, vg.voltage(i)));
  }
  return Graph::build(g.vertex_count() * p, std::move(edges), Connectivity::report);
}

Digraph derived_digraph(const VoltageDigraph& vd) {
  const Digraph& d = vd.base();
  const std::size_t p = vd.group().order();
  std::vector<Arc> arcs;
  arcs.reserve(p * d.arc_count());
  for (ArcId e = 0; e < d.arc_count(); ++e) {
    const Arc& a = d.arc(e);
    for (GroupElem h = 0; h < p; ++h)
      arcs.push_back({a.origin * p + h, a.terminus * p + vd.group().mul(h, vd.voltage(e))});
  }
  return Digraph::build(d.vertex_count() * p, std::move(arcs), d.is_multi(), Connectivity::report);
}

Matrix<Complex> twisted_sum(const Representation& rho, const std::vector<Matrix<long>>& parts) {
  if (parts.size() != rho.images.size()) throw VoltageError("twisted_sum: one part per group element required");
  const std::size_t r = parts.empty() ? 0 : parts.front().rows();
  const std::size_t c = parts.empty() ? 0 : parts.front().cols();
  Matrix<Complex> out(rho.degree * r, rho.degree * c, Complex{});
  for (GroupElem g = 0; g < parts.size(); ++g) {
    const auto lifted = map_entries<Complex>(parts[g], [](long v) { return Complex(static_cast<double>(v), 0.0); });
    out = out + kron(rho.images[g], lifted);
  }
  return out;
}

VoltageBlocks voltage_matrices(const VoltageGraph& vg, const std::string& rep_id) {
  const Representation& rho = vg.rep(rep_id);
  const Graph& g = vg.base();
  const std::size_t p = vg.group().order();
  const std::size_t n = g.vertex_count();
  const std::size_t arcs = g.arc_count();
  std::vector<Matrix<long>> a(p, Matrix<long>(n, n, 0)), b(p, Matrix<long>(arcs, arcs, 0)),
      j(p, Matrix<long>(arcs, arcs, 0));
  for (ArcId e = 0; e < arcs; ++e) {
    const GroupElem h = vg.voltage(e);
    ++a[h](g.origin(e), g.terminus(e));
    for (ArcId f : g.out_arcs(g.terminus(e))) b[h](e, f) = 1;
    j[h](e, g.inverse(e)) = 1;
  }
  return {twisted_sum(rho, a), twisted_sum(rho, b), twisted_sum(rho, j)};
}

}  // namespace zg
