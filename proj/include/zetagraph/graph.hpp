#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zetagraph/matrix.hpp"

namespace zg {

using Vertex = std::size_t;
using ArcId = std::size_t;

/// Rejected graph or digraph input (self-loop, bad index, disconnected, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arc {
  Vertex origin;
  Vertex terminus;
  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class Connectivity { require, report };

/// Finite undirected (multi)graph without self-loops.
///
/// Edge i = {u, v} (as given) yields arc i = (u, v) and arc m + i = (v, u),
/// so the arc list is e_1..e_m, e_1^-1..e_m^-1 and inverse(e) = e +- m.
class Graph {
 public:
  /// Builds and validates a graph. With Connectivity::require a
  /// disconnected input is rejected with a report of its components.
  static Graph build(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges,
                     Connectivity mode = Connectivity::require);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t arc_count() const noexcept { return 2 * edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  bool is_connected() const noexcept { return connected_; }

  Arc arc(ArcId e) const;
  Vertex origin(ArcId e) const { return arc(e).origin; }
  Vertex terminus(ArcId e) const { return arc(e).terminus; }
  ArcId inverse(ArcId e) const noexcept { return e < edges_.size() ? e + edges_.size() : e - edges_.size(); }

  std::size_t degree(Vertex v) const { return out_arcs_.at(v).size(); }
  /// Arcs whose origin is v, in increasing arc order.
  const std::vector<ArcId>& out_arcs(Vertex v) const { return out_arcs_.at(v); }
  std::vector<std::size_t> degree_sequence() const;
  /// Regularity degree q + 1 if every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;

  Matrix<long> adjacency() const;

  /// Stable fingerprint of (n, edge list).
  std::string fingerprint() const;

 private:
  Graph() = default;
  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<ArcId>> out_arcs_;
  bool connected_ = true;
};

/// Finite digraph without self-loops.
class Digraph {
 public:
  /// Duplicate arcs are rejected unless `allow_multi` is set.
  static Digraph build(std::size_t n, std::vector<Arc> arcs, bool allow_multi = false,
                       Connectivity mode = Connectivity::require);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(ArcId e) const { return arcs_.at(e); }
  bool is_connected() const noexcept { return connected_; }
  bool is_multi() const noexcept { return multi_; }

  /// The reverse arc (v, u) of (u, v) when it exists (first match).
  std::optional<ArcId> partner(ArcId e) const { return partner_.at(e); }

  /// Arcs leaving / entering v, in increasing arc order.
  const std::vector<ArcId>& out_arcs(Vertex v) const { return out_arcs_.at(v); }
  const std::vector<ArcId>& in_arcs(Vertex v) const { return in_arcs_.at(v); }
  std::size_t outdeg(Vertex v) const { return out_arcs_.at(v).size(); }
  std::size_t indeg(Vertex v) const { return in_arcs_.at(v).size(); }

  /// Adjacency matrix (entry counts parallel arcs).
  Matrix<long> adjacency() const;
  /// Same vertices with every arc reversed (adjacency transposed).
  Digraph reversed() const;

  std::string fingerprint() const;

 private:
  Digraph() = default;
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::optional<ArcId>> partner_;
  std::vector<std::vector<ArcId>> out_arcs_, in_arcs_;
  bool connected_ = true;
  bool multi_ = false;
};

/// Convenience wrapper around Graph::build requiring connectivity.
Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

/// The symmetric digraph D(G); arc ids coincide with the graph's arc ids.
Digraph symmetric_digraph(const Graph& g);

/// d-dimensional discrete torus with side N (N >= 3): vertices {0..N-1}^d,
/// vertex index sum_j i_j N^j, neighbours differ by +-1 mod N in one slot.
Graph torus_graph(std::size_t d, std::size_t side);
/// Cycle graph C_n (n >= 3), edges {i, i+1 mod n}.
Graph cycle_graph(std::size_t n);
/// Complete graph K_n (n >= 2).
Graph complete_graph(std::size_t n);
/// Path graph on n >= 2 vertices.
Graph path_graph(std::size_t n);

/// Integer structure matrices of a graph.
struct GraphMatrices {
  Matrix<long> A;   ///< adjacency, n x n
  Matrix<long> D;   ///< degree diagonal
  Matrix<long> Q;   ///< D - I
  Matrix<long> B;   ///< 2m x 2m, B_ef = 1 iff t(e) = o(f)
  Matrix<long> J0;  ///< 2m x 2m, J_ef = 1 iff f = e^-1
};

/// Integer structure matrices of a digraph (m arcs, n vertices).
struct DigraphMatrices {
  Matrix<long> A;      ///< adjacency, n x n
  Matrix<long> D1;     ///< diag(A A^T): outdegrees
  Matrix<long> D2;     ///< diag(A^T A): indegrees
  Matrix<long> B1;     ///< m x m, o(e) = o(f)
  Matrix<long> B2;     ///< m x m, t(e) = t(f)
  Matrix<long> calB;   ///< [[0, B1], [B2, 0]]
  Matrix<long> calJ;   ///< [[0, I], [I, 0]]
  Matrix<long> calA;   ///< [[0, A], [A^T, 0]]
  Matrix<long> Delta;  ///< [[D1, 0], [0, D2]]
};

GraphMatrices struct_matrices(const Graph& g);
DigraphMatrices struct_matrices(const Digraph& d);

}  // namespace zg
