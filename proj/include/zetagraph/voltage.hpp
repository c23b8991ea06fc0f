#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetagraph/graph.hpp"
#include "zetagraph/matrix.hpp"
#include "zetagraph/poly.hpp"

namespace zg {

using GroupElem = std::size_t;

class VoltageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kRepresentationTol = 1e-12;

/// Finite group given by its multiplication table: table[a][b] = a*b.
class FiniteGroup {
 public:
  /// Checks closure, associativity, identity and inverses.
  static FiniteGroup from_table(std::vector<std::vector<GroupElem>> table);
  /// Z_k with element j standing for tau^j.
  static FiniteGroup cyclic(std::size_t k);

  std::size_t order() const noexcept { return table_.size(); }
  GroupElem mul(GroupElem a, GroupElem b) const { return table_.at(a).at(b); }
  GroupElem inverse(GroupElem a) const { return inverse_.at(a); }
  GroupElem identity() const noexcept { return identity_; }
  const std::vector<std::vector<GroupElem>>& table() const noexcept { return table_; }

 private:
  std::vector<std::vector<GroupElem>> table_;
  std::vector<GroupElem> inverse_;
  GroupElem identity_ = 0;
};

/// Matrix representation: images[g] is rho(g), a degree x degree matrix.
struct Representation {
  std::string id;
  std::size_t degree = 1;
  std::vector<Matrix<Complex>> images;

  Complex character(GroupElem g) const;
  bool is_trivial(double tol = kRepresentationTol) const;
};

/// Throws VoltageError unless rho is unitary and multiplicative on `group`.
void validate_representation(const FiniteGroup& group, const Representation& rho,
                             double tol = kRepresentationTol);

/// The k characters chi_i(tau^j) = exp(2 pi i ij / k), ids "chi0".."chi{k-1}".
std::vector<Representation> cyclic_characters(std::size_t k);

/// <chi_a, chi_b> = (1/|G|) sum_g chi_a(g) conj(chi_b(g)).
Complex character_inner(const FiniteGroup& group, const Representation& a, const Representation& b);

/// Graph with an ordinary voltage assignment; voltages are stored per arc.
class VoltageGraph {
 public:
  /// `edge_voltages[i]` labels the forward arc of edge i; the inverse arc
  /// receives its group inverse.
  static VoltageGraph build(Graph base, FiniteGroup group, std::vector<Representation> reps,
                            const std::vector<GroupElem>& edge_voltages);

  const Graph& base() const noexcept { return base_; }
  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Representation>& reps() const noexcept { return reps_; }
  const Representation& rep(const std::string& id) const;
  GroupElem voltage(ArcId e) const { return voltages_.at(e); }
  const std::vector<GroupElem>& voltages() const noexcept { return voltages_; }

 private:
  VoltageGraph(Graph base, FiniteGroup group) : base_(std::move(base)), group_(std::move(group)) {}
  Graph base_;
  FiniteGroup group_;
  std::vector<Representation> reps_;
  std::vector<GroupElem> voltages_;
};

/// Digraph with a pseudo ordinary voltage assignment: alpha(f) = alpha(e)^-1
/// is required only for paired arcs e = (u, v), f = (v, u).
class VoltageDigraph {
 public:
  static VoltageDigraph build(Digraph base, FiniteGroup group, std::vector<Representation> reps,
                              std::vector<GroupElem> arc_voltages);

  const Digraph& base() const noexcept { return base_; }
  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Representation>& reps() const noexcept { return reps_; }
  const Representation& rep(const std::string& id) const;
  GroupElem voltage(ArcId e) const { return voltages_.at(e); }

 private:
  VoltageDigraph(Digraph base, FiniteGroup group) : base_(std::move(base)), group_(std::move(group)) {}
  Digraph base_;
  FiniteGroup group_;
  std::vector<Representation> reps_;
  std::vector<GroupElem> voltages_;
};

/// The derived cover: vertex (u, h) has index u * |G| + h and each base edge
/// (u, v) carrying g yields the edges ((u, h), (v, h g)). Connectivity is
/// reported through Graph::is_connected, not enforced.
Graph derived_graph(const VoltageGraph& vg);
Digraph derived_digraph(const VoltageDigraph& vd);

/// Twisted blocks sum_g rho(g) (x) X_g, with the representation index outer.
struct VoltageBlocks {
  Matrix<Complex> A;  ///< nd x nd, X_g = A_g
  Matrix<Complex> B;  ///< 2md x 2md, X_g = B_g (rows e with alpha(e) = g)
  Matrix<Complex> J;  ///< 2md x 2md, X_g = J_g
};

VoltageBlocks voltage_matrices(const VoltageGraph& vg, const std::string& rep_id);

/// sum_g rho(g) (x) X_g for per-element integer matrices X_g.
Matrix<Complex> twisted_sum(const Representation& rho, const std::vector<Matrix<long>>& parts);

}  // namespace zg
