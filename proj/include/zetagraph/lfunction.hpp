#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zetagraph/cyclotomic.hpp"
#include "zetagraph/voltage.hpp"
#include "zetagraph/zeta.hpp"

namespace zg {

/// Reciprocal of an L-function for one representation.
///
/// When every image entry of the representation is 0 or a root of unity of
/// order dividing the group exponent, the determinant is taken exactly over
/// that cyclotomic field (`exact`); otherwise in complex doubles. `value` is
/// set whenever the coefficients are rational (exactly, or after snapping).
struct LReciprocal {
  std::string rep_id;
  std::size_t degree = 1;
  Method method = Method::hashimoto;
  ComplexPoly numeric;
  std::optional<RationalPoly> value;
  std::optional<CycloPoly> exact;
};

struct LOptions {
  bool allow_exact = true;  ///< false forces the complex floating route
  double tol = kDefaultRationalizeTol;
};

/// Ihara L-function reciprocal. hashimoto: det(I - t sum rho(g) (x) (B_g - J_g));
/// ihara: (1-t^2)^((m-n)d) det(I - t sum rho(g) (x) A_g + t^2 I_d (x) Q).
LReciprocal ihara_L_reciprocal(const VoltageGraph& vg, const std::string& rep_id,
                               Method method = Method::hashimoto, const LOptions& opt = {});

/// Alternating L-function reciprocal of a graph. factorized: L(t) L(-t) from
/// the Ihara L-function; hashimoto: det(I - tX) det(I + tX), X = sum rho(g) (x) (B_g - J_g);
/// ihara: the digraph Ihara form on the symmetric digraph.
LReciprocal alt_L_reciprocal(const VoltageGraph& vg, const std::string& rep_id,
                             Method method = Method::factorized, const LOptions& opt = {});

/// Alternating L-function reciprocal of a voltage digraph. hashimoto:
/// det(I - t(calB_rho - S)) with S the block swap; ihara:
/// (1-t^2)^((m-2n)d) det(I - t calA_rho + t^2 (Delta_d - I)).
LReciprocal digraph_alt_L_reciprocal(const VoltageDigraph& vd, const std::string& rep_id,
                                     Method method = Method::hashimoto, const LOptions& opt = {});

/// The symmetric digraph of the base graph with the same arc voltages.
VoltageDigraph symmetric_voltage_digraph(const VoltageGraph& vg);

/// Throws VoltageError unless the representations are pairwise inequivalent
/// irreducibles (character orthonormality) with sum of squared degrees |G|.
void require_complete_irreps(const FiniteGroup& group, const std::vector<Representation>& reps);

/// Smallest N with g^N = 1 for every element.
unsigned group_exponent(const FiniteGroup& group);

enum class CoverKind { ihara, alternating };

struct CoverFactor {
  LReciprocal L;
  std::size_t multiplicity = 1;
};

struct CoverDecomposition {
  std::vector<CoverFactor> factors;
  std::optional<RationalFn> product;  ///< empty if the product did not rationalize
  RationalFn direct;                  ///< reciprocal computed on the derived (di)graph
  bool derived_connected = true;
  bool exact = true;                  ///< every factor was computed exactly
  bool match = false;
  std::string note;
};

/// prod_i (L_i^-1)^(d_i) over the supplied irreducibles against the derived graph.
CoverDecomposition cover_zeta_decomposition(const VoltageGraph& vg, CoverKind kind,
                                            Method method = Method::hashimoto, const LOptions& opt = {});

/// Same for the alternating zeta of a voltage digraph's derived digraph.
CoverDecomposition digraph_cover_alt_zeta(const VoltageDigraph& vd, Method method = Method::hashimoto,
                                          const LOptions& opt = {});

}  // namespace zg
