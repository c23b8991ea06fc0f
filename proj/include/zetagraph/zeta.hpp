#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetagraph/graph.hpp"
#include "zetagraph/poly.hpp"

namespace zg {

enum class Method { hashimoto, ihara, factorized, euler_truncated };

std::string_view method_name(Method m);
/// Accepts "hashimoto", "ihara", "factorized", "euler-truncated".
Method parse_method(std::string_view s);

/// Reciprocal of a zeta function, tagged with the route that produced it.
struct ZetaReciprocal {
  RationalFn value;
  Method method;
  std::string graph_hash;
};

class NotRegularError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Z(G,t)^-1. hashimoto: det(I - t(B - J0)); ihara: (1-t^2)^(m-n) det(I - tA + t^2 Q).
ZetaReciprocal ihara_reciprocal(const Graph& g, Method method = Method::hashimoto);

/// Alternating zeta reciprocal of a digraph. hashimoto: det(I - t(calB - calJ));
/// ihara: (1-t^2)^(m-2n) det(I - t calA + t^2 (Delta - I)).
ZetaReciprocal alt_reciprocal_digraph(const Digraph& d, Method method = Method::hashimoto);

/// Alternating zeta reciprocal of a graph. factorized: Z^-1(t) Z^-1(-t);
/// hashimoto / ihara: the digraph routes on the symmetric digraph.
ZetaReciprocal alt_reciprocal_graph(const Graph& g, Method method = Method::factorized);

/// Z_a(G,t)^-1 for a (q+1)-regular graph through the transition matrix P = A/(q+1):
/// (1-t^2)^(2(m-n)) det((1+qt^2)I - (q+1)tP) det((1+qt^2)I + (q+1)tP).
ZetaReciprocal regular_spectral_reciprocal(const Graph& g);

/// Z_a(G,t)^(1/n) to order K. Only meaningful for vertex-transitive G,
/// which is not checked here.
TruncatedSeries generalized_alt_zeta_series(const Graph& g, std::size_t order);

/// Z(G,t)^(1/n) to order K (same caveat).
TruncatedSeries generalized_zeta_series(const Graph& g, std::size_t order);

/// Square-free factorization of the numerator, as a display aid.
std::vector<std::pair<RationalPoly, int>> factored_hint(const RationalFn& f);

}  // namespace zg
