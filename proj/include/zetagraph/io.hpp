#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "zetagraph/graph.hpp"
#include "zetagraph/poly.hpp"
#include "zetagraph/voltage.hpp"

namespace zg {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// A graph file holds {"n", "edges": [[u, v], ...]}; a digraph file uses
/// "arcs" instead of "edges". Vertices are 0-based.
using AnyGraph = std::variant<Graph, Digraph>;

AnyGraph graph_from_json(const Json& j);
AnyGraph load_graph(const std::string& path);
Json load_json(const std::string& path);

/// Voltage file:
///   {"group": "Z_3" | {"table": [[...], ...]},
///    "reps": [{"id": "...", "images": [matrix per element]}],   optional for Z_k
///    "voltages": [{"edge": i, "g": j}, ...]}                    "arc" for digraphs
/// Matrix entries are numbers or [re, im] pairs. Unlisted edges carry the identity.
VoltageGraph voltage_graph_from_json(const Graph& base, const Json& j);
VoltageDigraph voltage_digraph_from_json(const Digraph& base, const Json& j);

/// "p/q", or "p" for integers.
std::string rational_string(const Rational& r);
Rational parse_rational(const std::string& s);

Json poly_json(const RationalPoly& p);
RationalPoly poly_from_json(const Json& j);
Json fn_json(const RationalFn& f);
RationalFn fn_from_json(const Json& j);

/// x rounded to 15 significant digits.
double round15(double x);
/// printf("%.15g").
std::string format15(double x);

}  // namespace zg
