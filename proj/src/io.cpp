#include "zetagraph/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>

namespace zg {

namespace {

std::size_t index_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
    throw ParseError(std::string("expected a nonnegative integer \"") + key + "\"");
  return j[key].get<std::size_t>();
}

std::vector<std::pair<Vertex, Vertex>> pairs(const Json& list, const char* what) {
  if (!list.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        e[0].get<long long>() < 0 || e[1].get<long long>() < 0)
      throw ParseError(std::string("each entry of \"") + what + "\" must be a pair of vertex indices");
    out.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return out;
}

Complex complex_entry(const Json& x) {
  if (x.is_number()) return {x.get<double>(), 0.0};
  if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number())
    return {x[0].get<double>(), x[1].get<double>()};
  throw ParseError("matrix entries must be numbers or [re, im] pairs");
}

FiniteGroup group_from_json(const Json& g) {
  if (g.is_string()) {
    const auto s = g.get<std::string>();
    if (s.size() > 2 && (s.rfind("Z_", 0) == 0 || s.rfind("C_", 0) == 0)) {
      char* end = nullptr;
      const long k = std::strtol(s.c_str() + 2, &end, 10);
      if (*end == '\0' && k >= 1) return FiniteGroup::cyclic(static_cast<std::size_t>(k));
    }
    throw ParseError("unknown group \"" + s + "\" (use \"Z_k\" or a multiplication table)");
  }
  if (g.is_object() && g.contains("table")) {
    std::vector<std::vector<GroupElem>> table;
    for (const auto& row : g["table"]) {
      std::vector<GroupElem> r;
      for (const auto& x : row) r.push_back(x.get<GroupElem>());
      table.push_back(std::move(r));
    }
    return FiniteGroup::from_table(std::move(table));
  }
  throw ParseError("\"group\" must be \"Z_k\" or {\"table\": ...}");
}

std::vector<Representation> reps_from_json(const Json& j, const FiniteGroup& group) {
  if (!j.contains("reps")) {
    const auto& table = group.table();
    for (std::size_t a = 0; a < table.size(); ++a)
      if (table[a][1 % table.size()] != (a + 1) % table.size())
        throw ParseError("\"reps\" is required unless the group is Z_k");
    return cyclic_characters(group.order());
  }
  std::vector<Representation> reps;
  for (const auto& r : j["reps"]) {
    Representation rho;
    rho.id = r.at("id").get<std::string>();
    const auto& images = r.at("images");
    if (images.size() != group.order()) throw ParseError("rep \"" + rho.id + "\" needs one image per group element");
    for (const auto& m : images) {
      if (!m.is_array() || m.empty()) throw ParseError("rep \"" + rho.id + "\": images must be square matrices");
      const std::size_t d = m.size();
      Matrix<Complex> img(d, d);
      for (std::size_t i = 0; i < d; ++i) {
        if (!m[i].is_array() || m[i].size() != d) throw ParseError("rep \"" + rho.id + "\": images must be square matrices");
        for (std::size_t k = 0; k < d; ++k) img(i, k) = complex_entry(m[i][k]);
      }
      rho.images.push_back(std::move(img));
    }
    rho.degree = rho.images.front().rows();
    for (const auto& img : rho.images)
      if (img.rows() != rho.degree) throw ParseError("rep \"" + rho.id + "\": images differ in size");
    reps.push_back(std::move(rho));
  }
  return reps;
}

std::vector<GroupElem> voltages_from_json(const Json& j, const char* key, std::size_t count,
                                          const FiniteGroup& group) {
  std::vector<GroupElem> out(count, group.identity());
  if (!j.contains("voltages")) return out;
  for (const auto& v : j["voltages"]) {
    const std::size_t i = index_field(v, key);
    const std::size_t g = index_field(v, "g");
    if (i >= count) throw ParseError(std::string("voltage ") + key + " index " + std::to_string(i) + " out of range");
    if (g >= group.order()) throw ParseError("group element " + std::to_string(g) + " out of range");
    out[i] = g;
  }
  return out;
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

AnyGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph must be a JSON object");
  const std::size_t n = index_field(j, "n");
  if (j.contains("arcs")) {
    std::vector<Arc> arcs;
    for (auto [u, v] : pairs(j["arcs"], "arcs")) arcs.push_back({u, v});
    return Digraph::build(n, std::move(arcs), j.value("multi", false));
  }
  if (!j.contains("edges")) throw ParseError("graph needs \"edges\" or \"arcs\"");
  return Graph::build(n, pairs(j["edges"], "edges"));
}

AnyGraph load_graph(const std::string& path) { return graph_from_json(load_json(path)); }

VoltageGraph voltage_graph_from_json(const Graph& base, const Json& j) {
  FiniteGroup group = group_from_json(j.at("group"));
  auto reps = reps_from_json(j, group);
  auto volts = voltages_from_json(j, "edge", base.edge_count(), group);
  return VoltageGraph::build(base, std::move(group), std::move(reps), volts);
}

VoltageDigraph voltage_digraph_from_json(const Digraph& base, const Json& j) {
  FiniteGroup group = group_from_json(j.at("group"));
  auto reps = reps_from_json(j, group);
  auto volts = voltages_from_json(j, "arc", base.arc_count(), group);
  return VoltageDigraph::build(base, std::move(group), std::move(reps), std::move(volts));
}

std::string rational_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || s.empty()) throw ParseError("not a rational: \"" + s + "\"");
  if (sgn(r.get_den()) == 0) throw ParseError("zero denominator: \"" + s + "\"");
  r.canonicalize();
  return r;
}

Json poly_json(const RationalPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_string(c));
  return Json{{"coeffs", coeffs}, {"text", p.to_string()}};
}

RationalPoly poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) {
    if (x.is_number_integer()) c.emplace_back(x.get<long>());
    else c.push_back(parse_rational(x.get<std::string>()));
  }
  return RationalPoly(std::move(c));
}

Json fn_json(const RationalFn& f) {
  return Json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}, {"text", f.to_string()}};
}

RationalFn fn_from_json(const Json& j) {
  if (j.contains("num")) return RationalFn(poly_from_json(j["num"]), poly_from_json(j.at("den")));
  return RationalFn(poly_from_json(j));
}

std::string format15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round15(double x) { return std::strtod(format15(x).c_str(), nullptr); }

}  // namespace zg
