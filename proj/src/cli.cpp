#include "zetagraph/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zetagraph/cycles.hpp"
#include "zetagraph/io.hpp"
#include "zetagraph/lfunction.hpp"
#include "zetagraph/spectral.hpp"
#include "zetagraph/zeta.hpp"

namespace zg {

namespace {

constexpr std::size_t kDefaultOrder = 24;
constexpr unsigned kDefaultMaxLen = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Curve {
  double t0 = 0, t1 = 0;
  std::size_t steps = 0;
  double at(std::size_t i) const { return t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(steps); }
};

Curve parse_curve(const std::string& s) {
  Curve c;
  std::istringstream in(s);
  char colon1 = 0, colon2 = 0;
  long steps = 0;
  if (!(in >> c.t0 >> colon1 >> c.t1 >> colon2 >> steps) || colon1 != ':' || colon2 != ':' || steps < 1 ||
      !in.eof())
    throw UsageError("--curve expects t0:t1:steps with steps >= 1");
  c.steps = static_cast<std::size_t>(steps);
  return c;
}

Json num(double x) { return round15(x); }

Json graph_info(const Graph& g) {
  return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"directed", false}, {"hash", g.fingerprint()}};
}

Json graph_info(const Digraph& d) {
  return Json{{"n", d.vertex_count()}, {"m", d.arc_count()}, {"directed", true}, {"hash", d.fingerprint()}};
}

Json series_json(const TruncatedSeries& s) {
  Json c = Json::array();
  for (const auto& x : s.coeffs()) c.push_back(rational_string(x));
  return Json{{"order", s.order()}, {"coeffs", c}};
}

Json counts_json(const std::vector<std::uint64_t>& v) {
  Json a = Json::array();
  for (std::size_t k = 1; k < v.size(); ++k) a.push_back(v[k]);
  return a;
}

/// tr(M^k) for k = 1..L.
std::vector<Integer> power_traces(const Matrix<long>& m, unsigned max_len) {
  Matrix<Integer> base(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) base(i, j) = m(i, j);
  std::vector<Integer> out(max_len + 1);
  Matrix<Integer> p = base;
  for (unsigned k = 1; k <= max_len; ++k) {
    Integer tr = 0;
    for (std::size_t i = 0; i < p.rows(); ++i) tr += p(i, i);
    out[k] = tr;
    if (k < max_len) p = p * base;
  }
  return out;
}

bool traces_match(const std::vector<std::uint64_t>& counts, const std::vector<Integer>& traces) {
  for (std::size_t k = 1; k < counts.size(); ++k)
    if (Integer(static_cast<unsigned long>(counts[k])) != traces[k]) return false;
  return true;
}

Json traces_json(const std::vector<Integer>& traces) {
  Json a = Json::array();
  for (std::size_t k = 1; k < traces.size(); ++k) a.push_back(traces[k].get_str());
  return a;
}

/// Series of 1 / reciprocal up to the order.
TruncatedSeries zeta_series(const RationalFn& reciprocal, std::size_t order) {
  return TruncatedSeries::from_fn(RationalFn(reciprocal.den(), reciprocal.num()), order);
}

Json l_json(const LReciprocal& L) {
  Json j{{"rep", L.rep_id}, {"degree", L.degree}, {"method", std::string(method_name(L.method))},
         {"exact", L.exact.has_value()}};
  if (L.value) {
    j["value"] = poly_json(*L.value);
  } else {
    Json re = Json::array(), im = Json::array();
    for (const auto& c : L.numeric.coeffs()) {
      re.push_back(num(c.real()));
      im.push_back(num(c.imag()));
    }
    j["numeric"] = Json{{"re", re}, {"im", im}};
  }
  return j;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int zeta(const std::string& path, const std::string& kind, const std::string& method, std::size_t order,
           bool series, const std::string& expect) {
    const AnyGraph any = load_graph(path);
    if (kind != "ihara" && kind != "alt") throw UsageError("--kind must be ihara or alt");
    std::vector<Method> methods;
    const bool all = method == "all";
    if (!all) methods.push_back(parse_method_or_usage(method));

    Json results = Json::object();
    Json warnings = Json::array();
    Json doc;
    std::optional<RationalFn> first;
    bool match = true;
    auto record = [&](const std::string& name, const RationalFn& f) {
      results[name] = fn_json(f);
      if (!first) first = f;
      else if (!(*first == f)) match = false;
    };

    if (const auto* g = std::get_if<Graph>(&any)) {
      doc["graph"] = graph_info(*g);
      if (kind == "ihara") {
        if (all) methods = {Method::hashimoto, Method::ihara};
        for (Method m : methods) {
          if (m != Method::hashimoto && m != Method::ihara)
            throw UsageError("--kind ihara supports the hashimoto and ihara methods");
          record(std::string(method_name(m)), ihara_reciprocal(*g, m).value);
        }
      } else {
        if (all) methods = {Method::factorized, Method::hashimoto, Method::ihara};
        for (Method m : methods) {
          if (m == Method::euler_truncated) throw UsageError("euler-truncated is available through the oracle command");
          record(std::string(method_name(m)), alt_reciprocal_graph(*g, m).value);
        }
        if (all && g->regular_degree()) record("spectral", regular_spectral_reciprocal(*g).value);
      }
      if (series) {
        warnings.push_back("the generalized zeta is the n-th root of the zeta function; vertex transitivity is assumed, not checked");
        doc["generalized_series"] =
            series_json(kind == "ihara" ? generalized_zeta_series(*g, order) : generalized_alt_zeta_series(*g, order));
      }
    } else {
      const auto& d = std::get<Digraph>(any);
      doc["graph"] = graph_info(d);
      if (kind != "alt") throw UsageError("digraph files support --kind alt only");
      if (all) methods = {Method::hashimoto, Method::ihara};
      for (Method m : methods) {
        if (m != Method::hashimoto && m != Method::ihara)
          throw UsageError("digraphs support the hashimoto and ihara methods");
        record(std::string(method_name(m)), alt_reciprocal_digraph(d, m).value);
      }
    }

    Json factored = Json::array();
    for (const auto& [p, e] : factored_hint(*first)) factored.push_back(Json{{"factor", p.to_string()}, {"power", e}});
    doc["factored"] = factored;
    doc["command"] = "zeta";
    doc["config"] = Json{{"kind", kind}, {"method", method}, {"order", order}};
    doc["results"] = results;
    doc["match"] = match;
    bool ok = match;
    if (!expect.empty()) {
      const RationalFn want = fn_from_json(load_json(expect));
      const bool golden = want == *first;
      doc["expected"] = Json{{"path", expect}, {"match", golden}};
      ok = ok && golden;
    }
    doc["warnings"] = warnings;
    for (const auto& w : warnings) err_ << "warning: " << w.get<std::string>() << '\n';
    emit(doc);
    err_ << "zeta " << kind << ": " << first->to_string() << (ok ? "" : "  [MISMATCH]") << '\n';
    return ok ? kExitOk : kExitCheckFailed;
  }

  int oracle(const std::string& path, unsigned max_len) {
    const AnyGraph any = load_graph(path);
    Budget budget(budget_from_env());
    Json doc{{"command", "oracle"}, {"config", Json{{"max_len", max_len}, {"budget", budget.limit()}}}};
    bool ok = true;

    auto alternating = [&](const Digraph& d, const RationalFn& za) {
      const auto counts = reduced_alt_cycle_counts(d, max_len, budget);
      const auto traces = power_traces(struct_matrices(d).calB - struct_matrices(d).calJ, max_len);
      const auto classes = prime_alt_classes(d, max_len, budget);
      const bool euler = euler_truncation(classes, max_len) == zeta_series(za, max_len);
      const auto res = resolvent_identity_check(d, max_len, budget);
      const bool trace_ok = traces_match(counts, traces);
      ok = ok && trace_ok && euler && res.max_residual == 0;
      return Json{{"counts", counts_json(counts)}, {"traces", traces_json(traces)}, {"trace_match", trace_ok},
                  {"prime_classes", classes.size()}, {"euler_match", euler},
                  {"resolvent_residual", res.max_residual}};
    };

    if (const auto* g = std::get_if<Graph>(&any)) {
      doc["graph"] = graph_info(*g);
      const auto counts = reduced_cycle_counts(*g, max_len, budget);
      const auto gm = struct_matrices(*g);
      const auto traces = power_traces(gm.B - gm.J0, max_len);
      const auto classes = prime_classes(*g, max_len, budget);
      const bool euler = euler_truncation(classes, max_len) == zeta_series(ihara_reciprocal(*g).value, max_len);
      const bool trace_ok = traces_match(counts, traces);
      ok = ok && trace_ok && euler;
      doc["reduced"] = Json{{"counts", counts_json(counts)}, {"traces", traces_json(traces)},
                            {"trace_match", trace_ok}, {"prime_classes", classes.size()}, {"euler_match", euler}};
      doc["alternating"] = alternating(symmetric_digraph(*g), alt_reciprocal_graph(*g).value);
      const auto corr = correspondence_check(*g, max_len, budget);
      Json problems = Json::array();
      for (const auto& p : corr.problems) problems.push_back(p);
      doc["correspondence"] = Json{{"cycle_classes", corr.entries.size()}, {"alt_classes", corr.alt_class_count},
                                   {"pairing_ok", corr.pairing_ok}, {"bijection_ok", corr.bijection_ok},
                                   {"problems", problems}};
      ok = ok && corr.ok();
    } else {
      const auto& d = std::get<Digraph>(any);
      doc["graph"] = graph_info(d);
      doc["alternating"] = alternating(d, alt_reciprocal_digraph(d).value);
    }
    doc["budget_used"] = budget.used();
    doc["pass"] = ok;
    emit(doc);
    err_ << "oracle L=" << max_len << ": " << (ok ? "all checks pass" : "CHECK FAILED") << '\n';
    return ok ? kExitOk : kExitCheckFailed;
  }

  int cover(const std::string& graph_path, const std::string& volt_path, const std::string& kind,
            const std::string& method, bool floating) {
    const AnyGraph any = load_graph(graph_path);
    const Json vj = load_json(volt_path);
    LOptions opt;
    opt.allow_exact = !floating;
    const Method m = parse_method_or_usage(method);
    CoverDecomposition dec;
    Json doc;
    if (const auto* g = std::get_if<Graph>(&any)) {
      if (kind != "ihara" && kind != "alt") throw UsageError("--kind must be ihara or alt");
      const auto vg = voltage_graph_from_json(*g, vj);
      doc["graph"] = graph_info(*g);
      doc["derived"] = graph_info(derived_graph(vg));
      dec = cover_zeta_decomposition(vg, kind == "ihara" ? CoverKind::ihara : CoverKind::alternating, m, opt);
    } else {
      if (kind != "alt") throw UsageError("digraph covers support --kind alt only");
      const auto vd = voltage_digraph_from_json(std::get<Digraph>(any), vj);
      doc["graph"] = graph_info(std::get<Digraph>(any));
      doc["derived"] = graph_info(derived_digraph(vd));
      dec = digraph_cover_alt_zeta(vd, m, opt);
    }
    Json factors = Json::array();
    for (const auto& f : dec.factors) {
      Json j = l_json(f.L);
      j["multiplicity"] = f.multiplicity;
      factors.push_back(j);
    }
    doc["command"] = "cover";
    doc["config"] = Json{{"kind", kind}, {"method", method}, {"exact", !floating}};
    doc["factors"] = factors;
    doc["product"] = dec.product ? fn_json(*dec.product) : Json(nullptr);
    doc["direct"] = fn_json(dec.direct);
    doc["derived_connected"] = dec.derived_connected;
    doc["exact"] = dec.exact;
    doc["match"] = dec.match;
    doc["note"] = dec.note;
    emit(doc);
    err_ << "cover " << kind << ": direct " << dec.direct.to_string() << (dec.match ? "  [match]" : "  [MISMATCH]")
         << '\n';
    return dec.match ? kExitOk : kExitCheckFailed;
  }

  int torus(std::size_t d, std::optional<std::size_t> side, bool limit, double t, std::size_t grid_points,
            const std::string& curve) {
    if (side && limit) throw UsageError("--n and --limit are mutually exclusive");
    const QuadratureGrid grid = QuadratureGrid::make(d, grid_points);
    auto value = [&](double x) { return side ? torus_finite_reciprocal(d, *side, x) : torus_limit(d, x, grid); };
    if (!curve.empty()) return emit_curve(parse_curve(curve), "t", value);
    Json doc{{"command", "torus"},
             {"config", Json{{"d", d}, {"t", num(t)}, {"grid", grid_points},
                             {"mode", side ? "finite" : "limit"}, {"n", side ? Json(*side) : Json(nullptr)}}}};
    const double v = value(t);
    doc["value"] = num(v);
    const double lim = torus_limit(d, t, grid);
    if (side) {
      doc["limit"] = num(lim);
      doc["delta_to_limit"] = num(std::abs(v - lim));
    } else {
      const double coarse = torus_limit(d, t, QuadratureGrid::make(d, std::max<std::size_t>(2, grid_points / 2)));
      doc["grid_delta"] = num(std::abs(v - coarse));
    }
    emit(doc);
    err_ << "torus d=" << d << " t=" << format15(t) << ": " << format15(v) << '\n';
    return kExitOk;
  }

  int mahler(std::size_t d, double c, const std::string& sign_text, std::size_t grid_points, const std::string& curve) {
    int sign = 0;
    if (sign_text == "+" || sign_text == "+1" || sign_text == "1" || sign_text == "plus") sign = 1;
    else if (sign_text == "-" || sign_text == "-1" || sign_text == "minus") sign = -1;
    else throw UsageError("--sign must be + or -");
    const QuadratureGrid grid = QuadratureGrid::make(d, grid_points);
    if (!curve.empty())
      return emit_curve(parse_curve(curve), "c", [&](double x) { return mahler_measure(d, sign, x, grid).value; });
    const auto r = mahler_measure(d, sign, c, grid);
    const auto coarse = mahler_measure(d, sign, c, QuadratureGrid::make(d, std::max<std::size_t>(2, grid_points / 2)));
    Json warnings = Json::array();
    for (const auto& w : r.warnings) {
      warnings.push_back(w);
      err_ << "warning: " << w << '\n';
    }
    Json doc{{"command", "mahler"},
             {"config", Json{{"d", d}, {"c", num(c)}, {"sign", sign}, {"grid", grid_points}}},
             {"value", num(r.value)},
             {"grid_delta", num(std::abs(r.value - coarse.value))},
             {"skipped_nodes", r.skipped_nodes},
             {"warnings", warnings}};
    emit(doc);
    err_ << "mahler d=" << d << " c=" << format15(c) << ": " << format15(r.value) << '\n';
    return kExitOk;
  }

  int torus_mahler(std::size_t d, double t, std::size_t grid_points, double tol, const std::string& curve) {
    const QuadratureGrid grid = QuadratureGrid::make(d, grid_points);
    if (!curve.empty()) {
      const Curve cv = parse_curve(curve);
      out_ << "t,lhs,rhs,diff\n";
      bool ok = true;
      for (std::size_t i = 0; i <= cv.steps; ++i) {
        const auto r = torus_mahler_check(d, cv.at(i), grid);
        ok = ok && r.diff < tol;
        out_ << format15(cv.at(i)) << ',' << format15(r.lhs) << ',' << format15(r.rhs) << ',' << format15(r.diff)
             << '\n';
      }
      return ok ? kExitOk : kExitCheckFailed;
    }
    const auto r = torus_mahler_check(d, t, grid);
    const bool ok = r.diff < tol;
    Json doc{{"command", "thm12"},
             {"config", Json{{"d", d}, {"t", num(t)}, {"grid", grid_points}, {"tol", num(tol)}}},
             {"c", num(r.c)},
             {"lhs", num(r.lhs)},
             {"rhs", num(r.rhs)},
             {"diff", num(r.diff)},
             {"pass", ok}};
    emit(doc);
    err_ << "torus-mahler d=" << d << " t=" << format15(t) << ": diff " << format15(r.diff) << (ok ? "" : "  [FAIL]") << '\n';
    return ok ? kExitOk : kExitCheckFailed;
  }

  int example() {
    Json checks = Json::array();
    bool ok = true;
    auto check = [&](const std::string& name, const RationalFn& got, const RationalFn& want) {
      const bool pass = got == want;
      ok = ok && pass;
      checks.push_back(Json{{"name", name}, {"pass", pass}, {"got", got.to_string()}, {"want", want.to_string()}});
    };
    auto check_count = [&](const std::string& name, std::size_t got, std::size_t want) {
      const bool pass = got == want;
      ok = ok && pass;
      checks.push_back(Json{{"name", name}, {"pass", pass}, {"got", std::to_string(got)}, {"want", std::to_string(want)}});
    };

    const RationalPoly one_minus_t3{1, 0, 0, -1};
    const RationalPoly one_minus_t6{1, 0, 0, 0, 0, 0, -1};
    const RationalPoly l_ihara{1, 0, 0, 1, 0, 0, 1};
    const RationalPoly l_alt = l_ihara * RationalPoly{1, 0, 0, -1, 0, 0, 1};
    RationalPoly one_minus_t18 = RationalPoly::monomial(-1, 18);
    one_minus_t18 += RationalPoly{1};
    RationalPoly one_minus_t9 = RationalPoly::monomial(-1, 9);
    one_minus_t9 += RationalPoly{1};

    const Graph k3 = complete_graph(3);
    for (Method m : {Method::hashimoto, Method::ihara})
      check("Z(K3)^-1 " + std::string(method_name(m)), ihara_reciprocal(k3, m).value, one_minus_t3.pow(2));
    for (Method m : {Method::factorized, Method::hashimoto, Method::ihara})
      check("Z_a(K3)^-1 " + std::string(method_name(m)), alt_reciprocal_graph(k3, m).value, one_minus_t6.pow(2));
    check("Z_a(K3)^-1 spectral", regular_spectral_reciprocal(k3).value, one_minus_t6.pow(2));

    Budget budget(budget_from_env());
    check_count("prime reduced classes of K3, L=3", prime_classes(k3, 3, budget).size(), 2);
    check_count("prime alternating classes of D(K3), L=6", prime_alt_classes(symmetric_digraph(k3), 6, budget).size(), 2);

    const auto vg = VoltageGraph::build(k3, FiniteGroup::cyclic(3), cyclic_characters(3), {1, 0, 0});
    const Graph cover = derived_graph(vg);
    check_count("derived graph vertices", cover.vertex_count(), 9);
    check_count("derived graph is 2-regular", cover.regular_degree().value_or(0), 2);
    check_count("derived graph is connected", cover.is_connected() ? 1 : 0, 1);
    check("Z_a(C9)^-1", alt_reciprocal_graph(cover).value, one_minus_t18.pow(2));
    for (const char* id : {"chi1", "chi2"}) {
      for (Method m : {Method::hashimoto, Method::ihara}) {
        const auto L = ihara_L_reciprocal(vg, id, m);
        check(std::string("L(") + id + ")^-1 " + std::string(method_name(m)), L.value.value_or(RationalPoly{}), l_ihara);
      }
      for (Method m : {Method::factorized, Method::hashimoto, Method::ihara}) {
        const auto L = alt_L_reciprocal(vg, id, m);
        check(std::string("L_a(") + id + ")^-1 " + std::string(method_name(m)), L.value.value_or(RationalPoly{}), l_alt);
      }
    }
    const auto ihara_cover = cover_zeta_decomposition(vg, CoverKind::ihara);
    check("Ihara cover product", ihara_cover.product.value_or(RationalFn(RationalPoly{})), one_minus_t9.pow(2));
    const auto alt_cover = cover_zeta_decomposition(vg, CoverKind::alternating);
    check("alternating cover product", alt_cover.product.value_or(RationalFn(RationalPoly{})), one_minus_t18.pow(2));
    check("alternating cover direct", alt_cover.direct, one_minus_t18.pow(2));
    check("(1-t^6)^2 (1+t^6+t^12)^2", RationalFn(one_minus_t6.pow(2) * l_alt.pow(2)), one_minus_t18.pow(2));
    const auto digraph_cover = digraph_cover_alt_zeta(symmetric_voltage_digraph(vg));
    check("digraph cover product", digraph_cover.product.value_or(RationalFn(RationalPoly{})), one_minus_t18.pow(2));

    emit(Json{{"command", "example"}, {"checks", checks}, {"pass", ok}});
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c["pass"].get<bool>() ? 1 : 0;
    err_ << "example: " << passed << "/" << checks.size() << " checks pass\n";
    return ok ? kExitOk : kExitCheckFailed;
  }

 private:
  static Method parse_method_or_usage(const std::string& s) {
    try {
      return parse_method(s);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  void emit(const Json& doc) { out_ << doc.dump(2) << '\n'; }

  int emit_curve(const Curve& c, const char* var, const std::function<double(double)>& f) {
    out_ << var << ",value\n";
    for (std::size_t i = 0; i <= c.steps; ++i) out_ << format15(c.at(i)) << ',' << format15(f(c.at(i))) << '\n';
    return kExitOk;
  }

  std::ostream& out_;
  std::ostream& err_;
};

int fail(std::ostream& out, std::ostream& err, int code, const std::string& kind, const std::string& what) {
  out << Json{{"error", what}, {"kind", kind}}.dump(2) << '\n';
  err << "error: " << what << '\n';
  return code;
}

}  // namespace

std::uint64_t budget_from_env() {
  if (const char* s = std::getenv("ZETAGRAPH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact zeta functions, L-functions and torus limits of graphs", "zetagraph"};
  app.require_subcommand(1);
  Runner run(out, err);
  std::function<int()> action;

  std::string graph_path, volt_path, kind = "ihara", method = "all", expect, curve, sign = "+";
  std::size_t order = kDefaultOrder, d = 2, grid = 0;
  unsigned max_len = kDefaultMaxLen;
  std::size_t side = 0;
  bool limit = false, series = false, floating = false;
  double t = 0.1, c = 0.0, tol = 1e-6;

  auto* zeta = app.add_subcommand("zeta", "Reciprocal zeta function by one or all determinant routes");
  zeta->add_option("graph", graph_path, "graph or digraph JSON file")->required();
  zeta->add_option("--kind", kind, "ihara | alt")->capture_default_str();
  zeta->add_option("--method", method, "hashimoto | ihara | factorized | all")->capture_default_str();
  zeta->add_option("--order,-K", order, "truncation order for --series")->capture_default_str();
  zeta->add_flag("--series", series, "also print the generalized (n-th root) zeta series");
  zeta->add_option("--expect", expect, "golden JSON file with the expected reciprocal");
  zeta->callback([&] { action = [&] { return run.zeta(graph_path, kind, method, order, series, expect); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force cycle counts checked against the determinant formulas");
  oracle->add_option("graph", graph_path, "graph or digraph JSON file")->required();
  oracle->add_option("--max-len,-L", max_len, "longest cycle length")->capture_default_str()->check(CLI::Range(1u, 64u));
  oracle->callback([&] { action = [&] { return run.oracle(graph_path, max_len); }; });

  auto* cover = app.add_subcommand("cover", "Zeta of a derived cover as a product of L-functions");
  cover->add_option("graph", graph_path, "base graph or digraph JSON file")->required();
  cover->add_option("voltages", volt_path, "voltage JSON file")->required();
  std::string cover_method = "hashimoto";
  cover->add_option("--kind", kind, "ihara | alt")->capture_default_str();
  cover->add_option("--method", cover_method, "hashimoto | ihara | factorized")->capture_default_str();
  cover->add_flag("--float", floating, "skip the exact cyclotomic route");
  cover->callback([&] { action = [&] { return run.cover(graph_path, volt_path, kind, cover_method, floating); }; });

  auto* torus = app.add_subcommand("torus", "Per-vertex alternating zeta reciprocal of a torus or its limit");
  torus->add_option("--d", d, "dimension")->capture_default_str()->check(CLI::Range(1, 6));
  auto* n_opt = torus->add_option("--n", side, "side length N of the finite torus")->check(CLI::Range(3, 1 << 20));
  torus->add_flag("--limit", limit, "the N -> infinity limit (default)");
  torus->add_option("--t", t, "argument t")->capture_default_str();
  torus->add_option("--grid,-G", grid, "quadrature points per axis (default 128, 48 for d = 4)");
  torus->add_option("--curve", curve, "t0:t1:steps, emits CSV");
  torus->callback([&] {
    action = [&, n_opt] {
      const std::optional<std::size_t> s = n_opt->count() ? std::optional<std::size_t>(side) : std::nullopt;
      return run.torus(d, s, limit, t, grid ? grid : default_grid(d), curve);
    };
  });

  auto* mahler = app.add_subcommand("mahler", "Logarithmic Mahler measure of +-sum(X_j + 1/X_j) - c");
  mahler->add_option("--d", d, "number of variables")->capture_default_str()->check(CLI::Range(0, 6));
  mahler->add_option("--c", c, "constant c")->capture_default_str();
  mahler->add_option("--sign", sign, "+ or -")->capture_default_str();
  mahler->add_option("--grid,-G", grid, "quadrature points per axis (default 128, 48 for d = 4)");
  mahler->add_option("--curve", curve, "c0:c1:steps, emits CSV");
  mahler->callback([&] { action = [&] { return run.mahler(d, c, sign, grid ? grid : default_grid(d), curve); }; });

  auto* tm = app.add_subcommand("thm12", "Torus log-zeta against its two Mahler measures");
  tm->add_option("--d", d, "dimension")->capture_default_str()->check(CLI::Range(1, 6));
  tm->add_option("--t", t, "argument t in (-1/(2d-1), 0)")->capture_default_str();
  tm->add_option("--grid,-G", grid, "quadrature points per axis (default 128, 48 for d = 4)");
  tm->add_option("--tol", tol, "pass threshold on |lhs - rhs|")->capture_default_str();
  tm->add_option("--curve", curve, "t0:t1:steps, emits CSV");
  tm->callback([&] { action = [&] { return run.torus_mahler(d, t, grid ? grid : default_grid(d), tol, curve); }; });

  auto* example = app.add_subcommand("example", "Triangle with Z_3 voltages: every golden value");
  example->callback([&] { action = [&] { return run.example(); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(out, err, kExitUsage, "usage", e.what());
  }
  if (!action) return fail(out, err, kExitUsage, "usage", "no command given");

  try {
    return action();
  } catch (const UsageError& e) {
    return fail(out, err, kExitUsage, "usage", e.what());
  } catch (const ParseError& e) {
    return fail(out, err, kExitUsage, "parse", e.what());
  } catch (const GraphError& e) {
    return fail(out, err, kExitUsage, "graph", e.what());
  } catch (const VoltageError& e) {
    return fail(out, err, kExitUsage, "voltage", e.what());
  } catch (const DomainError& e) {
    return fail(out, err, kExitUsage, "domain", e.what());
  } catch (const NotRegularError& e) {
    return fail(out, err, kExitUsage, "not-regular", e.what());
  } catch (const BudgetExceeded& e) {
    return fail(out, err, kExitCheckFailed, "budget", e.what());
  } catch (const RationalizationError& e) {
    return fail(out, err, kExitCheckFailed, "rationalization", e.what());
  } catch (const Json::exception& e) {
    return fail(out, err, kExitUsage, "parse", e.what());
  } catch (const std::exception& e) {
    return fail(out, err, kExitCheckFailed, "internal", e.what());
  }
}

}  // namespace zg
