#include "zetagraph/lfunction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zetagraph/determinant.hpp"

namespace zg {

namespace {

using Elem = CyclotomicField::Elem;

// One summand rho(g) (x) part (or I_d (x) part when g is empty), placed at
// block offset (row, col) of a larger matrix.
struct Term {
  std::optional<GroupElem> g;
  Matrix<long> part;
  std::size_t row = 0, col = 0;
};

struct Pencil {
  std::size_t size = 0;  // final matrix dimension
  std::vector<Term> x, y;
  long one_minus_t2 = 0;  // exponent of the (1 - t^2) prefactor
};

Matrix<Complex> assemble(const Representation& rho, const std::vector<Term>& terms, std::size_t size) {
  const std::size_t d = rho.degree;
  Matrix<Complex> out(size, size, Complex{});
  const auto id = Matrix<Complex>::identity(d);
  for (const auto& t : terms) {
    const Matrix<Complex>& img = t.g ? rho.images.at(*t.g) : id;
    const std::size_t s = t.part.rows(), c = t.part.cols();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        if (img(a, b) == Complex{}) continue;
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < c; ++j)
            if (t.part(i, j) != 0)
              out(t.row + a * s + i, t.col + b * c + j) += img(a, b) * static_cast<double>(t.part(i, j));
      }
  }
  return out;
}

Matrix<Elem> assemble_exact(const CyclotomicField& f, const std::vector<Matrix<Elem>>& images, std::size_t d,
                            const std::vector<Term>& terms, std::size_t size) {
  Matrix<Elem> out(size, size, f.zero());
  Matrix<Elem> id(d, d, f.zero());
  for (std::size_t a = 0; a < d; ++a) id(a, a) = f.from_rational(1);
  for (const auto& t : terms) {
    const Matrix<Elem>& img = t.g ? images.at(*t.g) : id;
    const std::size_t s = t.part.rows(), c = t.part.cols();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        if (f.is_zero(img(a, b))) continue;
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < c; ++j)
            if (t.part(i, j) != 0) {
              auto& cell = out(t.row + a * s + i, t.col + b * c + j);
              cell = f.add(cell, f.scale(Rational(t.part(i, j)), img(a, b)));
            }
      }
  }
  return out;
}

ComplexPoly times_one_minus_t2(const ComplexPoly& p, long k) {
  if (k >= 0) return p * ComplexPoly::from_rational(RationalPoly::one_minus_t2_pow(static_cast<unsigned>(k)), p.tol());
  return p.divide_one_minus_t2(static_cast<unsigned>(-k));
}

// Shared evaluation of det(pencil) for one representation.
struct Evaluated {
  ComplexPoly numeric;
  std::optional<CycloPoly> exact;
  std::optional<RationalPoly> rational;  // product of separately snapped factors
};

class Evaluator {
 public:
  Evaluator(const FiniteGroup& group, const Representation& rho, const LOptions& opt)
      : rho_(rho), opt_(opt), field_(group_exponent(group)) {
    if (!opt.allow_exact) return;
    std::vector<Matrix<Elem>> imgs;
    for (const auto& m : rho.images) {
      auto e = recognize_matrix(field_, m);
      if (!e) return;
      imgs.push_back(std::move(*e));
    }
    images_ = std::move(imgs);
  }

  bool exact() const { return images_.has_value(); }
  const CyclotomicField& field() const { return field_; }

  Evaluated det(const Pencil& p) const {
    if (exact()) {
      const std::size_t d = rho_.degree;
      CycloPoly c = cyclotomic_pencil_det(field_, assemble_exact(field_, *images_, d, p.x, p.size),
                                          assemble_exact(field_, *images_, d, p.y, p.size));
      c = c.scaled_by(RationalFn::one_minus_t2_pow(p.one_minus_t2));
      return {c.to_complex(field_, opt_.tol), std::move(c), std::nullopt};
    }
    const auto x = assemble(rho_, p.x, p.size);
    const auto y = assemble(rho_, p.y, p.size);
    ComplexPoly c = cpoly_det(quadratic_pencil(x, y, opt_.tol), opt_.tol);
    return {times_one_minus_t2(c, p.one_minus_t2), std::nullopt, std::nullopt};
  }

  Evaluated product(const Evaluated& a, const Evaluated& b) const {
    Evaluated out{a.numeric * b.numeric, std::nullopt, std::nullopt};
    if (a.exact && b.exact) {
      out.exact = multiply(field_, *a.exact, *b.exact);
      out.numeric = out.exact->to_complex(field_, opt_.tol);
    } else if (auto ra = a.numeric.try_rationalize()) {
      if (auto rb = b.numeric.try_rationalize()) out.rational = *ra * *rb;
    }
    return out;
  }

  Evaluated reflect(const Evaluated& a) const {
    Evaluated out{a.numeric.reflect(), std::nullopt, std::nullopt};
    if (a.exact) out.exact = a.exact->reflect();
    return out;
  }

  LReciprocal finish(const std::string& id, Method method, Evaluated e) const {
    LReciprocal r;
    r.rep_id = id;
    r.degree = rho_.degree;
    r.method = method;
    r.numeric = std::move(e.numeric);
    if (e.exact) {
      if (e.exact->is_rational()) r.value = e.exact->rational_part();
      r.exact = std::move(e.exact);
    } else if (e.rational) {
      r.value = std::move(e.rational);
    } else {
      r.value = r.numeric.try_rationalize();
    }
    return r;
  }

 private:
  const Representation& rho_;
  LOptions opt_;
  CyclotomicField field_;
  std::optional<std::vector<Matrix<Elem>>> images_;
};

long as_long(std::size_t v) { return static_cast<long>(v); }

Pencil graph_hashimoto_pencil(const VoltageGraph& vg, std::size_t d) {
  const Graph& g = vg.base();
  const std::size_t arcs = g.arc_count();
  std::vector<Matrix<long>> parts(vg.group().order(), Matrix<long>(arcs, arcs, 0));
  for (ArcId e = 0; e < arcs; ++e) {
    auto& part = parts[vg.voltage(e)];
    for (ArcId f : g.out_arcs(g.terminus(e))) part(e, f) += 1;
    part(e, g.inverse(e)) -= 1;
  }
  Pencil p;
  p.size = arcs * d;
  for (GroupElem h = 0; h < parts.size(); ++h) p.x.push_back({h, std::move(parts[h]), 0, 0});
  return p;
}

Pencil graph_ihara_pencil(const VoltageGraph& vg, std::size_t d) {
  const Graph& g = vg.base();
  const std::size_t n = g.vertex_count();
  std::vector<Matrix<long>> parts(vg.group().order(), Matrix<long>(n, n, 0));
  for (ArcId e = 0; e < g.arc_count(); ++e) ++parts[vg.voltage(e)](g.origin(e), g.terminus(e));
  Pencil p;
  p.size = n * d;
  for (GroupElem h = 0; h < parts.size(); ++h) p.x.push_back({h, std::move(parts[h]), 0, 0});
  p.y.push_back({std::nullopt, struct_matrices(g).Q, 0, 0});
  p.one_minus_t2 = (as_long(g.edge_count()) - as_long(n)) * as_long(d);
  return p;
}

Pencil digraph_hashimoto_pencil(const VoltageDigraph& vd, std::size_t d) {
  const Digraph& D = vd.base();
  const std::size_t m = D.arc_count();
  const auto s = struct_matrices(D);
  const FiniteGroup& grp = vd.group();
  std::vector<Matrix<long>> parts(grp.order(), Matrix<long>(m, m, 0));
  for (ArcId e = 0; e < m; ++e)
    for (ArcId f : D.in_arcs(D.arc(e).terminus))
      ++parts[grp.mul(vd.voltage(e), grp.inverse(vd.voltage(f)))](e, f);
  const auto im = Matrix<long>::identity(m);
  Pencil p;
  p.size = 2 * m * d;
  p.x.push_back({std::nullopt, s.B1 - im, 0, m * d});
  p.x.push_back({std::nullopt, scaled(-1L, im), m * d, 0});
  for (GroupElem h = 0; h < parts.size(); ++h) p.x.push_back({h, std::move(parts[h]), m * d, 0});
  return p;
}

Pencil digraph_ihara_pencil(const VoltageDigraph& vd, std::size_t d) {
  const Digraph& D = vd.base();
  const std::size_t n = D.vertex_count();
  const auto s = struct_matrices(D);
  const FiniteGroup& grp = vd.group();
  std::vector<Matrix<long>> parts(grp.order(), Matrix<long>(n, n, 0));
  for (ArcId e = 0; e < D.arc_count(); ++e) ++parts[vd.voltage(e)](D.arc(e).origin, D.arc(e).terminus);
  const auto in = Matrix<long>::identity(n);
  Pencil p;
  p.size = 2 * n * d;
  for (GroupElem h = 0; h < parts.size(); ++h) {
    p.x.push_back({h, parts[h], 0, n * d});
    p.x.push_back({grp.inverse(h), transpose(parts[h]), n * d, 0});
  }
  p.y.push_back({std::nullopt, s.D1 - in, 0, 0});
  p.y.push_back({std::nullopt, s.D2 - in, n * d, n * d});
  p.one_minus_t2 = (as_long(D.arc_count()) - 2 * as_long(n)) * as_long(d);
  return p;
}

}  // namespace

unsigned group_exponent(const FiniteGroup& group) {
  unsigned e = 1;
  for (GroupElem g = 0; g < group.order(); ++g) {
    unsigned k = 1;
    for (GroupElem x = g; x != group.identity(); x = group.mul(x, g)) ++k;
    e = std::lcm(e, k);
  }
  return e;
}

LReciprocal ihara_L_reciprocal(const VoltageGraph& vg, const std::string& rep_id, Method method,
                               const LOptions& opt) {
  const Representation& rho = vg.rep(rep_id);
  Evaluator ev(vg.group(), rho, opt);
  switch (method) {
    case Method::hashimoto: return ev.finish(rep_id, method, ev.det(graph_hashimoto_pencil(vg, rho.degree)));
    case Method::ihara: return ev.finish(rep_id, method, ev.det(graph_ihara_pencil(vg, rho.degree)));
    default: throw std::invalid_argument("ihara_L_reciprocal supports the hashimoto and ihara methods");
  }
}

VoltageDigraph symmetric_voltage_digraph(const VoltageGraph& vg) {
  return VoltageDigraph::build(symmetric_digraph(vg.base()), vg.group(), vg.reps(), vg.voltages());
}

LReciprocal alt_L_reciprocal(const VoltageGraph& vg, const std::string& rep_id, Method method,
                             const LOptions& opt) {
  const Representation& rho = vg.rep(rep_id);
  Evaluator ev(vg.group(), rho, opt);
  switch (method) {
    case Method::factorized: {
      const Evaluated l = ev.det(graph_ihara_pencil(vg, rho.degree));
      return ev.finish(rep_id, method, ev.product(l, ev.reflect(l)));
    }
    case Method::hashimoto: {
      const Evaluated l = ev.det(graph_hashimoto_pencil(vg, rho.degree));
      return ev.finish(rep_id, method, ev.product(l, ev.reflect(l)));
    }
    case Method::ihara: {
      const VoltageDigraph vd = symmetric_voltage_digraph(vg);
      return ev.finish(rep_id, method, ev.det(digraph_ihara_pencil(vd, rho.degree)));
    }
    default: throw std::invalid_argument("alt_L_reciprocal supports factorized, hashimoto and ihara");
  }
}

LReciprocal digraph_alt_L_reciprocal(const VoltageDigraph& vd, const std::string& rep_id, Method method,
                                     const LOptions& opt) {
  const Representation& rho = vd.rep(rep_id);
  Evaluator ev(vd.group(), rho, opt);
  switch (method) {
    case Method::hashimoto: return ev.finish(rep_id, method, ev.det(digraph_hashimoto_pencil(vd, rho.degree)));
    case Method::ihara: return ev.finish(rep_id, method, ev.det(digraph_ihara_pencil(vd, rho.degree)));
    default: throw std::invalid_argument("digraph_alt_L_reciprocal supports the hashimoto and ihara methods");
  }
}

void require_complete_irreps(const FiniteGroup& group, const std::vector<Representation>& reps) {
  std::size_t sum = 0;
  bool trivial = false;
  for (const auto& r : reps) {
    sum += r.degree * r.degree;
    trivial = trivial || r.is_trivial(1e-9);
  }
  if (sum != group.order())
    throw VoltageError("incomplete representation list: sum of squared degrees is " + std::to_string(sum) +
                       ", group order is " + std::to_string(group.order()));
  if (!trivial) throw VoltageError("representation list lacks the trivial representation");
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex ip = character_inner(group, reps[i], reps[j]);
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(ip - want) > 1e-9)
        throw VoltageError("representations '" + reps[i].id + "' and '" + reps[j].id +
                           "' are not orthonormal irreducible characters");
    }
}

namespace {

CoverDecomposition combine(const FiniteGroup& group, const std::vector<LReciprocal>& ls, RationalFn direct,
                           bool connected, const LOptions& opt) {
  CoverDecomposition out;
  out.direct = std::move(direct);
  out.derived_connected = connected;
  const CyclotomicField field(group_exponent(group));
  std::optional<CycloPoly> exact = CycloPoly::from_rational(field, RationalPoly{1});
  ComplexPoly numeric(std::vector<Complex>{Complex{1.0, 0.0}}, opt.tol);
  for (const auto& l : ls) {
    const std::size_t mult = l.degree;
    out.factors.push_back({l, mult});
    numeric *= l.numeric.pow(static_cast<unsigned>(mult));
    if (exact && l.exact) {
      for (std::size_t k = 0; k < mult; ++k) exact = multiply(field, *exact, *l.exact);
    } else {
      exact.reset();
    }
  }
  out.exact = exact.has_value();
  if (exact) {
    if (exact->is_rational()) out.product = RationalFn(exact->rational_part());
    else out.note = "exact product has irrational coefficients";
  } else if (std::all_of(ls.begin(), ls.end(), [](const LReciprocal& l) { return l.value.has_value(); })) {
    RationalPoly p{1};
    for (const auto& l : ls) p *= l.value->pow(static_cast<unsigned>(l.degree));
    out.product = RationalFn(p);
  } else if (auto r = numeric.try_rationalize()) {
    out.product = RationalFn(*r);
  } else {
    out.note = "product of the factors did not rationalize within tolerance";
  }
  out.match = out.product && *out.product == out.direct;
  if (!connected) out.note += std::string(out.note.empty() ? "" : "; ") + "derived graph is disconnected";
  return out;
}

}  // namespace

CoverDecomposition cover_zeta_decomposition(const VoltageGraph& vg, CoverKind kind, Method method,
                                            const LOptions& opt) {
  require_complete_irreps(vg.group(), vg.reps());
  std::vector<LReciprocal> ls;
  for (const auto& r : vg.reps())
    ls.push_back(kind == CoverKind::ihara ? ihara_L_reciprocal(vg, r.id, method, opt)
                                          : alt_L_reciprocal(vg, r.id, method, opt));
  const Graph derived = derived_graph(vg);
  RationalFn direct = kind == CoverKind::ihara ? ihara_reciprocal(derived, Method::ihara).value
                                               : alt_reciprocal_graph(derived, Method::ihara).value;
  return combine(vg.group(), ls, std::move(direct), derived.is_connected(), opt);
}

CoverDecomposition digraph_cover_alt_zeta(const VoltageDigraph& vd, Method method, const LOptions& opt) {
  require_complete_irreps(vd.group(), vd.reps());
  std::vector<LReciprocal> ls;
  for (const auto& r : vd.reps()) ls.push_back(digraph_alt_L_reciprocal(vd, r.id, method, opt));
  const Digraph derived = derived_digraph(vd);
  return combine(vd.group(), ls, alt_reciprocal_digraph(derived, Method::ihara).value, derived.is_connected(), opt);
}

}  // namespace zg
