#include "zetagraph/zeta.hpp"

#include "zetagraph/determinant.hpp"

namespace zg {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::hashimoto: return "hashimoto";
    case Method::ihara: return "ihara";
    case Method::factorized: return "factorized";
    case Method::euler_truncated: return "euler-truncated";
  }
  return "?";
}

Method parse_method(std::string_view s) {
  if (s == "hashimoto") return Method::hashimoto;
  if (s == "ihara") return Method::ihara;
  if (s == "factorized") return Method::factorized;
  if (s == "euler-truncated") return Method::euler_truncated;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

namespace {

RationalPoly hashimoto_det(const Matrix<long>& x) {
  return poly_det(quadratic_pencil(x, Matrix<long>(x.rows(), x.cols(), 0)));
}

long as_long(std::size_t v) { return static_cast<long>(v); }

}  // namespace

ZetaReciprocal ihara_reciprocal(const Graph& g, Method method) {
  const auto s = struct_matrices(g);
  switch (method) {
    case Method::hashimoto:
      return {RationalFn(hashimoto_det(s.B - s.J0)), method, g.fingerprint()};
    case Method::ihara: {
      const long exponent = as_long(g.edge_count()) - as_long(g.vertex_count());
      RationalFn v = RationalFn::one_minus_t2_pow(exponent) * RationalFn(poly_det(quadratic_pencil(s.A, s.Q)));
      return {std::move(v), method, g.fingerprint()};
    }
    default:
      throw std::invalid_argument("ihara_reciprocal supports the hashimoto and ihara methods");
  }
}

ZetaReciprocal alt_reciprocal_digraph(const Digraph& d, Method method) {
  const auto s = struct_matrices(d);
  switch (method) {
    case Method::hashimoto:
      return {RationalFn(hashimoto_det(s.calB - s.calJ)), method, d.fingerprint()};
    case Method::ihara: {
      const long exponent = as_long(d.arc_count()) - 2 * as_long(d.vertex_count());
      const auto y = s.Delta - Matrix<long>::identity(s.Delta.rows());
      RationalFn v = RationalFn::one_minus_t2_pow(exponent) * RationalFn(poly_det(quadratic_pencil(s.calA, y)));
      return {std::move(v), method, d.fingerprint()};
    }
    default:
      throw std::invalid_argument("alt_reciprocal_digraph supports the hashimoto and ihara methods");
  }
}

ZetaReciprocal alt_reciprocal_graph(const Graph& g, Method method) {
  switch (method) {
    case Method::factorized: {
      const RationalFn z = ihara_reciprocal(g, Method::ihara).value;
      return {z * z.reflect(), method, g.fingerprint()};
    }
    case Method::hashimoto:
    case Method::ihara: {
      ZetaReciprocal r = alt_reciprocal_digraph(symmetric_digraph(g), method);
      r.graph_hash = g.fingerprint();
      return r;
    }
    default:
      throw std::invalid_argument("alt_reciprocal_graph supports factorized, hashimoto and ihara");
  }
}

ZetaReciprocal regular_spectral_reciprocal(const Graph& g) {
  const auto deg = g.regular_degree();
  if (!deg) throw NotRegularError("graph is not regular");
  const Rational q1(static_cast<long>(*deg));
  const Rational q = q1 - 1;
  const std::size_t n = g.vertex_count();
  const auto P = map_entries<Rational>(g.adjacency(), [&](long v) -> Rational { return Rational(v) / q1; });
  const auto X = scaled(q1, P);
  const auto Y = scaled(q, Matrix<Rational>::identity(n));
  const RationalPoly plus = poly_det(quadratic_pencil(X, Y));
  const RationalPoly minus = poly_det(quadratic_pencil(scaled(Rational(-1), X), Y));
  const long exponent = 2 * (as_long(g.edge_count()) - as_long(n));
  return {RationalFn::one_minus_t2_pow(exponent) * RationalFn(plus * minus), Method::ihara, g.fingerprint()};
}

TruncatedSeries generalized_alt_zeta_series(const Graph& g, std::size_t order) {
  const RationalFn recip = alt_reciprocal_graph(g, Method::factorized).value;
  const Rational r = Rational(-1) / Rational(static_cast<long>(g.vertex_count()));
  return series_pow(TruncatedSeries::from_fn(recip, order), r);
}

TruncatedSeries generalized_zeta_series(const Graph& g, std::size_t order) {
  const RationalFn recip = ihara_reciprocal(g, Method::ihara).value;
  const Rational r = Rational(-1) / Rational(static_cast<long>(g.vertex_count()));
  return series_pow(TruncatedSeries::from_fn(recip, order), r);
}

std::vector<std::pair<RationalPoly, int>> factored_hint(const RationalFn& f) {
  return square_free_factorization(f.num());
}

}  // namespace zg
