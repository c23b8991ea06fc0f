#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zetagraph/matrix.hpp"
#include "zetagraph/poly.hpp"

namespace zg {

/// Exact determinant of a rational matrix (fraction-free elimination).
Rational det(const Matrix<Rational>& m);

/// Exact determinant of a polynomial matrix.
///
/// The matrix is evaluated at deg_bound + 1 consecutive integer nodes
/// starting at `first_node` (deg_bound = size * max entry degree), each
/// evaluation is reduced exactly, and the values are interpolated back. The
/// default node window is centred on zero to keep the integers small; the
/// result does not depend on the window.
RationalPoly poly_det(const Matrix<RationalPoly>& m, std::optional<std::int64_t> first_node = std::nullopt);

/// Polynomial of degree < nodes.size() through (nodes[i], values[i]) (Newton form).
RationalPoly interpolate(const std::vector<Integer>& nodes, std::vector<Rational> values);

/// LU determinant with partial pivoting.
Complex det(const Matrix<Complex>& m);

/// Determinant of a complex polynomial matrix via evaluation at the
/// deg_bound + 1 roots of unity and an inverse DFT.
ComplexPoly cpoly_det(const Matrix<ComplexPoly>& m, double tol = kDefaultRationalizeTol);

/// Lifts an integer matrix into constant polynomials.
Matrix<RationalPoly> to_poly_matrix(const Matrix<long>& m);

/// I - t*x + t^2*y for integer matrices x, y of equal square shape.
Matrix<RationalPoly> quadratic_pencil(const Matrix<long>& x, const Matrix<long>& y);
Matrix<RationalPoly> quadratic_pencil(const Matrix<Rational>& x, const Matrix<Rational>& y);
/// I - t*x + t^2*y over complex matrices.
Matrix<ComplexPoly> quadratic_pencil(const Matrix<Complex>& x, const Matrix<Complex>& y,
                                     double tol = kDefaultRationalizeTol);

}  // namespace zg
