#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zg {

/// Dense row-major matrix over an arbitrary ring-like scalar.
///
/// Used for integer structure matrices, exact polynomial matrices and
/// complex numeric matrices alike; only the operations each scalar type
/// supports are instantiated.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<const T> data() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}
}  // namespace detail

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: shape mismatch");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference: shape mismatch");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require(a.cols() == b.rows(), "matrix product: inner dimension mismatch");
  Matrix<T> out(a.rows(), b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class T>
Matrix<T> scaled(const T& s, const Matrix<T>& a) {
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Entrywise (Schur/Hadamard) product.
template <class T>
Matrix<T> hadamard(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "hadamard: shape mismatch");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * b(i, j);
  return out;
}

template <class T>
T trace(const Matrix<T>& a) {
  detail::require(a.is_square(), "trace: matrix not square");
  T s(0);
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (aij == T(0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

/// Assembles [[a, b], [c, d]].
template <class T>
Matrix<T> block2x2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                   const Matrix<T>& d) {
  detail::require(a.rows() == b.rows() && c.rows() == d.rows(), "block2x2: row mismatch");
  detail::require(a.cols() == c.cols() && b.cols() == d.cols(), "block2x2: column mismatch");
  const std::size_t r0 = a.rows(), c0 = a.cols();
  Matrix<T> out(r0 + c.rows(), c0 + b.cols());
  auto put = [&out](const Matrix<T>& m, std::size_t r, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(r + i, c + j) = m(i, j);
  };
  put(a, 0, 0);
  put(b, 0, c0);
  put(c, r0, 0);
  put(d, r0, c0);
  return out;
}

template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned k) {
  detail::require(a.is_square(), "power: matrix not square");
  Matrix<T> result = Matrix<T>::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

/// Entrywise conversion between scalar types.
template <class U, class T, class F>
Matrix<U> map_entries(const Matrix<T>& a, F&& f) {
  Matrix<U> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f(a(i, j));
  return out;
}

}  // namespace zg
