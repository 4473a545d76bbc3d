#pragma once

// Exact dense and sparse linear algebra over Q (GMP rationals) and over any
// exact field type providing +, -, *, / and an is_zero() overload.
//
// Conventions: vectors are rows; a subspace is stored by a row basis in
// reduced row echelon form.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

/// Dense row-major matrix with exact entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("Matrix: vector shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
    return s;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
    return s;
  }
  Matrix operator-() const {
    Matrix s = *this;
    for (auto& x : s.data_) x = -x;
    return s;
  }
  Matrix scaled(const T& c) const {
    Matrix s = *this;
    for (auto& x : s.data_) x *= c;
    return s;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero_matrix() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return is_zero(x); });
  }

  const std::vector<T>& data() const { return data_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os;
}

inline QMatrix to_rational(const ZMatrix& z) {
  QMatrix q(z.rows(), z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) q(i, j) = Rational(z(i, j));
  return q;
}

/// Converts to an integer matrix; throws if an entry is not integral.
inline ZMatrix to_integer(const QMatrix& q) {
  ZMatrix z(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      Rational x = q(i, j);
      x.canonicalize();
      if (x.get_den() != 1) throw std::domain_error("to_integer: non-integral entry");
      z(i, j) = x.get_num();
    }
  return z;
}

template <class T>
struct Echelon {
  Matrix<T> reduced;                // RREF, zero rows removed
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination. Rows of the result span the row space of m.
template <class T>
Echelon<T> row_reduce(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<T> out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return {std::move(out), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).pivots.size();
}

/// Basis (as rows) of {x : m x = 0}.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m) {
  const auto ech = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  Matrix<T> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(n, T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
    basis.append_row(v);
  }
  if (basis.rows() == 0) return Matrix<T>(0, n);
  return basis;
}

template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Exact determinant of an integer matrix (computed over Q, result integral).
inline Integer determinant(const ZMatrix& z) {
  Rational d = determinant(to_rational(z));
  d.canonicalize();
  return d.get_num();
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto ech = row_reduce(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

/// Coordinates c with c * basis = v (basis rows independent), if v lies in the row span.
template <class T>
std::optional<std::vector<T>> coordinates_in(const Matrix<T>& basis, const std::vector<T>& v) {
  // Solve basis^T c = v.
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  Matrix<T> aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(j, i);
    aug(i, k) = v[i];
  }
  auto ech = row_reduce(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == k) return std::nullopt;
  if (ech.pivots.size() != k) throw std::invalid_argument("coordinates_in: dependent basis");
  std::vector<T> c(k, T(0));
  for (std::size_t i = 0; i < k; ++i) c[ech.pivots[i]] = ech.reduced(i, k);
  return c;
}

// ---------------------------------------------------------------------------
// Sparse vectors and matrices over Q.

/// Sorted (index, value) pairs with no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// y += a * x
void sparse_axpy(SparseVector& y, const Rational& a, const SparseVector& x);

SparseVector to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t dim);

/// Column-stored sparse square or rectangular matrix: column j = image of e_j.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const QMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  SparseVector& column(std::size_t j) { return columns_[j]; }

  SparseVector apply(const SparseVector& v) const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix scaled(const Rational& c) const;
  QMatrix to_dense() const;
  std::size_t nonzeros() const;

  bool operator==(const SparseMatrix& o) const { return rows_ == o.rows_ && columns_ == o.columns_; }

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Kernel of a sparse matrix, as sparse basis vectors (sparse Gauss-Jordan on rows).
std::vector<SparseVector> sparse_kernel(const SparseMatrix& m);

/// A subspace of Q^n kept as an RREF row basis; supports incremental growth.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<SparseVector>& vectors);

  /// Adds v; returns true if the dimension grew.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<SparseVector>& basis() const { return rows_; }

  Subspace intersect(const Subspace& other) const;
  /// Image of this subspace under m.
  Subspace image_under(const SparseMatrix& m) const;

  bool operator==(const Subspace& o) const;

 private:
  SparseVector reduce(SparseVector v) const;

  std::size_t ambient_;
  std::vector<SparseVector> rows_;  // fully reduced; pivot = first index, coefficient 1
  std::map<std::size_t, std::size_t> pivot_row_;
};

}  // namespace hodge
