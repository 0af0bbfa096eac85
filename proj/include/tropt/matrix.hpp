// Dense matrix and vector algebra over an idempotent semifield: sums,
// products, powers, trace, Kleene star, the trace series Tr, spectral
// radius, and the multiplicative conjugate transpose.
//
// Storage is row-major and dense; target problem sizes are small (tens of
// rows), where O(n^3) products dominate everything else.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "tropt/semifield.hpp"

namespace tropt {

template <class SF>
class vector;
template <class SF>
class row_vector;

template <class SF>
class matrix {
 public:
  using value_type = scalar<SF>;

  // rows x cols, every entry the semifield zero.
  matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw shape_error("matrix dimensions must be positive");
  }

  static matrix identity(std::size_t n) {
    matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar<SF>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  scalar<SF>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  scalar<SF> operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const matrix& a, const matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const matrix& a, const matrix& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  std::vector<scalar<SF>> data_;
};

template <class SF>
class vector {
 public:
  using value_type = scalar<SF>;

  explicit vector(std::size_t dim) : data_(dim) {
    if (dim == 0) throw shape_error("vector dimension must be positive");
  }

  std::size_t dim() const { return data_.size(); }
  scalar<SF>& operator[](std::size_t i) { return data_[i]; }
  scalar<SF> operator[](std::size_t i) const { return data_[i]; }

  // No zero components.
  bool regular() const {
    for (const auto& e : data_)
      if (e.is_zero()) return false;
    return true;
  }
  bool all_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const vector& a, const vector& b) { return a.data_ == b.data_; }
  friend bool operator!=(const vector& a, const vector& b) { return !(a == b); }

 private:
  std::vector<scalar<SF>> data_;
};

// A conjugate-transposed vector; kept as a separate type so products read
// the way the algebra does (row * matrix -> row, row * column -> scalar).
template <class SF>
class row_vector {
 public:
  using value_type = scalar<SF>;

  explicit row_vector(std::size_t dim) : data_(dim) {
    if (dim == 0) throw shape_error("vector dimension must be positive");
  }

  std::size_t dim() const { return data_.size(); }
  scalar<SF>& operator[](std::size_t i) { return data_[i]; }
  scalar<SF> operator[](std::size_t i) const { return data_[i]; }

  bool regular() const {
    for (const auto& e : data_)
      if (e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const row_vector& a, const row_vector& b) { return a.data_ == b.data_; }
  friend bool operator!=(const row_vector& a, const row_vector& b) { return !(a == b); }

 private:
  std::vector<scalar<SF>> data_;
};

// ---- elementwise sums and scaling ----

template <class SF>
matrix<SF> operator+(const matrix<SF>& a, const matrix<SF>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw shape_error("matrix sum of non-conforming shapes");
  matrix<SF> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class SF>
vector<SF> operator+(const vector<SF>& a, const vector<SF>& b) {
  if (a.dim() != b.dim()) throw shape_error("vector sum of non-conforming dimensions");
  vector<SF> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
  return c;
}

template <class SF>
matrix<SF> operator*(scalar<SF> c, const matrix<SF>& a) {
  matrix<SF> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

template <class SF>
vector<SF> operator*(scalar<SF> c, const vector<SF>& a) {
  vector<SF> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = c * a[i];
  return r;
}

// ---- products ----

template <class SF>
matrix<SF> operator*(const matrix<SF>& a, const matrix<SF>& b) {
  if (a.cols() != b.rows()) throw shape_error("matrix product with non-conforming inner dimensions");
  matrix<SF> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      scalar<SF> aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class SF>
vector<SF> operator*(const matrix<SF>& a, const vector<SF>& x) {
  if (a.cols() != x.dim()) throw shape_error("matrix-vector product with non-conforming dimensions");
  vector<SF> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

template <class SF>
row_vector<SF> operator*(const row_vector<SF>& x, const matrix<SF>& a) {
  if (x.dim() != a.rows()) throw shape_error("row-matrix product with non-conforming dimensions");
  row_vector<SF> y(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) y[j] += x[i] * a(i, j);
  return y;
}

template <class SF>
scalar<SF> operator*(const row_vector<SF>& x, const vector<SF>& y) {
  if (x.dim() != y.dim()) throw shape_error("row-column product with non-conforming dimensions");
  scalar<SF> s;
  for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

// Outer product: column times row.
template <class SF>
matrix<SF> operator*(const vector<SF>& x, const row_vector<SF>& y) {
  matrix<SF> m(x.dim(), y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) m(i, j) = x[i] * y[j];
  return m;
}

// ---- entrywise order and tolerant equality ----

template <class SF>
bool leq(const matrix<SF>& a, const matrix<SF>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw shape_error("entrywise comparison of non-conforming shapes");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) <= b(i, j))) return false;
  return true;
}

template <class SF>
bool leq(const vector<SF>& a, const vector<SF>& b) {
  if (a.dim() != b.dim()) throw shape_error("entrywise comparison of non-conforming dimensions");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

template <class SF>
bool approx_eq(const matrix<SF>& a, const matrix<SF>& b, double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!approx_eq(a(i, j), b(i, j), tol)) return false;
  return true;
}

template <class SF>
bool approx_eq(const vector<SF>& a, const vector<SF>& b, double tol = 1e-9) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!approx_eq(a[i], b[i], tol)) return false;
  return true;
}

// ---- conjugate transpose ----

// Multiplicative conjugate transpose: entry i is the inverse of x_i, with
// zero entries staying zero. Defined for nonzero vectors only.
template <class SF>
row_vector<SF> conj(const vector<SF>& x) {
  if (x.all_zero()) throw domain_error("conjugate of the zero vector");
  row_vector<SF> r(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (!x[i].is_zero()) r[i] = inv(x[i]);
  return r;
}

template <class SF>
vector<SF> conj(const row_vector<SF>& x) {
  vector<SF> r(x.dim());
  bool nonzero = false;
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (!x[i].is_zero()) {
      r[i] = inv(x[i]);
      nonzero = true;
    }
  if (!nonzero) throw domain_error("conjugate of the zero vector");
  return r;
}

// ---- trace, powers, star, spectral radius ----

template <class SF>
scalar<SF> trace(const matrix<SF>& a) {
  if (!a.square()) throw shape_error("trace of a non-square matrix");
  scalar<SF> t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

// trace(a * b) without forming the product.
template <class SF>
scalar<SF> trace_of_product(const matrix<SF>& a, const matrix<SF>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw shape_error("trace of a product with non-conforming shapes");
  scalar<SF> t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t;
}

template <class SF>
matrix<SF> pow(const matrix<SF>& a, unsigned p) {
  if (!a.square()) throw shape_error("power of a non-square matrix");
  matrix<SF> r = matrix<SF>::identity(a.rows());
  for (unsigned k = 0; k < p; ++k) r = r * a;
  return r;
}

// Trace series Tr(A) = tr A + ... + tr A^n. Zero iff every cycle weight is zero.
template <class SF>
scalar<SF> tr_series(const matrix<SF>& a) {
  if (!a.square()) throw shape_error("trace series of a non-square matrix");
  scalar<SF> t;
  matrix<SF> p = a;
  for (std::size_t m = 1; m <= a.rows(); ++m) {
    t += trace(p);
    if (m < a.rows()) p = p * a;
  }
  return t;
}

// Kleene star A* = I + A + ... + A^{n-1}. Always >= I; when Tr(A) <= one it
// bounds every power of A from above (Carre inequality).
template <class SF>
matrix<SF> star(const matrix<SF>& a) {
  if (!a.square()) throw shape_error("star of a non-square matrix");
  matrix<SF> s = matrix<SF>::identity(a.rows());
  matrix<SF> p = matrix<SF>::identity(a.rows());
  for (std::size_t m = 1; m < a.rows(); ++m) {
    p = p * a;
    s = s + p;
  }
  return s;
}

// Spectral radius: the sum over m of the m-th root of tr(A^m). Equals the
// minimum of conj(x)*A*x over regular x.
template <class SF>
scalar<SF> spectral_radius(const matrix<SF>& a) {
  if (!a.square()) throw shape_error("spectral radius of a non-square matrix");
  scalar<SF> lambda;
  matrix<SF> p = a;
  for (std::size_t m = 1; m <= a.rows(); ++m) {
    scalar<SF> t = trace(p);
    if (!t.is_zero()) lambda += root(t, static_cast<int>(m));
    if (m < a.rows()) p = p * a;
  }
  return lambda;
}

// True iff no column consists entirely of zeros.
template <class SF>
bool is_column_regular(const matrix<SF>& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    if (!nonzero) return false;
  }
  return true;
}

// Shorthands for the workhorse instance.
using mp_scalar = scalar<max_plus>;
using mp_vector = vector<max_plus>;
using mp_matrix = matrix<max_plus>;

}  // namespace tropt
