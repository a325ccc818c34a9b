#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orbitkit/rational.hpp"

namespace orbitkit {

inline bool is_zero(double x) { return x == 0.0; }

/// Dense rectangular matrix over a field K (Rat, CRat, or double for the
/// sampled numeric paths). Row reduction is deterministic: pivots are chosen
/// by scanning columns left to right and taking the first row with a nonzero
/// entry, rows in their given order.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("ragged rows in matrix literal");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<K> row(std::size_t i) const {
    std::vector<K> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
  }
  std::vector<K> col(std::size_t j) const {
    std::vector<K> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }
  void set_row(std::size_t i, const std::vector<K>& r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matmul shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          K t = aik * b(k, j);
          c(i, j) += t;
        }
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix add shape mismatch");
    Matrix c = a;
    for (std::size_t t = 0; t < c.data_.size(); ++t) c.data_[t] += b.data_[t];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sub shape mismatch");
    Matrix c = a;
    for (std::size_t t = 0; t < c.data_.size(); ++t) c.data_[t] -= b.data_[t];
    return c;
  }
  Matrix scaled(const K& s) const {
    Matrix c = *this;
    for (auto& x : c.data_) x *= s;
    return c;
  }

  std::vector<K> apply(const std::vector<K>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matvec shape mismatch");
    std::vector<K> y(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (is_zero((*this)(i, j))) continue;
        K t = (*this)(i, j) * x[j];
        y[i] += t;
      }
    return y;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ == 0) return b;
    if (b.rows_ == 0) return a;
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack shape mismatch");
    Matrix c(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) c(a.rows_ + i, j) = b(i, j);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// In-place reduced row echelon form; returns the pivot columns.
  /// First-nonzero pivot rule, rows in given order. Exact fields only.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
      std::size_t sel = rows_;
      for (std::size_t r = pr; r < rows_; ++r) {
        if (!is_zero((*this)(r, c))) {
          sel = r;
          break;
        }
      }
      if (sel == rows_) continue;
      if (sel != pr)
        for (std::size_t j = 0; j < cols_; ++j)
          std::swap((*this)(sel, j), (*this)(pr, j));
      K inv = K(1) / (*this)(pr, c);
      for (std::size_t j = c; j < cols_; ++j) {
        K t = (*this)(pr, j) * inv;
        (*this)(pr, j) = t;
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == pr || is_zero((*this)(r, c))) continue;
        K f = (*this)(r, c);
        for (std::size_t j = c; j < cols_; ++j) {
          K t = f * (*this)(pr, j);
          (*this)(r, j) -= t;
        }
      }
      pivots.push_back(c);
      ++pr;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix c = *this;
    return c.rref().size();
  }

  /// Basis of {x : Ax = 0}, one row per free column of the RREF.
  Matrix kernel() const {
    Matrix r = *this;
    std::vector<std::size_t> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix out(cols_ - pivots.size(), cols_);
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_pivot[j]) continue;
      out(k, j) = K(1);
      for (std::size_t t = 0; t < pivots.size(); ++t) out(k, pivots[t]) = -r(t, j);
      ++k;
    }
    return out;
  }

  /// One solution of Ax = b, if consistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve shape mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    for (std::size_t c : pivots)
      if (c == cols_) return std::nullopt;  // inconsistent row
    std::vector<K> x(cols_, K(0));
    for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = aug(t, cols_);
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = K(1);
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (pivots.size() < rows_) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
      if (i >= pivots.size() || pivots[i] != i) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> data_;
};

using QMatrix = Matrix<Rat>;
using CMatrix = Matrix<CRat>;
using DMatrix = Matrix<double>;

template <class K>
std::vector<K> operator+(std::vector<K> a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <class K>
std::vector<K> operator-(std::vector<K> a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <class K>
std::vector<K> scaled(std::vector<K> a, const K& s) {
  for (auto& x : a) x *= s;
  return a;
}
template <class K>
K dot(const std::vector<K>& a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot size mismatch");
  K s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    K t = a[i] * b[i];
    s += t;
  }
  return s;
}
template <class K>
bool all_zero(const std::vector<K>& a) {
  for (const auto& x : a)
    if (!is_zero(x)) return false;
  return true;
}
template <class K>
std::vector<K> unit_vector(std::size_t dim, std::size_t i) {
  std::vector<K> v(dim, K(0));
  v[i] = K(1);
  return v;
}

inline std::vector<CRat> complexify(const std::vector<Rat>& v) {
  std::vector<CRat> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = CRat(v[i]);
  return out;
}

inline std::vector<double> to_double(const std::vector<Rat>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

inline DMatrix to_double(const QMatrix& m) {
  DMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

}  // namespace orbitkit
