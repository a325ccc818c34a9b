#pragma once

#include <stdexcept>
#include <vector>

#include "orbitkit/matrix.hpp"

namespace orbitkit {

/// Subspace of K^n held by its reduced row-echelon basis. The representation
/// is canonical: two equal subspaces carry bit-identical basis matrices, so
/// equality is plain matrix comparison.
template <class K>
class SubspaceT {
 public:
  SubspaceT() : ambient_(0) {}

  explicit SubspaceT(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static SubspaceT span(std::size_t ambient_dim, Matrix<K> rows) {
    if (rows.rows() > 0 && rows.cols() != ambient_dim)
      throw std::invalid_argument("span rows do not match ambient dimension");
    SubspaceT s(ambient_dim);
    if (rows.rows() == 0) return s;
    std::vector<std::size_t> pivots = rows.rref();
    Matrix<K> basis(pivots.size(), ambient_dim);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) basis(i, j) = rows(i, j);
    s.basis_ = basis;
    return s;
  }

  static SubspaceT span(std::size_t ambient_dim,
                        const std::vector<std::vector<K>>& rows) {
    return span(ambient_dim, Matrix<K>::from_rows(rows));
  }

  static SubspaceT full(std::size_t ambient_dim) {
    return span(ambient_dim, Matrix<K>::identity(ambient_dim));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  std::vector<K> basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const std::vector<K>& v) const {
    if (v.size() != ambient_)
      throw std::invalid_argument("membership test: ambient mismatch");
    std::vector<K> r = reduce(v);
    return all_zero(r);
  }

  /// Remainder of v after elimination against the RREF basis.
  std::vector<K> reduce(std::vector<K> v) const {
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t p = pivot_col(i);
      if (is_zero(v[p])) continue;
      K f = v[p];
      for (std::size_t j = 0; j < ambient_; ++j) {
        K t = f * basis_(i, j);
        v[j] -= t;
      }
    }
    return v;
  }

  bool contains(const SubspaceT& other) const {
    check_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  friend bool operator==(const SubspaceT& a, const SubspaceT& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const SubspaceT& a, const SubspaceT& b) {
    return !(a == b);
  }

  SubspaceT sum(const SubspaceT& other) const {
    check_ambient(other);
    return span(ambient_, Matrix<K>::vstack(basis_, other.basis_));
  }

  /// {f : f(x) = 0 for all x in this}, with the dual identified through the
  /// chosen basis.
  SubspaceT annihilator() const {
    return span(ambient_, basis_.kernel());
  }

  SubspaceT intersect(const SubspaceT& other) const {
    check_ambient(other);
    return annihilator().sum(other.annihilator()).annihilator();
  }

  /// Representatives completing sub's basis to a basis of this (sub must be
  /// contained in this); they project to a basis of this/sub.
  std::vector<std::vector<K>> quotient_representatives(const SubspaceT& sub) const {
    check_ambient(sub);
    if (!contains(sub))
      throw std::invalid_argument("quotient: divisor is not a subspace of numerator");
    std::vector<std::vector<K>> reps;
    Matrix<K> acc = sub.basis_;
    std::size_t r = acc.rank();
    for (std::size_t i = 0; i < dim(); ++i) {
      Matrix<K> tryacc = Matrix<K>::vstack(acc, Matrix<K>::from_rows({basis_vector(i)}));
      std::size_t nr = tryacc.rank();
      if (nr > r) {
        reps.push_back(basis_vector(i));
        acc = tryacc;
        r = nr;
      }
    }
    return reps;
  }

  /// Image under a linear map given by its matrix (acting on column vectors).
  static SubspaceT image(const Matrix<K>& map, const SubspaceT& s) {
    if (map.cols() != s.ambient_dim())
      throw std::invalid_argument("image: map/ambient mismatch");
    Matrix<K> rows(s.dim(), map.rows());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      std::vector<K> img = map.apply(s.basis_vector(i));
      rows.set_row(i, img);
    }
    return span(map.rows(), rows);
  }

  /// {x : map(x) in s}.
  static SubspaceT preimage(const Matrix<K>& map, const SubspaceT& s) {
    if (map.rows() != s.ambient_dim())
      throw std::invalid_argument("preimage: map/ambient mismatch");
    SubspaceT ann = s.annihilator();
    Matrix<K> cons = ann.basis() * map;
    return span(map.cols(), cons.kernel());
  }

 private:
  void check_ambient(const SubspaceT& other) const {
    if (other.ambient_ != ambient_)
      throw std::invalid_argument("subspace ambient dimension mismatch");
  }
  std::size_t pivot_col(std::size_t row) const {
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!is_zero(basis_(row, j))) return j;
    throw std::logic_error("zero row in canonical basis");
  }

  std::size_t ambient_;
  Matrix<K> basis_;
};

using Subspace = SubspaceT<Rat>;
using ComplexSubspace = SubspaceT<CRat>;

inline ComplexSubspace complexify(const Subspace& s) {
  CMatrix rows(s.dim(), s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient_dim(); ++j)
      rows(i, j) = CRat(s.basis()(i, j));
  return ComplexSubspace::span(s.ambient_dim(), rows);
}

inline ComplexSubspace conjugate(const ComplexSubspace& s) {
  CMatrix rows(s.dim(), s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient_dim(); ++j)
      rows(i, j) = s.basis()(i, j).conj();
  return ComplexSubspace::span(s.ambient_dim(), rows);
}

/// Real points {x in Q^n : x in s}; the real form of s cap conj(s).
inline Subspace real_points(const ComplexSubspace& s) {
  ComplexSubspace ann = s.annihilator();
  QMatrix cons(2 * ann.dim(), s.ambient_dim());
  for (std::size_t i = 0; i < ann.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
      cons(2 * i, j) = ann.basis()(i, j).re;
      cons(2 * i + 1, j) = ann.basis()(i, j).im;
    }
  return Subspace::span(s.ambient_dim(), cons.kernel());
}

}  // namespace orbitkit
