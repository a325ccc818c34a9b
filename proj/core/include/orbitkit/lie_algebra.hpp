#pragma once

#include <string>
#include <vector>

#include "orbitkit/matrix.hpp"
#include "orbitkit/subspace.hpp"

namespace orbitkit {

/// Finite-dimensional real Lie algebra given by its structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k over exact rationals. Basis labels are
/// carried for diagnostics only and never affect computation.
class LieAlgebra {
 public:
  LieAlgebra() : dim_(0) {}
  LieAlgebra(std::size_t dim, std::vector<std::string> names);

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names) {
    if (names.size() != dim_)
      throw std::invalid_argument("basis label count does not match dimension");
    names_ = std::move(names);
  }

  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rat& v) {
    c_[(i * dim_ + j) * dim_ + k] = v;
    c_[(j * dim_ + i) * dim_ + k] = -v;
  }

  std::vector<Rat> bracket(const std::vector<Rat>& x,
                           const std::vector<Rat>& y) const;

  /// ad(A) as a matrix: column j is [A, e_j].
  QMatrix ad(const std::vector<Rat>& a) const;

  /// Matrix of f -> A.f on the dual, (A.f)(B) = -f([A,B]); equals -ad(A)^T.
  QMatrix coadjoint_matrix(const std::vector<Rat>& a) const;

  std::vector<Rat> coadjoint_apply(const std::vector<Rat>& a,
                                   const std::vector<Rat>& f) const;

  /// {A : A.f = 0}, the isotropy algebra of f in the coadjoint action.
  Subspace isotropy_of_covector(const std::vector<Rat>& f) const;

  /// B_f(x,y) = f([x,y]) as a matrix over the chosen basis.
  QMatrix pairing_form(const std::vector<Rat>& f) const;

  /// Complex-bilinear bracket on the complexification.
  std::vector<CRat> bracket_c(const std::vector<CRat>& x,
                              const std::vector<CRat>& y) const;

  bool operator==(const LieAlgebra& o) const {
    return dim_ == o.dim_ && c_ == o.c_;
  }

 private:
  std::size_t dim_;
  std::vector<Rat> c_;
  std::vector<std::string> names_;
};

/// Derived representation of a Lie algebra on a vector space: one matrix per
/// basis element, acting on column vectors.
class Representation {
 public:
  Representation() : space_dim_(0) {}
  Representation(std::size_t algebra_dim, std::size_t space_dim);

  std::size_t algebra_dim() const { return mats_.size(); }
  std::size_t space_dim() const { return space_dim_; }

  const QMatrix& matrix(std::size_t i) const { return mats_[i]; }
  void set_matrix(std::size_t i, QMatrix m);

  /// Matrix of v -> A.v for a general algebra element A.
  QMatrix act(const std::vector<Rat>& a) const;

  /// Matrix of p -> A.p on the dual, (A.p)(v) = -p(A.v); equals -act(A)^T.
  QMatrix contragredient(const std::vector<Rat>& a) const;

  bool operator==(const Representation& o) const {
    return space_dim_ == o.space_dim_ && mats_ == o.mats_;
  }

 private:
  std::size_t space_dim_;
  std::vector<QMatrix> mats_;
};

struct ValidationIssue {
  enum class Kind { antisymmetry, jacobi, homomorphism, shape };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string describe(const LieAlgebra& g) const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks antisymmetry and the Jacobi identity exactly; reports every
/// violating index tuple.
ValidationReport validate(const LieAlgebra& g);

/// Additionally checks that rep is a Lie algebra homomorphism:
/// rep([e_i,e_j]) = [rep(e_i), rep(e_j)] for all basis pairs.
ValidationReport validate(const LieAlgebra& g, const Representation& rep);

/// Structure constants of a subalgebra in the coordinates of its canonical
/// basis; `closed` is false (and constants empty) if S is not a subalgebra.
struct SubalgebraStructure {
  LieAlgebra algebra;
  Subspace carrier;
  bool closed = false;
  /// Coordinates of x (in the ambient algebra) with respect to the carrier
  /// basis; x must lie in the carrier.
  std::vector<Rat> restrict(const std::vector<Rat>& x) const;
  /// Restriction of an ambient covector to the subalgebra (pairing with the
  /// carrier basis vectors).
  std::vector<Rat> restrict_covector(const std::vector<Rat>& f) const;
};

SubalgebraStructure subalgebra_structure(const LieAlgebra& g, const Subspace& s);

}  // namespace orbitkit
