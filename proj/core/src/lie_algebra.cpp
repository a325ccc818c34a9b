#include "orbitkit/lie_algebra.hpp"

#include <stdexcept>

namespace orbitkit {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> names)
    : dim_(dim), c_(dim * dim * dim, Rat(0)), names_(std::move(names)) {
  if (names_.empty()) {
    names_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
  }
  if (names_.size() != dim)
    throw std::invalid_argument("basis label count does not match dimension");
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, {}); }

std::vector<Rat> LieAlgebra::bracket(const std::vector<Rat>& x,
                                     const std::vector<Rat>& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  std::vector<Rat> out(dim_, Rat(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      Rat f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rat& ck = c(i, j, k);
        if (is_zero(ck)) continue;
        Rat t = f * ck;
        out[k] += t;
      }
    }
  }
  return out;
}

QMatrix LieAlgebra::ad(const std::vector<Rat>& a) const {
  QMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    std::vector<Rat> col = bracket(a, unit_vector<Rat>(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

QMatrix LieAlgebra::coadjoint_matrix(const std::vector<Rat>& a) const {
  return ad(a).transpose().scaled(Rat(-1));
}

std::vector<Rat> LieAlgebra::coadjoint_apply(const std::vector<Rat>& a,
                                             const std::vector<Rat>& f) const {
  return coadjoint_matrix(a).apply(f);
}

Subspace LieAlgebra::isotropy_of_covector(const std::vector<Rat>& f) const {
  // kernel of A -> A.f; column u of the stacked matrix is e_u.f.
  QMatrix m(dim_, dim_);
  for (std::size_t u = 0; u < dim_; ++u) {
    std::vector<Rat> col = coadjoint_apply(unit_vector<Rat>(dim_, u), f);
    for (std::size_t k = 0; k < dim_; ++k) m(k, u) = col[k];
  }
  return Subspace::span(dim_, m.kernel());
}

QMatrix LieAlgebra::pairing_form(const std::vector<Rat>& f) const {
  QMatrix b(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      Rat s(0);
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rat& ck = c(i, j, k);
        if (is_zero(ck)) continue;
        Rat t = f[k] * ck;
        s += t;
      }
      b(i, j) = s;
    }
  return b;
}

std::vector<CRat> LieAlgebra::bracket_c(const std::vector<CRat>& x,
                                        const std::vector<CRat>& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  std::vector<CRat> out(dim_, CRat(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      CRat f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rat& ck = c(i, j, k);
        if (is_zero(ck)) continue;
        CRat t = f * CRat(ck);
        out[k] += t;
      }
    }
  }
  return out;
}

Representation::Representation(std::size_t algebra_dim, std::size_t space_dim)
    : space_dim_(space_dim),
      mats_(algebra_dim, QMatrix(space_dim, space_dim)) {}

void Representation::set_matrix(std::size_t i, QMatrix m) {
  if (m.rows() != space_dim_ || m.cols() != space_dim_)
    throw std::invalid_argument("representation matrix has wrong shape");
  mats_[i] = std::move(m);
}

QMatrix Representation::act(const std::vector<Rat>& a) const {
  if (a.size() != mats_.size())
    throw std::invalid_argument("act: algebra dimension mismatch");
  QMatrix m(space_dim_, space_dim_);
  for (std::size_t i = 0; i < mats_.size(); ++i) {
    if (is_zero(a[i])) continue;
    m = m + mats_[i].scaled(a[i]);
  }
  return m;
}

QMatrix Representation::contragredient(const std::vector<Rat>& a) const {
  return act(a).transpose().scaled(Rat(-1));
}

std::string ValidationIssue::describe(const LieAlgebra& g) const {
  const auto& nm = g.names();
  auto name = [&](std::size_t t) {
    return t < nm.size() ? nm[t] : "e" + std::to_string(t + 1);
  };
  switch (kind) {
    case Kind::antisymmetry:
      return "antisymmetry violated at (" + name(i) + ", " + name(j) + ")";
    case Kind::jacobi:
      return "Jacobi identity violated on (" + name(i) + ", " + name(j) + ", " +
             name(k) + ")";
    case Kind::homomorphism:
      return "representation homomorphism violated on (" + name(i) + ", " +
             name(j) + ")";
    case Kind::shape:
      return "representation matrix shape mismatch for " + name(i);
  }
  return "";
}

ValidationReport validate(const LieAlgebra& g) {
  ValidationReport rep;
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!is_zero(g.c(i, j, k) + g.c(j, i, k))) {
          rep.issues.push_back({ValidationIssue::Kind::antisymmetry, i, j, 0});
          k = d;
        }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        std::vector<Rat> ei = unit_vector<Rat>(d, i);
        std::vector<Rat> ej = unit_vector<Rat>(d, j);
        std::vector<Rat> ek = unit_vector<Rat>(d, k);
        std::vector<Rat> s = g.bracket(ei, g.bracket(ej, ek));
        s = s + g.bracket(ej, g.bracket(ek, ei));
        s = s + g.bracket(ek, g.bracket(ei, ej));
        if (!all_zero(s))
          rep.issues.push_back({ValidationIssue::Kind::jacobi, i, j, k});
      }
  return rep;
}

ValidationReport validate(const LieAlgebra& g, const Representation& rep) {
  ValidationReport out = validate(g);
  const std::size_t d = g.dim();
  if (rep.algebra_dim() != d) {
    out.issues.push_back({ValidationIssue::Kind::shape, 0, 0, 0});
    return out;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Rat> br = g.bracket(unit_vector<Rat>(d, i), unit_vector<Rat>(d, j));
      QMatrix lhs = rep.act(br);
      QMatrix rhs = rep.matrix(i) * rep.matrix(j) - rep.matrix(j) * rep.matrix(i);
      if (!(lhs == rhs))
        out.issues.push_back({ValidationIssue::Kind::homomorphism, i, j, 0});
    }
  return out;
}

std::vector<Rat> SubalgebraStructure::restrict(const std::vector<Rat>& x) const {
  auto sol = carrier.basis().transpose().solve(x);
  if (!sol) throw std::invalid_argument("vector is not in the subalgebra carrier");
  return *sol;
}

std::vector<Rat> SubalgebraStructure::restrict_covector(
    const std::vector<Rat>& f) const {
  std::vector<Rat> out(carrier.dim());
  for (std::size_t i = 0; i < carrier.dim(); ++i)
    out[i] = dot(f, carrier.basis_vector(i));
  return out;
}

SubalgebraStructure subalgebra_structure(const LieAlgebra& g, const Subspace& s) {
  SubalgebraStructure out;
  out.carrier = s;
  out.closed = true;
  const std::size_t d = s.dim();
  LieAlgebra sub(d, {});
  QMatrix basis_t = s.basis().transpose();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      std::vector<Rat> br = g.bracket(s.basis_vector(a), s.basis_vector(b));
      if (!s.contains(br)) {
        out.closed = false;
        return out;
      }
      auto coords = basis_t.solve(br);
      for (std::size_t k = 0; k < d; ++k) sub.set_bracket(a, b, k, (*coords)[k]);
    }
  out.algebra = sub;
  return out;
}

}  // namespace orbitkit
