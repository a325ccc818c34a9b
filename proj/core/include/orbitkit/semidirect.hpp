#pragma once

#include <optional>
#include <vector>

#include "orbitkit/lie_algebra.hpp"
#include "orbitkit/numeric.hpp"
#include "orbitkit/rng.hpp"

namespace orbitkit {

/// g = k (+)_rho V with the bracket [(A,a),(B,b)] = ([A,B], A.b - B.a).
/// Coordinates on g put the k-part first, then the V-part; the dual g* is
/// identified with k* (+) V* the same way.
class SemidirectProduct {
 public:
  SemidirectProduct() = default;
  SemidirectProduct(LieAlgebra k, Representation rho);

  const LieAlgebra& k() const { return k_; }
  const Representation& rho() const { return rho_; }
  const LieAlgebra& g() const { return g_; }

  std::size_t dim_k() const { return k_.dim(); }
  std::size_t dim_v() const { return rho_.space_dim(); }
  std::size_t dim_g() const { return g_.dim(); }

  std::vector<Rat> k_part(const std::vector<Rat>& xi) const;
  std::vector<Rat> v_part(const std::vector<Rat>& xi) const;
  std::vector<Rat> assemble(const std::vector<Rat>& a,
                            const std::vector<Rat>& v) const;

 private:
  LieAlgebra k_;
  Representation rho_;
  LieAlgebra g_;
};

/// A point n = (f, p) of g* = k* (+) V*.
struct CovectorPoint {
  std::vector<Rat> f;  // on k
  std::vector<Rat> p;  // on V

  std::vector<Rat> flat() const {
    std::vector<Rat> out = f;
    out.insert(out.end(), p.begin(), p.end());
    return out;
  }
  static CovectorPoint from_flat(const SemidirectProduct& sd,
                                 const std::vector<Rat>& m) {
    CovectorPoint n;
    n.f.assign(m.begin(), m.begin() + sd.dim_k());
    n.p.assign(m.begin() + sd.dim_k(), m.end());
    return n;
  }
  Rat pair(const std::vector<Rat>& xi) const {
    std::vector<Rat> fp = f;
    fp.insert(fp.end(), p.begin(), p.end());
    return dot(fp, xi);
  }
};

/// (p (.) v)(A) = p(A.v), an element of k*; equals tau_p*(v).
std::vector<Rat> odot(const SemidirectProduct& sd, const std::vector<Rat>& p,
                      const std::vector<Rat>& v);

/// tau_p : k -> V*, tau_p(A) = -A.p, as a (dim V) x (dim k) matrix.
QMatrix tau_matrix(const SemidirectProduct& sd, const std::vector<Rat>& p);

/// tau_p* : V -> k*, the dual map; tau_p*(v) = p (.) v.
QMatrix tau_star_matrix(const SemidirectProduct& sd, const std::vector<Rat>& p);

/// k_p = ker tau_p, the little-group algebra at p.
Subspace little_algebra(const SemidirectProduct& sd, const std::vector<Rat>& p);

/// im tau_p* as a subspace of k*; equals the annihilator of k_p.
Subspace image_tau_star(const SemidirectProduct& sd, const std::vector<Rat>& p);

Subspace kernel_tau_star(const SemidirectProduct& sd, const std::vector<Rat>& p);

/// xi.(h,q) = (A.h + q (.) a, A.q) for xi = (A,a): the fundamental vector
/// field of the coadjoint action, expressed as an element of g*.
std::vector<Rat> fundamental_field(const SemidirectProduct& sd,
                                   const std::vector<Rat>& xi,
                                   const CovectorPoint& m);

/// Matrix of xi -> xi.n with columns over the basis of g.
QMatrix fundamental_matrix(const SemidirectProduct& sd, const CovectorPoint& n);

/// g_n = {xi : xi.n = 0}.
Subspace isotropy_algebra(const SemidirectProduct& sd, const CovectorPoint& n);

/// phi = i_p* f together with the little algebra carrying it.
struct LittleGroupPoint {
  SubalgebraStructure little;    // k_p with its own structure constants
  std::vector<Rat> phi;          // f restricted to the canonical k_p basis
  Subspace stabilizer_in_kp;     // (k_p)_phi inside k (subspace of k)
};
LittleGroupPoint little_group_point(const SemidirectProduct& sd,
                                    const CovectorPoint& n);

/// Group element of G = K x V acting through a pair of matrices: `ad` is the
/// action of the K-part on k (its adjoint image) and `rho` its action on V.
/// Elements are built from exponentials or supplied exactly by the catalog;
/// exact checks stay at the algebra level, group laws are sampled.
template <class K>
struct GroupElem {
  Matrix<K> ad;
  Matrix<K> rho;
  std::vector<K> v;
};

using GroupElemQ = GroupElem<Rat>;
using GroupElemD = GroupElem<double>;

GroupElemQ group_identity(const SemidirectProduct& sd);
GroupElemQ group_from_k_action(QMatrix ad, QMatrix rho, std::vector<Rat> v);

/// exp(t(A,a)) computed numerically: Ad part expm(t ad_A), V action
/// expm(t rho'(A)), translation part t*phi1(t rho'(A)) a.
GroupElemD group_exp(const SemidirectProduct& sd, const std::vector<Rat>& xi,
                     double t = 1.0);

template <class K>
GroupElem<K> group_compose(const GroupElem<K>& a, const GroupElem<K>& b) {
  GroupElem<K> out;
  out.ad = a.ad * b.ad;
  out.rho = a.rho * b.rho;
  out.v = a.rho.apply(b.v) + a.v;
  return out;
}

GroupElemQ group_inverse(const GroupElemQ& g);
GroupElemD group_inverse(const GroupElemD& g, const Tolerance& tol);

/// Coad(k,v)(f,p) = (k.f + (k.p)(.) v, k.p). Exact for rational elements.
CovectorPoint coadjoint(const SemidirectProduct& sd, const GroupElemQ& g,
                        const CovectorPoint& n);
std::vector<double> coadjoint(const SemidirectProduct& sd, const GroupElemD& g,
                              const std::vector<double>& n_flat,
                              const Tolerance& tol);

/// Ad(k,v)(A,a) = (Ad(k)A, k.a - rho'(Ad(k)A) v).
std::vector<Rat> adjoint(const SemidirectProduct& sd, const GroupElemQ& g,
                         const std::vector<Rat>& xi);
std::vector<double> adjoint(const SemidirectProduct& sd, const GroupElemD& g,
                            const std::vector<double>& xi);

/// Seeded product of exponentials, enough to sample the identity component.
GroupElemD sample_group_element(const SemidirectProduct& sd, Rng& rng,
                                int factors = 2);

/// Numeric Ad(exp xi1)...(exp xik) on a plain Lie algebra, for the reduced
/// (little-group) side where no V-representation is involved.
DMatrix algebra_ad_exp(const LieAlgebra& g, const std::vector<double>& xi);
DMatrix algebra_coad_exp(const LieAlgebra& g, const std::vector<double>& xi);

}  // namespace orbitkit
