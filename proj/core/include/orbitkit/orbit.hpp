#pragma once

#include "orbitkit/semidirect.hpp"

namespace orbitkit {

/// Everything analyze_point derives from one covector point. Dimensions are
/// exact; group-level statements (the K_p <= K_f comparison in particular)
/// are decided at the Lie-algebra level, so the connectedness caveat applies
/// to the boolean verdicts.
struct OrbitReport {
  std::size_t dim_g = 0;
  std::size_t dim_isotropy = 0;      // dim g_n
  std::size_t dim_orbit = 0;         // dim O_n^G
  std::size_t dim_base = 0;          // dim Z, the K-orbit of p
  std::size_t dim_little_orbit = 0;  // dim Y_p, the K_p-orbit of phi
  std::size_t dim_fibre = 0;         // dim p(.)V, the affine fibre direction
  std::size_t dim_L = 0;
  std::size_t dim_N = 0;
  std::size_t dim_little_algebra = 0;     // dim k_p
  std::size_t dim_phi_stabilizer = 0;     // dim (k_p)_phi
  std::size_t dim_kernel_tau_star = 0;

  bool n_isotropic = false;
  bool n_lagrangian = false;
  bool l_lagrangian = false;
  bool kp_in_kf = false;
  bool f_closed_on_k = false;
  bool f_closed_on_kp = false;
  bool connectedness_assumed = true;  // always flagged on algebra-level verdicts
};

OrbitReport analyze_point(const SemidirectProduct& sd, const CovectorPoint& n);

/// omega_m(xi.m, eta.m) = -m([xi, eta]).
Rat kks_form(const SemidirectProduct& sd, const CovectorPoint& m,
             const std::vector<Rat>& xi, const std::vector<Rat>& eta);

/// Same value through the expanded route: the pairing of xi.m against eta.
Rat kks_form_expanded(const SemidirectProduct& sd, const CovectorPoint& m,
                      const std::vector<Rat>& xi, const std::vector<Rat>& eta);

/// B_n(x,y) = n([x,y]) over the basis of g.
QMatrix pairing_form(const SemidirectProduct& sd, const CovectorPoint& n);

/// {eta : n([xi, eta]) = 0 for all xi in S}.
Subspace symplectic_orthogonal(const SemidirectProduct& sd,
                               const CovectorPoint& n, const Subspace& s);

/// Tangent space of the K-orbit L at o, as a subspace of g*.
Subspace tangent_L(const SemidirectProduct& sd, const CovectorPoint& o);
/// Tangent space of the V-orbit N at o; constant along N.
Subspace tangent_N(const SemidirectProduct& sd, const CovectorPoint& o);

struct TangentComplements {
  Subspace t_L, t_L_perp;  // inside T_o O, as subspaces of g*
  Subspace t_N, t_N_perp;
};
TangentComplements tangent_L_N(const SemidirectProduct& sd,
                               const CovectorPoint& o);

/// Necessary tangent-level conditions for o to lie on the coadjoint orbit
/// through n (isotropy and little-group dimension data must transport).
bool tangent_level_orbit_compatible(const SemidirectProduct& sd,
                                    const CovectorPoint& n,
                                    const CovectorPoint& o);

/// As above, guarded against points that visibly cannot lie on the orbit
/// through n; throws std::invalid_argument in that case.
TangentComplements tangent_L_N(const SemidirectProduct& sd,
                               const CovectorPoint& n, const CovectorPoint& o);

struct CharacteristicDistribution {
  Subspace value;          // T_oL cap (T_oL)^perp, computed by intersection
  Subspace closed_form;    // {(0, A.q) : A in k_h}
  bool closed_form_matches = false;
  bool precondition_kp_in_kf = false;
};
CharacteristicDistribution characteristic_distribution(
    const SemidirectProduct& sd, const CovectorPoint& o);

struct FoliationLeaf {
  CovectorPoint base;
  Subspace directions;  // q(.)V x {0} inside g*
  bool isotropic = false;
  bool lagrangian = false;
};
FoliationLeaf foliation_leaf(const SemidirectProduct& sd, const CovectorPoint& o);

/// Residual of the symplectic-form splitting identity at a sampled group
/// element: | Omega(xi^r, eta^r)|_g - omega_{Coad(g)n}(xi.m, eta.m) |.
double splitting_residual(const SemidirectProduct& sd, const CovectorPoint& n,
                          const GroupElemD& g, const std::vector<Rat>& xi,
                          const std::vector<Rat>& eta, const Tolerance& tol);

/// Same identity over exact rational group elements; vanishes identically.
Rat splitting_residual_exact(const SemidirectProduct& sd, const CovectorPoint& n,
                             const GroupElemQ& g, const std::vector<Rat>& xi,
                             const std::vector<Rat>& eta);

/// Exact residual of s*omega = alpha_0 at a point o = (h,q) on L, for
/// K-directions A, B: omega((A,0),(B,0))|_o + h([A,B]) must vanish.
Rat section_pullback_residual(const SemidirectProduct& sd,
                              const CovectorPoint& o, const std::vector<Rat>& a,
                              const std::vector<Rat>& b);

/// Under k_p <= k_f, sampled elements of K_q must move h by elements of
/// im tau_q*: returns the largest membership residual over the samples.
double varisotropy_residual(const SemidirectProduct& sd, const CovectorPoint& n,
                            Rng& rng, int samples, const Tolerance& tol);

}  // namespace orbitkit
