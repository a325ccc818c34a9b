#pragma once

#include "orbitkit/orbit.hpp"
#include "orbitkit/polarization.hpp"
#include "orbitkit/semidirect.hpp"

namespace orbitkit {

/// Data for inducing from G_p = K_p x V up to G: the subalgebra
/// g_p = k_p (+) V of g (checked closed), the little-group point phi, and
/// G_p itself assembled as a semidirect product so its coadjoint action is
/// available exactly.
struct InductionSetup {
  CovectorPoint n;
  LittleGroupPoint lgp;
  Subspace h_sub;              // k_p (+) V inside g
  SemidirectProduct little_sd; // K_p x V with the restricted representation
  bool closed = false;
  std::size_t dim_m = 0;       // dim of the little-group orbit O_phi
  std::size_t dim_gh = 0;      // dim G/G_p = dim k - dim k_p
};

InductionSetup make_induction_setup(const SemidirectProduct& sd,
                                    const CovectorPoint& n);

/// Value of the combined momentum map at a point of M x T*G, in the
/// coordinates (phi-part over the canonical k_p basis, V*-part):
/// J = m - i_h* z.
struct LittlePoint {
  std::vector<Rat> phi;  // over the k_p basis
  std::vector<Rat> p;    // over V*
};
LittlePoint momentum_value(const SemidirectProduct& sd,
                           const InductionSetup& setup, const LittlePoint& m,
                           const std::vector<Rat>& z_flat);

/// Exact group-element pools supplied by callers that can build them (the
/// catalog fixtures, via rational rotations); the generic path falls back to
/// identity K_p-elements for the exact tuples.
struct ExactSamplers {
  std::vector<GroupElemQ> kp_elements;  // stabilize p, v-part zero
  std::vector<GroupElemQ> g_elements;   // arbitrary exact elements of G
};

struct ZeroLevelSetCheck {
  bool positives_zero = false;   // exact zeros on characterized tuples
  bool negatives_nonzero = false;
  bool regular_value_rank = false;  // differential has full rank dim g_p
  int samples = 0;
};
ZeroLevelSetCheck zero_level_set_check(const SemidirectProduct& sd,
                                       const InductionSetup& setup, Rng& rng,
                                       int samples,
                                       const ExactSamplers* exact = nullptr);

struct InducedOrbitCheck {
  bool dimension_ok = false;       // dim O = dim M + 2 dim(G/G_p)
  bool point_form_ok = false;      // quotient representative = Coad(l,u) n
  bool h_invariance_ok = false;    // representative constant on G_p-orbits
  double form_residual = 0.0;      // omega_ind vs KKS at sampled points
  TriVerdict form_verdict = TriVerdict::not_evaluated;
};
InducedOrbitCheck induced_orbit_theorem_check(const SemidirectProduct& sd,
                                              const InductionSetup& setup,
                                              Rng& rng, int samples,
                                              const Tolerance& tol,
                                              const ExactSamplers* exact = nullptr);

/// An Ad(P)-complement choice defining the p-valued connection on K -> K/P
/// and, through it, the d-valued connection on G -> G/D.
struct ConnectionSpec {
  Subspace p_alg;       // p inside k
  Subspace complement;  // n_sub with k = p (+) n_sub
  bool direct_sum = false;
  bool ad_invariant = false;  // [p, n_sub] <= n_sub
  QMatrix projector_p;        // k -> k, projection onto p along n_sub
};
ConnectionSpec make_connection_spec(const SemidirectProduct& sd,
                                    const Subspace& p_alg,
                                    const Subspace& complement);

/// c_g(zeta, w) = (B, Delta) in d = p (+) V, for the tangent vector at
/// g = (k, v) with right-trivialized K-part zeta and V-part w.
struct ConnectionValue {
  std::vector<double> b;      // in k coordinates, lies in p
  std::vector<double> delta;  // in V
};
ConnectionValue connection_value(const SemidirectProduct& sd,
                                 const ConnectionSpec& spec, const GroupElemD& g,
                                 const std::vector<double>& zeta,
                                 const std::vector<double>& w,
                                 const Tolerance& tol);

struct ConnectionTransferCheck {
  double reproduction_residual = 0.0;  // c(fundamental of xi) = xi
  double equivariance_residual = 0.0;  // R_h* c = Ad(h^-1) c
  double pullback_residual = 0.0;      // p-component restricted to K is a
  bool complement_invariant = false;
};
ConnectionTransferCheck connection_transfer_check(const SemidirectProduct& sd,
                                                  const ConnectionSpec& spec,
                                                  Rng& rng, int samples,
                                                  const Tolerance& tol);

struct SymmetricSpaceCheck {
  Subspace m_complement;  // of p in k_p
  Subspace n_complement;  // of k_p in k
  bool pm_in_m = false;   // [p, m] <= m
  bool mm_in_p = false;   // [m, m] <= p
  bool kpn_in_n = false;  // [k_p, n] <= n
  bool nn_in_kp = false;  // [n, n] <= k_p
  bool canonical_connection_exists = false;
};
/// Validates the symmetric-pair bracket relations for the given complements,
/// or for the coordinate-orthogonal complements when none are supplied.
SymmetricSpaceCheck symmetric_space_check(const SemidirectProduct& sd,
                                          const Subspace& little, const Subspace& p_alg);
SymmetricSpaceCheck symmetric_space_check(const SemidirectProduct& sd,
                                          const Subspace& little, const Subspace& p_alg,
                                          const Subspace& m_complement,
                                          const Subspace& n_complement);

/// Finite-difference probes of the induced 2-form data: invariance of
/// c0 = n0 o c on the fibres of G -> G/D and horizontality of d c0.
/// Derivatives use central differences with step 1e-4 and one Richardson
/// extrapolation.
struct CurvatureProbe {
  double c0_invariance_residual = 0.0;
  double horizontality_residual = 0.0;
  double richardson_delta = 0.0;  // |refined - coarse| of the derivative
};
CurvatureProbe connection_curvature_probe(const SemidirectProduct& sd,
                                          const ConnectionSpec& spec,
                                          const CovectorPoint& n, Rng& rng,
                                          int samples, const Tolerance& tol);

}  // namespace orbitkit
