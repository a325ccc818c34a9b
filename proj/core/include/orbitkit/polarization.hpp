#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "orbitkit/orbit.hpp"
#include "orbitkit/semidirect.hpp"

namespace orbitkit {

/// Verdict of a check that may be decided exactly, decided by sampling, or
/// not evaluated at all (sampling disabled, or intrinsically topological).
enum class TriVerdict { holds, fails, not_evaluated };

inline const char* to_string(TriVerdict v) {
  switch (v) {
    case TriVerdict::holds: return "holds";
    case TriVerdict::fails: return "fails";
    default: return "not-evaluated";
  }
}

struct SamplingOptions {
  int samples = 100;  // 0 disables every sampled verdict
  std::uint64_t seed = 0;
  Tolerance tol;
};

/// Real 2n-dimensional picture of a complex subspace: (x + iy) <-> (x | y).
/// Closed under multiplication by i by construction.
Subspace realify(const ComplexSubspace& s);

/// Axioms of a polarization of g^C with respect to n, decided exactly over
/// the rationals; Ad(G_n)-invariance additionally sampled on exponentials.
struct PolarizationAxioms {
  bool is_subalgebra = false;
  bool contains_isotropy = false;   // g_n^C <= h
  bool dimension_ok = false;        // dim_C h = (dim g + dim g_n)/2
  bool isotropic = false;           // n([h,h]) = 0
  bool invariant_exact = false;     // [g_n, h] <= h
  TriVerdict invariant_sampled = TriVerdict::not_evaluated;
  bool sum_subalgebra = false;      // h + conj(h) closed
  double invariant_residual = 0.0;

  bool passes() const {
    return is_subalgebra && contains_isotropy && dimension_ok && isotropic &&
           invariant_exact && sum_subalgebra &&
           invariant_sampled != TriVerdict::fails;
  }
};

/// The pair d = h cap g, e = (h + conj h) cap g and the two-stage Pukanszky
/// certificate. The exact certificate is the tangent form of the affine-plane
/// condition: span{xi.n : xi in d} = e-annihilator. The orbit-closedness
/// variant is topological and is recorded as never evaluated.
struct PukanszkyResult {
  Subspace d, e;            // real subalgebras of g
  Subspace e_annihilator;   // inside g*
  bool d_e_are_subalgebras = false;
  bool infinitesimal = false;
  TriVerdict sampled_membership = TriVerdict::not_evaluated;
  TriVerdict sampled_span = TriVerdict::not_evaluated;
  TriVerdict orbit_closed = TriVerdict::not_evaluated;
  double membership_residual = 0.0;

  bool holds() const {
    return infinitesimal && sampled_membership != TriVerdict::fails &&
           sampled_span != TriVerdict::fails;
  }
};

/// Generic (plain Lie algebra) forms: these run both on g = k (+) V and on
/// the little algebra k_p for the reduction theorem.
PolarizationAxioms check_polarization_algebra(const LieAlgebra& g,
                                              const std::vector<Rat>& n,
                                              const ComplexSubspace& h,
                                              const SamplingOptions& opts);
PukanszkyResult pukanszky_algebra(const LieAlgebra& g, const std::vector<Rat>& n,
                                  const ComplexSubspace& h,
                                  const SamplingOptions& opts);

/// Derived data of a candidate h <= g^C over a semidirect product.
struct PolarizationCandidate {
  ComplexSubspace h;
  bool has_semidirect_form = false;  // V^C <= h
  ComplexSubspace a;                 // h cap k^C, valid when split
  Subspace d, e;                     // real subalgebras of g
  Subspace p_alg, q_alg;             // a cap k and (a + conj a) cap k, in k
};
PolarizationCandidate analyze_candidate(const SemidirectProduct& sd,
                                        const ComplexSubspace& h);

/// a with h = a (+) V^C, if V^C <= h.
std::optional<ComplexSubspace> semidirect_form(const SemidirectProduct& sd,
                                               const ComplexSubspace& h);

PolarizationAxioms check_polarization(const SemidirectProduct& sd,
                                      const CovectorPoint& n,
                                      const ComplexSubspace& h,
                                      const SamplingOptions& opts);

PukanszkyResult pukanszky_check(const SemidirectProduct& sd,
                                const CovectorPoint& n, const ComplexSubspace& h,
                                const SamplingOptions& opts);

/// Both sides of the semidirect reduction: the candidate on g at n, and the
/// extracted a on k_p at phi = i_p* f, with verdict comparison and the
/// intermediate membership facts of the proof.
struct ReductionCheck {
  bool has_semidirect_form = false;
  PolarizationAxioms big_axioms, little_axioms;
  PukanszkyResult big_puk, little_puk;
  bool axioms_consistent = false;
  bool pukanszky_consistent = false;
  bool odot_in_q_annihilator = false;    // p (.) V <= k_p-annihilator <= q-annihilator
  TriVerdict restriction_equivalence = TriVerdict::not_evaluated;
  std::string note;
};
ReductionCheck reduction_theorem_check(const SemidirectProduct& sd,
                                       const CovectorPoint& n,
                                       const ComplexSubspace& h,
                                       const SamplingOptions& opts);

/// h = k_p^C (+) V^C, defined when f vanishes on [k_p, k_p]; throws
/// std::domain_error naming the violating bracket pairs otherwise.
ComplexSubspace trivial_polarization(const SemidirectProduct& sd,
                                     const CovectorPoint& n);

/// Dimension bookkeeping of the symplectic subbundle attached to a
/// polarization satisfying Pukanszky's condition, plus the fibre projection
/// consistency between the g-level and k_p-level pictures.
struct BundleCheck {
  std::size_t dim_f = 0;          // dim(G/D) + dim e-annihilator
  std::size_t dim_orbit = 0;
  bool f_matches_orbit = false;
  std::size_t dim_f_reduced = 0;  // dim(K_p/P) + dim i_p* q-annihilator
  std::size_t dim_little_orbit = 0;
  bool f_reduced_matches = false;
  std::size_t dim_e_mod_d = 0;    // fibre E/D of the T*(G/E) picture
  std::size_t dim_t_ge = 0;       // dim T*(G/E)
  bool projection_exact = false;  // i_p* maps q-ann onto the reduced q-ann
  TriVerdict projection_sampled = TriVerdict::not_evaluated;
};
BundleCheck pukanszky_bundle_check(const SemidirectProduct& sd,
                                   const CovectorPoint& n,
                                   const ComplexSubspace& h,
                                   const SamplingOptions& opts);

}  // namespace orbitkit
