#include <doctest.h>

#include <cmath>

#include "orbitkit/catalog.hpp"
#include "orbitkit/induction.hpp"
#include "orbitkit/rng.hpp"

using namespace orbitkit;

namespace {

Subspace span_of(std::size_t ambient, std::initializer_list<std::size_t> idx) {
  QMatrix rows(idx.size(), ambient);
  std::size_t r = 0;
  for (std::size_t i : idx) rows(r++, i) = Rat(1);
  return Subspace::span(ambient, rows);
}

}  // namespace

TEST_CASE("induction setup: closed subalgebra and dimension bookkeeping") {
  struct Expected {
    const char* fixture;
    const char* point;
    std::size_t dim_m, dim_gh;
  };
  const Expected table[] = {
      {"se3", "spin_momentum", 0, 2},
      {"galilei", "massless_spin", 0, 3},
      {"galilei", "infinite_velocity", 2, 3},
      {"bargmann", "massive_spin", 2, 3},
  };
  for (const auto& row : table) {
    Fixture fix = build_fixture(row.fixture);
    InductionSetup setup = make_induction_setup(fix.sd, fix.points.at(row.point));
    CHECK(setup.closed);
    CHECK(setup.dim_m == row.dim_m);
    CHECK(setup.dim_gh == row.dim_gh);
    CHECK(validate(setup.little_sd.g()).ok());
  }
}

TEST_CASE("zero level set: positives, negatives, regular rank") {
  Rng rng(3);
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    for (const auto& pt : fix.point_order) {
      InductionSetup setup = make_induction_setup(fix.sd, fix.points.at(pt));
      Rng srng(5);
      ExactSamplers ex = exact_samplers(fix, pt, srng, 10);
      ZeroLevelSetCheck z = zero_level_set_check(fix.sd, setup, rng, 50, &ex);
      CHECK(z.positives_zero);
      CHECK(z.negatives_nonzero);
      CHECK(z.regular_value_rank);
    }
  }
}

TEST_CASE("base tuple evaluates to zero by definition") {
  Fixture fix = build_fixture("bargmann");
  CovectorPoint n = fix.points.at("massive_spin");
  InductionSetup setup = make_induction_setup(fix.sd, n);
  QMatrix restrict(setup.lgp.little.carrier.dim(), fix.sd.dim_k());
  for (std::size_t a = 0; a < setup.lgp.little.carrier.dim(); ++a)
    restrict.set_row(a, setup.lgp.little.carrier.basis_vector(a));
  LittlePoint m{restrict.apply(n.f), n.p};
  LittlePoint j = momentum_value(fix.sd, setup, m, n.flat());
  CHECK(all_zero(j.phi));
  CHECK(all_zero(j.p));

  // perturb the k_p*-relevant slot by a covector that restricts nontrivially
  std::vector<Rat> z1 = n.f;
  z1[0] += Rat(1, 9);
  LittlePoint bad = momentum_value(fix.sd, setup, m, fix.sd.assemble(z1, n.p));
  CHECK(!all_zero(bad.phi));
}

TEST_CASE("induced orbit theorem: dimensions, point form, invariance, form") {
  Tolerance tol;
  struct Expected {
    const char* fixture;
    const char* point;
    std::size_t m, gh, orbit;
  };
  const Expected table[] = {
      {"se3", "spin_momentum", 0, 2, 4},
      {"galilei", "infinite_velocity", 2, 3, 8},
      {"bargmann", "massive_spin", 2, 3, 8},
  };
  for (const auto& row : table) {
    Fixture fix = build_fixture(row.fixture);
    InductionSetup setup = make_induction_setup(fix.sd, fix.points.at(row.point));
    CHECK(row.m + 2 * row.gh == row.orbit);
    Rng rng(7);
    Rng srng(9);
    ExactSamplers ex = exact_samplers(fix, row.point, srng, 8);
    InducedOrbitCheck ic =
        induced_orbit_theorem_check(fix.sd, setup, rng, 60, tol, &ex);
    CHECK(ic.dimension_ok);
    CHECK(ic.point_form_ok);
    CHECK(ic.h_invariance_ok);
    CHECK(ic.form_verdict == TriVerdict::holds);
    CHECK(ic.form_residual < 1e-9);
  }
}

TEST_CASE("induction dimension law as a property over seeded points") {
  Rng rng(11);
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    for (int t = 0; t < 60; ++t) {
      CovectorPoint n;
      n.f = rng.rational_vector(fix.sd.dim_k());
      n.p = rng.rational_vector(fix.sd.dim_v());
      OrbitReport r = analyze_point(fix.sd, n);
      CHECK(fix.sd.dim_g() - r.dim_isotropy ==
            (r.dim_little_algebra - r.dim_phi_stabilizer) +
                2 * (fix.sd.dim_k() - r.dim_little_algebra));
    }
  }
}

TEST_CASE("connection: reproduction, equivariance, pullback on the Euclidean fixture") {
  Fixture fix = build_fixture("se3");
  // p = span{J3} with the symmetric complement span{J1, J2}
  ConnectionSpec spec =
      make_connection_spec(fix.sd, span_of(3, {2}), span_of(3, {0, 1}));
  CHECK(spec.direct_sum);
  CHECK(spec.ad_invariant);

  Tolerance tol;
  Rng rng(13);
  ConnectionTransferCheck ct = connection_transfer_check(fix.sd, spec, rng, 50, tol);
  CHECK(ct.complement_invariant);
  CHECK(ct.reproduction_residual < 1e-9);
  CHECK(ct.equivariance_residual < 1e-9);
  CHECK(ct.pullback_residual < 1e-9);

  // vertical vector at the identity reproduces exactly
  GroupElemD id;
  id.ad = DMatrix::identity(3);
  id.rho = DMatrix::identity(3);
  id.v.assign(3, 0.0);
  std::vector<double> zeta = {0.0, 0.0, 0.7};
  std::vector<double> w = {0.1, -0.4, 0.2};
  ConnectionValue cv = connection_value(fix.sd, spec, id, zeta, w, tol);
  CHECK(std::fabs(cv.b[2] - 0.7) < 1e-15);
  CHECK(std::fabs(cv.delta[0] - 0.1) < 1e-15);
}

TEST_CASE("skewed complement: equivariance fails as a positive control") {
  Fixture fix = build_fixture("se3");
  // span{J1 + J3, J2} is a complement of span{J3} but not Ad(P)-invariant
  Subspace skewed = Subspace::span(
      3, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}});
  ConnectionSpec spec = make_connection_spec(fix.sd, span_of(3, {2}), skewed);
  CHECK(spec.direct_sum);
  CHECK(!spec.ad_invariant);

  Tolerance tol;
  Rng rng(15);
  ConnectionTransferCheck ct = connection_transfer_check(fix.sd, spec, rng, 50, tol);
  CHECK(!ct.complement_invariant);
  CHECK(ct.reproduction_residual < 1e-9);  // reproduction is choice-independent
  CHECK(ct.equivariance_residual > 1e-3);  // violated
}

TEST_CASE("symmetric space checks: frozen verdicts") {
  Fixture se3 = build_fixture("se3");
  SymmetricSpaceCheck s1 = symmetric_space_check(se3.sd, span_of(3, {2}), span_of(3, {2}));
  CHECK(s1.pm_in_m);
  CHECK(s1.mm_in_p);
  CHECK(s1.kpn_in_n);
  CHECK(s1.nn_in_kp);
  CHECK(s1.canonical_connection_exists);

  // abelian k: any splitting works
  LieAlgebra ab = LieAlgebra::abelian(4);
  Representation triv(4, 1);
  SemidirectProduct absd(ab, triv);
  SymmetricSpaceCheck s2 =
      symmetric_space_check(absd, span_of(4, {0, 1}), span_of(4, {0}));
  CHECK(s2.canonical_connection_exists);

  // galilei (ii): p = boosts in k_p = span{J3, B1, B2}; no invariant m exists
  Fixture gal = build_fixture("galilei");
  SymmetricSpaceCheck s3 =
      symmetric_space_check(gal.sd, span_of(6, {2, 3, 4}), span_of(6, {3, 4}));
  CHECK(!s3.pm_in_m);
  CHECK(s3.kpn_in_n);
  CHECK(s3.nn_in_kp);
  CHECK(!s3.canonical_connection_exists);

  // bargmann: p = span{J3} in k_p = so(3); both quotients symmetric
  Fixture barg = build_fixture("bargmann");
  SymmetricSpaceCheck s4 =
      symmetric_space_check(barg.sd, span_of(6, {0, 1, 2}), span_of(6, {2}));
  CHECK(s4.canonical_connection_exists);

  // galilei (i): P = K_p
  SymmetricSpaceCheck s5 =
      symmetric_space_check(gal.sd, span_of(6, {2, 3, 4}), span_of(6, {2, 3, 4}));
  CHECK(s5.canonical_connection_exists);
}

TEST_CASE("curvature probes: fibre invariance and horizontality") {
  Fixture fix = build_fixture("se3");
  ConnectionSpec spec =
      make_connection_spec(fix.sd, span_of(3, {2}), span_of(3, {0, 1}));
  CovectorPoint n = fix.points.at("spin_momentum");
  Tolerance tol;
  Rng rng(17);
  CurvatureProbe probe = connection_curvature_probe(fix.sd, spec, n, rng, 12, tol);
  // n vanishes on [d, d] here, so c0 is invariant on the fibres
  CHECK(probe.c0_invariance_residual < 1e-9);
  // finite-difference horizontality: second-order stencil with Richardson
  CHECK(probe.horizontality_residual < 1e-6);
  CHECK(probe.richardson_delta < 1e-5);
}
