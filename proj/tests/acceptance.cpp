// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code = number of failed criteria.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbitkit/catalog.hpp"
#include "orbitkit/cli.hpp"
#include "orbitkit/dsl.hpp"
#include "orbitkit/induction.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/polarization.hpp"
#include "orbitkit/rng.hpp"

using namespace orbitkit;

namespace {

constexpr double kTol = 1e-9;

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> body;
};

CovectorPoint random_point(const SemidirectProduct& sd, Rng& rng) {
  CovectorPoint n;
  n.f = rng.rational_vector(sd.dim_k());
  n.p = rng.rational_vector(sd.dim_v());
  return n;
}

bool expect(bool cond, const std::string& what, std::string& why) {
  if (!cond && why.empty()) why = what;
  return cond;
}

// ---------------------------------------------------------------------------
// 1. fixture dimension tables, exact
bool criterion_dimensions(std::string& why) {
  bool ok = true;
  {
    Fixture fix = build_fixture("se3");
    OrbitReport r = analyze_point(fix.sd, fix.points.at("spin_momentum"));
    ok &= expect(r.dim_orbit == 4, "se3 orbit dim", why);
    ok &= expect(r.dim_base == 2, "se3 Z dim", why);
    ok &= expect(r.dim_little_orbit == 0, "se3 little orbit dim", why);
  }
  {
    Fixture fix = build_fixture("galilei");
    OrbitReport r1 = analyze_point(fix.sd, fix.points.at("massless_spin"));
    ok &= expect(r1.dim_orbit == 6, "galilei(i) orbit dim", why);
    ok &= expect(r1.dim_base == 3, "galilei(i) Z dim", why);
    OrbitReport r2 = analyze_point(fix.sd, fix.points.at("infinite_velocity"));
    ok &= expect(r2.dim_orbit == 8, "galilei(ii) orbit dim", why);
    ok &= expect(r2.dim_isotropy == 2, "galilei(ii) isotropy dim", why);
    ok &= expect(r2.dim_little_orbit == 2, "galilei(ii) little orbit dim", why);
  }
  {
    Fixture fix = build_fixture("bargmann");
    OrbitReport r = analyze_point(fix.sd, fix.points.at("massive_spin"));
    ok &= expect(r.dim_orbit == 8, "bargmann orbit dim", why);
    ok &= expect(r.dim_little_orbit == 2, "bargmann little orbit dim", why);
    Subspace kp = little_algebra(fix.sd, fix.points.at("massive_spin").p);
    SubalgebraStructure sub = subalgebra_structure(fix.sd.k(), kp);
    ok &= expect(sub.closed && sub.algebra == build_fixture("se3").sd.k(),
                 "bargmann K_p algebra is so(3)", why);
  }
  return ok;
}

// 2. annihilator(ker tau_p) = im tau_p*, 100 seeded p per fixture
bool criterion_rangeoftau(std::string& why) {
  bool ok = true;
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    Rng rng(101);
    for (int t = 0; t < 100; ++t) {
      std::vector<Rat> p = rng.rational_vector(fix.sd.dim_v());
      if (t == 0) p.assign(fix.sd.dim_v(), Rat(0));
      ok &= expect(
          little_algebra(fix.sd, p).annihilator() == image_tau_star(fix.sd, p),
          name + ": annihilator-range identity", why);
    }
  }
  return ok;
}

// 3. exact-sequence and induction dimension laws, 100 seeded points
bool criterion_dimension_laws(std::string& why) {
  bool ok = true;
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    Rng rng(103);
    for (int t = 0; t < 100; ++t) {
      CovectorPoint n = random_point(fix.sd, rng);
      OrbitReport r = analyze_point(fix.sd, n);
      ok &= expect(r.dim_isotropy == r.dim_kernel_tau_star + r.dim_phi_stabilizer,
                   name + ": exact sequence law", why);
      ok &= expect(r.dim_orbit == r.dim_little_orbit + 2 * r.dim_base,
                   name + ": induction law", why);
    }
  }
  return ok;
}

// 4. isotropy/Lagrangian statements for N and L
bool criterion_isotropy(std::string& why) {
  bool ok = true;
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    Rng rng(107);
    for (int t = 0; t < 100; ++t) {
      CovectorPoint n = random_point(fix.sd, rng);
      TangentComplements tc = tangent_L_N(fix.sd, n);
      OrbitReport r = analyze_point(fix.sd, n);
      ok &= expect(tc.t_N_perp.contains(tc.t_N), name + ": N isotropic", why);
      if (r.kp_in_kf)
        ok &= expect(tc.t_N == tc.t_N_perp, name + ": N Lagrangian under k_p<=k_f",
                     why);
      ok &= expect((tc.t_L == tc.t_L_perp) == r.f_closed_on_k,
                   name + ": L Lagrangian iff f closed", why);
    }
    // the fixture points decide the equality <-> k_p <= k_f equivalence
    for (const auto& pt : fix.point_order) {
      OrbitReport r = analyze_point(fix.sd, fix.points.at(pt));
      TangentComplements tc = tangent_L_N(fix.sd, fix.points.at(pt));
      ok &= expect((tc.t_N == tc.t_N_perp) == r.kp_in_kf,
                   name + "/" + pt + ": N equality iff cotangent type", why);
    }
    // constructed f satisfying and violating the closedness condition
    CovectorPoint closed_f;
    closed_f.f.assign(fix.sd.dim_k(), Rat(0));
    closed_f.p = rng.rational_vector(fix.sd.dim_v());
    TangentComplements tc = tangent_L_N(fix.sd, closed_f);
    ok &= expect(tc.t_L == tc.t_L_perp, name + ": constructed closed f", why);
    CovectorPoint open_f = fix.points.at(fix.point_order.front());
    TangentComplements to = tangent_L_N(fix.sd, open_f);
    ok &= expect(!(to.t_L == to.t_L_perp), name + ": constructed non-closed f", why);
  }
  return ok;
}

// 5. splitting theorem residual < 1e-9, 100 seeded samples per fixture
bool criterion_splitting(std::string& why) {
  bool ok = true;
  Tolerance tol{kTol};
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    CovectorPoint n = fix.points.at(fix.point_order.front());
    Rng rng(109);
    for (int t = 0; t < 100; ++t) {
      GroupElemD g = sample_group_element(fix.sd, rng);
      std::vector<Rat> xi = rng.rational_vector(fix.sd.dim_g());
      std::vector<Rat> eta = rng.rational_vector(fix.sd.dim_g());
      double res = splitting_residual(fix.sd, n, g, xi, eta, tol);
      ok &= expect(res < kTol, name + ": splitting residual " + std::to_string(res),
                   why);
    }
  }
  return ok;
}

// 6. polarization verdicts match the worked examples
bool criterion_polarizations(std::string& why) {
  bool ok = true;
  SamplingOptions opts;
  opts.samples = 100;
  opts.seed = 11;
  opts.tol = Tolerance{kTol};
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    for (const auto& pol : fix.polarization_order) {
      const CovectorPoint& n = fix.points.at(fix.polarization_point.at(pol));
      PolarizationAxioms ax =
          check_polarization(fix.sd, n, fix.polarizations.at(pol), opts);
      ok &= expect(ax.passes(), name + "/" + pol + ": axioms", why);
      PukanszkyResult puk =
          pukanszky_check(fix.sd, n, fix.polarizations.at(pol), opts);
      ok &= expect(puk.infinitesimal, name + "/" + pol + ": infinitesimal", why);
      ok &= expect(puk.sampled_membership == TriVerdict::holds,
                   name + "/" + pol + ": sampled membership", why);
      ok &= expect(puk.membership_residual < kTol,
                   name + "/" + pol + ": sampled residual", why);
      ok &= expect(puk.holds(), name + "/" + pol + ": Pukanszky", why);
    }
  }
  // galilei (ii): D-moves of phi fill a 1-dimensional affine plane
  {
    Fixture fix = build_fixture("galilei");
    ReductionCheck rc = reduction_theorem_check(
        fix.sd, fix.points.at("infinite_velocity"), fix.polarizations.at("boosts"),
        opts);
    ok &= expect(rc.little_puk.e_annihilator.dim() == 1,
                 "galilei/boosts: 1-dim affine plane", why);
    ok &= expect(rc.little_puk.sampled_span == TriVerdict::holds,
                 "galilei/boosts: sampled span", why);
  }
  // bargmann: reduced e-annihilator vanishes for both candidates
  {
    Fixture fix = build_fixture("bargmann");
    for (const char* pol : {"holomorphic_plus", "holomorphic_minus"}) {
      ReductionCheck rc = reduction_theorem_check(
          fix.sd, fix.points.at("massive_spin"), fix.polarizations.at(pol), opts);
      ok &= expect(rc.little_puk.e_annihilator.dim() == 0,
                   std::string("bargmann/") + pol + ": e-ann = 0", why);
    }
  }
  return ok;
}

// 7. reduction-theorem consistency, including a perturbed non-polarization
bool criterion_reduction(std::string& why) {
  bool ok = true;
  SamplingOptions opts;
  opts.samples = 50;
  opts.seed = 13;
  opts.tol = Tolerance{kTol};
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    for (const auto& pol : fix.polarization_order) {
      const CovectorPoint& n = fix.points.at(fix.polarization_point.at(pol));
      ReductionCheck rc =
          reduction_theorem_check(fix.sd, n, fix.polarizations.at(pol), opts);
      ok &= expect(rc.axioms_consistent && rc.pukanszky_consistent,
                   name + "/" + pol + ": consistent verdicts", why);
    }
  }
  {
    Fixture fix = build_fixture("galilei");
    CovectorPoint n = fix.points.at("infinite_velocity");
    CMatrix rows(2 + 4, 10);
    rows(0, 2) = CRat(1);  // J3
    rows(1, 4) = CRat(1);  // B2: breaks isotropy of phi
    for (std::size_t s = 0; s < 4; ++s) rows(2 + s, 6 + s) = CRat(1);
    ComplexSubspace bad = ComplexSubspace::span(10, rows);
    ReductionCheck rc = reduction_theorem_check(fix.sd, n, bad, opts);
    ok &= expect(!rc.big_axioms.isotropic && !rc.little_axioms.isotropic,
                 "perturbed candidate fails isotropy on both levels", why);
    ok &= expect(rc.axioms_consistent, "perturbed candidate: consistent", why);
  }
  return ok;
}

// 8. symplectic induction: zero level set and the form agreement
bool criterion_induction(std::string& why) {
  bool ok = true;
  Tolerance tol{kTol};
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    for (const auto& pt : fix.point_order) {
      InductionSetup setup = make_induction_setup(fix.sd, fix.points.at(pt));
      ok &= expect(setup.closed, name + ": g_p closed", why);
      Rng rng(127);
      Rng srng(131);
      ExactSamplers ex = exact_samplers(fix, pt, srng, 10);
      ZeroLevelSetCheck z = zero_level_set_check(fix.sd, setup, rng, 50, &ex);
      ok &= expect(z.positives_zero, name + "/" + pt + ": 50 positive tuples", why);
      ok &= expect(z.negatives_nonzero, name + "/" + pt + ": 50 negative tuples",
                   why);
      ok &= expect(z.regular_value_rank, name + "/" + pt + ": regular value", why);
      InducedOrbitCheck ic =
          induced_orbit_theorem_check(fix.sd, setup, rng, 100, tol, &ex);
      ok &= expect(ic.dimension_ok, name + "/" + pt + ": induced dim law", why);
      ok &= expect(ic.point_form_ok, name + "/" + pt + ": point form", why);
      ok &= expect(ic.h_invariance_ok, name + "/" + pt + ": H-invariance", why);
      ok &= expect(ic.form_residual < kTol,
                   name + "/" + pt + ": omega_ind residual", why);
    }
  }
  return ok;
}

// 9. connection transfer on the Euclidean fixture
bool criterion_connection(std::string& why) {
  bool ok = true;
  Fixture fix = build_fixture("se3");
  Tolerance tol{kTol};
  QMatrix p_rows(1, 3);
  p_rows(0, 2) = Rat(1);
  QMatrix good_rows(2, 3);
  good_rows(0, 0) = Rat(1);
  good_rows(1, 1) = Rat(1);
  ConnectionSpec good = make_connection_spec(
      fix.sd, Subspace::span(3, p_rows), Subspace::span(3, good_rows));
  Rng rng(137);
  ConnectionTransferCheck ct = connection_transfer_check(fix.sd, good, rng, 50, tol);
  ok &= expect(ct.reproduction_residual < kTol, "reproduction residual", why);
  ok &= expect(ct.equivariance_residual < kTol, "equivariance residual", why);

  QMatrix skew_rows(2, 3);
  skew_rows(0, 0) = Rat(1);
  skew_rows(0, 2) = Rat(1);
  skew_rows(1, 1) = Rat(1);
  ConnectionSpec skewed = make_connection_spec(
      fix.sd, Subspace::span(3, p_rows), Subspace::span(3, skew_rows));
  Rng rng2(139);
  ConnectionTransferCheck cs = connection_transfer_check(fix.sd, skewed, rng2, 50, tol);
  ok &= expect(!cs.complement_invariant, "skewed complement flagged", why);
  ok &= expect(cs.equivariance_residual > kTol, "skewed equivariance fails", why);
  return ok;
}

// 10. DSL and CLI determinism
bool criterion_dsl_cli(std::string& why) {
  bool ok = true;
  const std::string root = ORBITKIT_SOURCE_DIR;
  for (const auto& name : fixture_names()) {
    std::ifstream f(root + "/examples/" + name + ".lie", std::ios::binary);
    ok &= expect(f.good(), name + ".lie readable", why);
    std::ostringstream body;
    body << f.rdbuf();
    dsl::Elaboration el = dsl::load(body.str());
    ok &= expect(el.ok(), name + ".lie elaborates", why);
    if (!el.ok()) continue;
    Fixture fix = build_fixture(name);
    const SemidirectProduct& sd = el.products.at(name);
    ok &= expect(sd.k() == fix.sd.k() && sd.rho() == fix.sd.rho() &&
                     sd.g() == fix.sd.g(),
                 name + ".lie bit-identical structures", why);
    for (const auto& [pname, point] : fix.points)
      ok &= expect(el.points.count(pname) == 1 &&
                       el.points.at(pname).value.f == point.f &&
                       el.points.at(pname).value.p == point.p,
                   name + ".lie point " + pname, why);
    for (const auto& [hname, h] : fix.polarizations)
      ok &= expect(el.polarizations.count(hname) == 1 &&
                       el.polarizations.at(hname).h == h,
                   name + ".lie polarization " + hname, why);
  }
  // byte-identical JSON for identical inputs
  for (const auto& args :
       {std::vector<std::string>{"examples", "galilei", "--all", "--json"},
        std::vector<std::string>{"analyze", "bargmann", "--point", "massive_spin",
                                 "--json", "--seed", "42"}}) {
    std::ostringstream out1, err1, out2, err2;
    int c1 = cli::run(args, out1, err1);
    int c2 = cli::run(args, out2, err2);
    ok &= expect(c1 == c2 && out1.str() == out2.str(),
                 "byte-identical JSON reports", why);
    ok &= expect(c1 == 0, "CLI verdicts hold", why);
  }
  // --samples 0 turns sampled verdicts into not-evaluated
  {
    std::ostringstream out, err;
    int code = cli::run({"check-pukanszky", "se3", "--pol", "trivial", "--json",
                         "--samples", "0"},
                        out, err);
    ok &= expect(code == 0, "samples=0 run holds", why);
    std::string body = out.str();
    ok &= expect(body.find("\"verdict\": \"not-evaluated\"") != std::string::npos,
                 "sampled verdicts read not-evaluated", why);
    ok &= expect(body.find("sampled-only") != std::string::npos,
                 "sampled-only caveat present", why);
    // no sampled-only check may claim holds at samples=0
    std::istringstream lines(body);
    // crude but effective: parse with the verdict field adjacency
    ok &= expect(body.find("holds\",\n      \"residual\"") == std::string::npos,
                 "no sampled residual claims holds", why);
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"criterion-01 fixture dimension tables (exact)", criterion_dimensions},
      {"criterion-02 annihilator-range identity, 100 seeded p per fixture",
       criterion_rangeoftau},
      {"criterion-03 exact-sequence and induction dimension laws",
       criterion_dimension_laws},
      {"criterion-04 isotropy and Lagrangian conditions for N and L",
       criterion_isotropy},
      {"criterion-05 splitting identity residual < 1e-9", criterion_splitting},
      {"criterion-06 polarization and Pukanszky verdicts", criterion_polarizations},
      {"criterion-07 reduction-theorem consistency", criterion_reduction},
      {"criterion-08 symplectic-induction checks", criterion_induction},
      {"criterion-09 connection transfer and positive control",
       criterion_connection},
      {"criterion-10 DSL fidelity and CLI determinism", criterion_dsl_cli},
  };
  int failures = 0;
  for (auto& c : criteria) {
    std::string why;
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::cout << "PASS " << c.name << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << c.name;
      if (!why.empty()) std::cout << "  [" << why << "]";
      std::cout << "\n";
    }
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria hold"
                              : "ACCEPTANCE: failures present")
            << "\n";
  return failures;
}
