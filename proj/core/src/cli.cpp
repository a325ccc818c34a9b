#include "orbitkit/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbitkit/catalog.hpp"
#include "orbitkit/dsl.hpp"
#include "orbitkit/induction.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/polarization.hpp"
#include "orbitkit/report.hpp"

namespace orbitkit::cli {

namespace {

constexpr const char* kConnectedness = "connectedness-assumed";
constexpr const char* kSampledOnly = "sampled-only";

struct LoadedInput {
  std::string display;
  std::string digest;
  bool is_fixture = false;
  std::optional<Fixture> fixture;
  dsl::Elaboration elab;  // valid when not a fixture
};

std::optional<LoadedInput> resolve_input(const std::string& input,
                                         std::ostream& err) {
  LoadedInput li;
  li.display = input;
  if (is_fixture_name(input)) {
    li.is_fixture = true;
    li.fixture = build_fixture(input);
    li.digest = fnv1a_hex(lie_source(input));
    return li;
  }
  std::ifstream f(input, std::ios::binary);
  if (!f) {
    err << "error: cannot open input '" << input << "'\n";
    return std::nullopt;
  }
  std::ostringstream body;
  body << f.rdbuf();
  li.digest = fnv1a_hex(body.str());
  li.elab = dsl::load(body.str());
  if (!li.elab.ok()) {
    for (const auto& d : li.elab.diagnostics) err << input << ": " << d.render() << "\n";
    return std::nullopt;
  }
  return li;
}

struct PointContext {
  SemidirectProduct sd;
  CovectorPoint n;
  std::string point_name;
};

std::optional<PointContext> find_point(const LoadedInput& li,
                                       const std::string& point,
                                       std::ostream& err) {
  PointContext ctx;
  ctx.point_name = point;
  if (li.is_fixture) {
    auto it = li.fixture->points.find(point);
    if (it == li.fixture->points.end()) {
      err << "error: fixture '" << li.fixture->name << "' has no point '" << point
          << "'\n";
      return std::nullopt;
    }
    ctx.sd = li.fixture->sd;
    ctx.n = it->second;
    return ctx;
  }
  auto it = li.elab.points.find(point);
  if (it == li.elab.points.end()) {
    err << "error: input declares no point '" << point << "'\n";
    return std::nullopt;
  }
  ctx.sd = li.elab.products.at(it->second.product);
  ctx.n = it->second.value;
  return ctx;
}

struct PolContext {
  SemidirectProduct sd;
  CovectorPoint n;
  ComplexSubspace h;
  std::string pol_name;
};

std::optional<PolContext> find_polarization(const LoadedInput& li,
                                            const std::string& pol,
                                            std::ostream& err) {
  PolContext ctx;
  ctx.pol_name = pol;
  if (li.is_fixture) {
    auto it = li.fixture->polarizations.find(pol);
    if (it == li.fixture->polarizations.end()) {
      err << "error: fixture '" << li.fixture->name << "' has no polarization '"
          << pol << "'\n";
      return std::nullopt;
    }
    ctx.sd = li.fixture->sd;
    ctx.n = li.fixture->points.at(li.fixture->polarization_point.at(pol));
    ctx.h = it->second;
    return ctx;
  }
  auto it = li.elab.polarizations.find(pol);
  if (it == li.elab.polarizations.end()) {
    err << "error: input declares no polarization '" << pol << "'\n";
    return std::nullopt;
  }
  ctx.sd = li.elab.products.at(it->second.product);
  ctx.n = li.elab.points.at(it->second.point).value;
  ctx.h = it->second.h;
  return ctx;
}

std::string verdict_of(TriVerdict v) { return to_string(v); }

CovectorPoint random_point(const SemidirectProduct& sd, Rng& rng) {
  CovectorPoint n;
  n.f = rng.rational_vector(sd.dim_k());
  n.p = rng.rational_vector(sd.dim_v());
  return n;
}

void add_exact_invariant_checks(Report& rep, const SemidirectProduct& sd,
                                const CovectorPoint& n, int samples,
                                std::uint64_t seed) {
  Rng rng(seed ^ 0x616e6c7aULL);
  bool range_ok = true, exact_seq_ok = true, fibration_ok = true,
       n_isotropic_ok = true, n_when_ok = true, n_sharp_ok = true,
       l_iff_ok = true;
  int rounds = samples > 0 ? samples : 1;
  for (int s = 0; s < rounds; ++s) {
    CovectorPoint m = (s == 0) ? n : random_point(sd, rng);
    if (!(little_algebra(sd, m.p).annihilator() == image_tau_star(sd, m.p)))
      range_ok = false;
    OrbitReport r = analyze_point(sd, m);
    if (r.dim_isotropy != r.dim_kernel_tau_star + r.dim_phi_stabilizer)
      exact_seq_ok = false;
    if (r.dim_orbit != r.dim_little_orbit + 2 * r.dim_base) fibration_ok = false;
    if (!r.n_isotropic) n_isotropic_ok = false;
    if (r.kp_in_kf && !r.n_lagrangian) n_when_ok = false;
    if (r.n_lagrangian != (r.dim_little_orbit == 0)) n_sharp_ok = false;
    if (r.l_lagrangian != r.f_closed_on_k) l_iff_ok = false;
  }
  rep.add_bool("annihilator-range-identity", range_ok,
               "annihilator of ker tau equals the image of tau*");
  rep.add_bool("exact-sequence-dimension-law", exact_seq_ok,
               "dim g_n = dim ker tau* + dim (k_p)_phi");
  rep.add_bool("little-orbit-fibration-law", fibration_ok,
               "dim O = dim Y + 2 dim Z");
  rep.add_bool("n-isotropic", n_isotropic_ok, "T N inside its orthogonal");
  rep.add_bool("n-lagrangian-when-cotangent-type", n_when_ok,
               "k_p inside k_f forces N Lagrangian", {kConnectedness});
  rep.add_bool("n-lagrangian-iff-little-orbit-trivial", n_sharp_ok,
               "N Lagrangian exactly when the little orbit is a point");
  rep.add_bool("l-lagrangian-iff-f-closed", l_iff_ok,
               "L Lagrangian exactly when f kills [k,k]");
}

void add_analyze_checks(Report& rep, const SemidirectProduct& sd,
                        const CovectorPoint& n, int samples, std::uint64_t seed,
                        const Tolerance& tol) {
  add_exact_invariant_checks(rep, sd, n, samples, seed);

  OrbitReport r = analyze_point(sd, n);
  CharacteristicDistribution cd = characteristic_distribution(sd, n);
  rep.add_field("char_dist_dim", std::to_string(cd.value.dim()));
  if (cd.precondition_kp_in_kf)
    rep.add_bool("char-dist-closed-form", cd.closed_form_matches,
                 "intersection equals {(0, A.q) : A in k_h}");

  FoliationLeaf leaf = foliation_leaf(sd, n);
  rep.add_bool("foliation-leaf-isotropic", leaf.isotropic,
               "leaf directions are KKS-isotropic");
  rep.add_bool("foliation-lagrangian-when-cotangent-type",
               !r.kp_in_kf || leaf.lagrangian,
               "cotangent type forces a Lagrangian foliation", {kConnectedness});

  bool section_ok = true;
  for (std::size_t i = 0; i < sd.dim_k() && section_ok; ++i)
    for (std::size_t j = i + 1; j < sd.dim_k(); ++j)
      if (!is_zero(section_pullback_residual(sd, n, unit_vector<Rat>(sd.dim_k(), i),
                                             unit_vector<Rat>(sd.dim_k(), j)))) {
        section_ok = false;
        break;
      }
  rep.add_bool("section-pullback-identity", section_ok,
               "pullback of the orbit form along the section equals the "
               "presymplectic base form");

  if (samples > 0) {
    Rng rng(seed ^ 0x73706c74ULL);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      GroupElemD g = sample_group_element(sd, rng);
      std::vector<Rat> xi = rng.rational_vector(sd.dim_g(), 4, 2);
      std::vector<Rat> eta = rng.rational_vector(sd.dim_g(), 4, 2);
      worst = std::max(worst, splitting_residual(sd, n, g, xi, eta, tol));
    }
    rep.add({"splitting-identity",
             worst <= tol.eps ? "holds" : "fails", worst,
             "product form of the orbit symplectic structure", {kSampledOnly}});
    if (r.kp_in_kf) {
      Rng rng2(seed ^ 0x76617273ULL);
      double vr = varisotropy_residual(sd, n, rng2, samples, tol);
      rep.add({"varisotropy", vr <= tol.eps ? "holds" : "fails", vr,
               "stabilizer moves of h stay inside the image of tau*",
               {kSampledOnly, kConnectedness}});
    }
  } else {
    rep.add({"splitting-identity", "not-evaluated", std::nullopt,
             "product form of the orbit symplectic structure", {kSampledOnly}});
    if (r.kp_in_kf)
      rep.add({"varisotropy", "not-evaluated", std::nullopt,
               "stabilizer moves of h stay inside the image of tau*",
               {kSampledOnly, kConnectedness}});
  }
}

void fill_orbit_fields(Report& rep, const OrbitReport& r) {
  rep.add_field("orbit_dim", std::to_string(r.dim_orbit));
  rep.add_field("base_dim", std::to_string(r.dim_base));
  rep.add_field("little_orbit_dim", std::to_string(r.dim_little_orbit));
  rep.add_field("fibre_dim", std::to_string(r.dim_fibre));
  rep.add_field("l_dim", std::to_string(r.dim_L));
  rep.add_field("n_dim", std::to_string(r.dim_N));
  rep.add_field("isotropy_dim", std::to_string(r.dim_isotropy));
  rep.add_field("little_algebra_dim", std::to_string(r.dim_little_algebra));
  rep.add_field("phi_stabilizer_dim", std::to_string(r.dim_phi_stabilizer));
  rep.add_field("kernel_tau_star_dim", std::to_string(r.dim_kernel_tau_star));
  rep.add_field("kp_in_kf", r.kp_in_kf ? "true" : "false");
  rep.add_field("n_lagrangian", r.n_lagrangian ? "true" : "false");
  rep.add_field("l_lagrangian", r.l_lagrangian ? "true" : "false");
  rep.add_field("f_closed_on_k", r.f_closed_on_k ? "true" : "false");
  rep.add_field("f_closed_on_kp", r.f_closed_on_kp ? "true" : "false");
}

void add_polarization_checks(Report& rep, const SemidirectProduct& sd,
                             const CovectorPoint& n, const ComplexSubspace& h,
                             const SamplingOptions& opts) {
  PolarizationAxioms ax = check_polarization(sd, n, h, opts);
  rep.add_bool("axiom-subalgebra", ax.is_subalgebra, "h closed under the bracket");
  rep.add_bool("axiom-contains-isotropy", ax.contains_isotropy,
               "complexified isotropy algebra inside h");
  rep.add_bool("axiom-dimension", ax.dimension_ok,
               "dim h = (dim g + dim g_n)/2");
  rep.add_bool("axiom-isotropic", ax.isotropic, "n vanishes on [h,h]");
  rep.add_bool("axiom-invariant-exact", ax.invariant_exact,
               "[g_n, h] inside h", {kConnectedness});
  rep.add({"axiom-invariant-sampled", verdict_of(ax.invariant_sampled),
           ax.invariant_sampled == TriVerdict::not_evaluated
               ? std::optional<double>()
               : std::optional<double>(ax.invariant_residual),
           "Ad(exp g_n) transport stays inside h", {kSampledOnly}});
  rep.add_bool("axiom-sum-subalgebra", ax.sum_subalgebra,
               "h + conj(h) closed under the bracket");
  rep.add_field("polarization_passes", ax.passes() ? "true" : "false");

  PolarizationCandidate cand = analyze_candidate(sd, h);
  rep.add_field("semidirect_form", cand.has_semidirect_form ? "true" : "false");
  rep.add_field("h_dim", std::to_string(h.dim()));
  rep.add_field("d_dim", std::to_string(cand.d.dim()));
  rep.add_field("e_dim", std::to_string(cand.e.dim()));
  if (cand.has_semidirect_form) {
    rep.add_field("a_dim", std::to_string(cand.a.dim()));
    rep.add_field("p_alg_dim", std::to_string(cand.p_alg.dim()));
    rep.add_field("q_alg_dim", std::to_string(cand.q_alg.dim()));
    // Dimension identity of the split form, asserted when h passes.
    if (ax.passes()) {
      LittleGroupPoint lgp = little_group_point(sd, n);
      bool dim_eq = 2 * cand.a.dim() ==
                    lgp.little.carrier.dim() + lgp.stabilizer_in_kp.dim();
      rep.add_bool("split-dimension-identity", dim_eq,
                   "2 dim a = dim k_p + dim (k_p)_phi");
    }
  }
}

void add_pukanszky_checks(Report& rep, const SemidirectProduct& sd,
                          const CovectorPoint& n, const ComplexSubspace& h,
                          const SamplingOptions& opts) {
  PukanszkyResult puk = pukanszky_check(sd, n, h, opts);
  rep.add_bool("d-e-subalgebras", puk.d_e_are_subalgebras,
               "real forms d and e close under the bracket");
  Subspace dperp = symplectic_orthogonal(sd, n, puk.d);
  rep.add_bool("d-perp-equals-e", dperp == puk.e,
               "symplectic orthogonal of d is e");
  rep.add_bool("pukanszky-infinitesimal", puk.infinitesimal,
               "tangent span of the D-moves fills the e-annihilator");
  rep.add({"pukanszky-sampled-membership", verdict_of(puk.sampled_membership),
           puk.sampled_membership == TriVerdict::not_evaluated
               ? std::optional<double>()
               : std::optional<double>(puk.membership_residual),
           "sampled D-moves of n stay in the affine plane", {kSampledOnly}});
  rep.add({"pukanszky-sampled-span", verdict_of(puk.sampled_span), std::nullopt,
           "sampled displacements span the e-annihilator", {kSampledOnly}});
  rep.add({"pukanszky-orbit-closedness", verdict_of(puk.orbit_closed),
           std::nullopt, "topological variant, outside desk scale", {}});
  rep.add_field("pukanszky_holds", puk.holds() ? "true" : "false");
  rep.add_field("e_ann_dim", std::to_string(puk.e_annihilator.dim()));

  ReductionCheck rc = reduction_theorem_check(sd, n, h, opts);
  if (rc.has_semidirect_form) {
    rep.add_bool("reduction-axioms-consistent", rc.axioms_consistent,
                 "polarization verdicts agree on g and on k_p");
    rep.add_bool("reduction-pukanszky-consistent", rc.pukanszky_consistent,
                 "Pukanszky verdicts agree on g and on k_p");
    rep.add_bool("reduction-odot-containment", rc.odot_in_q_annihilator,
                 "p (.) V inside the k_p-annihilator inside the q-annihilator");
    rep.add({"reduction-restriction-equivalence",
             verdict_of(rc.restriction_equivalence), std::nullopt,
             "membership transfers through the restriction to k_p",
             {kSampledOnly}});
    rep.add_field("e_ann_reduced_dim",
                  std::to_string(rc.little_puk.e_annihilator.dim()));

    BundleCheck bc = pukanszky_bundle_check(sd, n, h, opts);
    rep.add_bool("bundle-f-dim", bc.f_matches_orbit,
                 "dim(G/D) + dim e-ann equals the orbit dimension");
    rep.add_bool("bundle-f-reduced-dim", bc.f_reduced_matches,
                 "reduced bundle dimension equals the little orbit dimension");
    rep.add_bool("bundle-projection-exact", bc.projection_exact,
                 "restriction maps the q-annihilator onto the reduced one");
    rep.add({"bundle-projection-sampled", verdict_of(bc.projection_sampled),
             std::nullopt, "fibre transport commutes with the restriction",
             {kSampledOnly}});
    rep.add_field("e_mod_d_dim", std::to_string(bc.dim_e_mod_d));
    rep.add_field("t_ge_dim", std::to_string(bc.dim_t_ge));
  } else {
    rep.add_bool("reduction-split-form", false,
                 "candidate does not contain the full V part");
  }
}

void add_induction_checks(Report& rep, const SemidirectProduct& sd,
                          const CovectorPoint& n, const SamplingOptions& opts,
                          const ExactSamplers* exact) {
  InductionSetup setup = make_induction_setup(sd, n);
  rep.add_bool("induction-subalgebra-closed", setup.closed,
               "k_p (+) V closes under the bracket");
  rep.add_field("little_orbit_dim", std::to_string(setup.dim_m));
  rep.add_field("coset_dim", std::to_string(setup.dim_gh));

  Rng rng(opts.seed ^ 0x696e6475ULL);
  if (opts.samples > 0) {
    ZeroLevelSetCheck z = zero_level_set_check(sd, setup, rng, opts.samples, exact);
    rep.add_bool("zero-level-positives", z.positives_zero,
                 "characterized tuples evaluate to zero");
    rep.add_bool("zero-level-negatives", z.negatives_nonzero,
                 "perturbed tuples are detected");
    rep.add_bool("zero-level-regular-rank", z.regular_value_rank,
                 "differential has full rank at the zero set");
    InducedOrbitCheck ic =
        induced_orbit_theorem_check(sd, setup, rng, opts.samples, opts.tol, exact);
    rep.add_bool("induced-dimension-law", ic.dimension_ok,
                 "dim O = dim M + 2 dim(G/G_p)");
    rep.add_bool("induced-point-form", ic.point_form_ok,
                 "quotient representatives are coadjoint images of n");
    rep.add_bool("induced-h-invariance", ic.h_invariance_ok,
                 "representatives constant on G_p-orbits of the zero set");
    rep.add({"induced-form-kks", verdict_of(ic.form_verdict), ic.form_residual,
             "induced form agrees with the orbit form", {kSampledOnly}});
  } else {
    InducedOrbitCheck ic =
        induced_orbit_theorem_check(sd, setup, rng, 0, opts.tol, exact);
    rep.add_bool("induced-dimension-law", ic.dimension_ok,
                 "dim O = dim M + 2 dim(G/G_p)");
    for (const char* name :
         {"zero-level-positives", "zero-level-negatives",
          "zero-level-regular-rank", "induced-point-form",
          "induced-h-invariance", "induced-form-kks"})
      rep.add({name, "not-evaluated", std::nullopt, "", {kSampledOnly}});
  }
}

Report make_report(const std::string& command, const LoadedInput& li,
                   std::uint64_t seed, double tol, int samples) {
  Report rep;
  rep.command = command;
  rep.input = li.display;
  rep.digest = li.digest;
  rep.seed = seed;
  rep.tol = tol;
  rep.samples = samples;
  return rep;
}

int finish(const Report& rep, bool json, std::ostream& out) {
  out << (json ? rep.to_json() : rep.to_text());
  return rep.all_hold() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"coadjoint-orbit checks for semidirect products"};
  app.name("orbitkit");
  bool json = false;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int samples = 100;
  app.add_flag("--json", json, "emit a JSON report");
  app.add_option("--seed", seed, "sampling seed (default 0)");
  app.add_option("--tol", tol, "numeric tolerance (default 1e-9)");
  app.add_option("--samples", samples,
                 "sample count; 0 disables sampled verdicts (default 100)");
  app.fallthrough();

  std::string input, point, pol, fixture;
  bool run_all = false;

  auto* analyze = app.add_subcommand("analyze", "orbit geometry of one point");
  analyze->add_option("input", input, ".lie file or fixture name")->required();
  analyze->add_option("--point", point, "point name")->required();

  auto* checkpol =
      app.add_subcommand("check-polarization", "polarization axioms");
  checkpol->add_option("input", input, ".lie file or fixture name")->required();
  checkpol->add_option("--pol", pol, "polarization name")->required();

  auto* checkpuk =
      app.add_subcommand("check-pukanszky", "Pukanszky condition and reduction");
  checkpuk->add_option("input", input, ".lie file or fixture name")->required();
  checkpuk->add_option("--pol", pol, "polarization name")->required();

  auto* induce =
      app.add_subcommand("induce", "symplectic induction bookkeeping");
  induce->add_option("input", input, ".lie file or fixture name")->required();
  induce->add_option("--point", point, "point name")->required();

  auto* examples = app.add_subcommand("examples", "built-in worked examples");
  examples->add_option("fixture", fixture, "se3 | galilei | bargmann")->required();
  examples->add_flag("--all", run_all, "run the full check battery");

  auto* validate = app.add_subcommand("validate", "parse and validate a .lie file");
  validate->add_option("file", input, ".lie file")->required();

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("orbitkit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  SamplingOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  opts.tol = Tolerance{tol};

  try {
    if (validate->parsed()) {
      std::ifstream f(input, std::ios::binary);
      if (!f) {
        err << "error: cannot open input '" << input << "'\n";
        return 2;
      }
      std::ostringstream body;
      body << f.rdbuf();
      dsl::Elaboration el = dsl::load(body.str());
      if (!el.ok()) {
        for (const auto& d : el.diagnostics) err << input << ": " << d.render() << "\n";
        return 2;
      }
      if (json) {
        Report rep;
        rep.command = "validate";
        rep.input = input;
        rep.digest = fnv1a_hex(body.str());
        rep.seed = seed;
        rep.tol = tol;
        rep.samples = samples;
        rep.add_field("algebras", std::to_string(el.algebras.size()));
        rep.add_field("products", std::to_string(el.products.size()));
        rep.add_field("points", std::to_string(el.points.size()));
        rep.add_field("polarizations", std::to_string(el.polarizations.size()));
        out << rep.to_json();
      } else {
        out << input << ": OK (" << el.algebras.size() << " algebras, "
            << el.products.size() << " products, " << el.points.size()
            << " points, " << el.polarizations.size() << " polarizations)\n";
      }
      return 0;
    }

    if (examples->parsed()) {
      if (!is_fixture_name(fixture)) {
        err << "error: unknown fixture '" << fixture << "'\n";
        return 2;
      }
      Fixture fix = build_fixture(fixture);
      Report rep;
      rep.command = "examples";
      rep.input = fixture;
      rep.digest = fnv1a_hex(lie_source(fixture));
      rep.seed = seed;
      rep.tol = tol;
      rep.samples = samples;
      for (const auto& row : fix.expected) {
        std::string got = computed_value(fix, row, opts);
        CheckRecord rec;
        rec.name = "expected/" + row.point + "/" + row.check;
        rec.verdict = (got == row.value) ? "holds" : "fails";
        rec.source = std::string(row.stated ? "stated: " : "derived: ") + row.source;
        rep.add(rec);
        if (row.check == "orbit_dim" && fix.points.count(row.point))
          rep.add_field("orbit_dim", got);
      }
      if (run_all) {
        for (const auto& pt : fix.point_order) {
          Report local;
          add_analyze_checks(local, fix.sd, fix.points.at(pt), samples, seed,
                             opts.tol);
          Rng srng(seed ^ 0x65786163ULL);
          ExactSamplers exact = exact_samplers(fix, pt, srng, 8);
          add_induction_checks(local, fix.sd, fix.points.at(pt), opts, &exact);
          for (auto& c : local.checks) {
            c.name = pt + "/" + c.name;
            rep.add(c);
          }
        }
        for (const auto& pn : fix.polarization_order) {
          Report local;
          const CovectorPoint& np = fix.points.at(fix.polarization_point.at(pn));
          add_polarization_checks(local, fix.sd, np, fix.polarizations.at(pn), opts);
          add_pukanszky_checks(local, fix.sd, np, fix.polarizations.at(pn), opts);
          for (auto& c : local.checks) {
            c.name = pn + "/" + c.name;
            rep.add(c);
          }
        }
      }
      return finish(rep, json, out);
    }

    auto li = resolve_input(input, err);
    if (!li) return 2;

    if (analyze->parsed()) {
      auto ctx = find_point(*li, point, err);
      if (!ctx) return 2;
      Report rep = make_report("analyze", *li, seed, tol, samples);
      rep.add_field("point", ctx->point_name);
      fill_orbit_fields(rep, analyze_point(ctx->sd, ctx->n));
      add_analyze_checks(rep, ctx->sd, ctx->n, samples, seed, opts.tol);
      return finish(rep, json, out);
    }
    if (checkpol->parsed()) {
      auto ctx = find_polarization(*li, pol, err);
      if (!ctx) return 2;
      Report rep = make_report("check-polarization", *li, seed, tol, samples);
      rep.add_field("polarization", ctx->pol_name);
      add_polarization_checks(rep, ctx->sd, ctx->n, ctx->h, opts);
      return finish(rep, json, out);
    }
    if (checkpuk->parsed()) {
      auto ctx = find_polarization(*li, pol, err);
      if (!ctx) return 2;
      Report rep = make_report("check-pukanszky", *li, seed, tol, samples);
      rep.add_field("polarization", ctx->pol_name);
      add_pukanszky_checks(rep, ctx->sd, ctx->n, ctx->h, opts);
      return finish(rep, json, out);
    }
    if (induce->parsed()) {
      auto ctx = find_point(*li, point, err);
      if (!ctx) return 2;
      Report rep = make_report("induce", *li, seed, tol, samples);
      rep.add_field("point", ctx->point_name);
      if (li->is_fixture) {
        Rng srng(seed ^ 0x65786163ULL);
        ExactSamplers exact = exact_samplers(*li->fixture, point, srng, 8);
        add_induction_checks(rep, ctx->sd, ctx->n, opts, &exact);
      } else {
        add_induction_checks(rep, ctx->sd, ctx->n, opts, nullptr);
      }
      return finish(rep, json, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace orbitkit::cli
