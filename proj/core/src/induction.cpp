#include "orbitkit/induction.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitkit {

namespace {

QMatrix restriction_matrix(const Subspace& carrier, std::size_t ambient) {
  QMatrix r(carrier.dim(), ambient);
  for (std::size_t a = 0; a < carrier.dim(); ++a)
    r.set_row(a, carrier.basis_vector(a));
  return r;
}

/// A K_p-element of G reinterpreted as a group element of G_p = K_p x V,
/// acting on k_p in the canonical little basis.
GroupElemQ reinterpret_in_little(const InductionSetup& setup,
                                 const GroupElemQ& elem) {
  const Subspace& kp = setup.lgp.little.carrier;
  const std::size_t dkp = kp.dim();
  QMatrix carrier_t = kp.basis().transpose();
  QMatrix ad_little(dkp, dkp);
  for (std::size_t a = 0; a < dkp; ++a) {
    std::vector<Rat> moved = elem.ad.apply(kp.basis_vector(a));
    auto coords = carrier_t.solve(moved);
    if (!coords)
      throw std::invalid_argument("group element does not preserve k_p");
    for (std::size_t r = 0; r < dkp; ++r) ad_little(r, a) = (*coords)[r];
  }
  return group_from_k_action(ad_little, elem.rho, elem.v);
}

GroupElemQ pick_kp_element(const ExactSamplers* exact, Rng& rng,
                           const SemidirectProduct& sd) {
  if (exact && !exact->kp_elements.empty()) {
    std::size_t i = static_cast<std::size_t>(
        rng.uniform(0, static_cast<long>(exact->kp_elements.size()) - 1));
    return exact->kp_elements[i];
  }
  return group_identity(sd);
}

GroupElemQ pick_g_element(const ExactSamplers* exact, Rng& rng,
                          const SemidirectProduct& sd) {
  GroupElemQ g = group_identity(sd);
  if (exact && !exact->g_elements.empty()) {
    std::size_t i = static_cast<std::size_t>(
        rng.uniform(0, static_cast<long>(exact->g_elements.size()) - 1));
    g = exact->g_elements[i];
  }
  g.v = g.v + g.rho.apply(rng.rational_vector(sd.dim_v(), 3, 2));
  return g;
}

}  // namespace

InductionSetup make_induction_setup(const SemidirectProduct& sd,
                                    const CovectorPoint& n) {
  InductionSetup setup;
  setup.n = n;
  setup.lgp = little_group_point(sd, n);
  const Subspace& kp = setup.lgp.little.carrier;

  QMatrix rows(kp.dim() + sd.dim_v(), sd.dim_g());
  for (std::size_t a = 0; a < kp.dim(); ++a) {
    std::vector<Rat> v = kp.basis_vector(a);
    for (std::size_t i = 0; i < sd.dim_k(); ++i) rows(a, i) = v[i];
  }
  for (std::size_t s = 0; s < sd.dim_v(); ++s)
    rows(kp.dim() + s, sd.dim_k() + s) = Rat(1);
  setup.h_sub = Subspace::span(sd.dim_g(), rows);
  setup.closed = subalgebra_structure(sd.g(), setup.h_sub).closed;

  Representation rho_little(kp.dim(), sd.dim_v());
  for (std::size_t a = 0; a < kp.dim(); ++a)
    rho_little.set_matrix(a, sd.rho().act(kp.basis_vector(a)));
  setup.little_sd = SemidirectProduct(setup.lgp.little.algebra, rho_little);

  setup.dim_m = kp.dim() - setup.lgp.stabilizer_in_kp.dim();
  setup.dim_gh = sd.dim_k() - kp.dim();
  return setup;
}

LittlePoint momentum_value(const SemidirectProduct& sd,
                           const InductionSetup& setup, const LittlePoint& m,
                           const std::vector<Rat>& z_flat) {
  const Subspace& kp = setup.lgp.little.carrier;
  std::vector<Rat> z1(z_flat.begin(), z_flat.begin() + sd.dim_k());
  std::vector<Rat> z2(z_flat.begin() + sd.dim_k(), z_flat.end());
  LittlePoint out;
  out.phi = m.phi - restriction_matrix(kp, sd.dim_k()).apply(z1);
  out.p = m.p - z2;
  return out;
}

ZeroLevelSetCheck zero_level_set_check(const SemidirectProduct& sd,
                                       const InductionSetup& setup, Rng& rng,
                                       int samples, const ExactSamplers* exact) {
  ZeroLevelSetCheck out;
  out.samples = samples;
  out.positives_zero = true;
  out.negatives_nonzero = true;
  out.regular_value_rank = true;
  const Subspace& kp = setup.lgp.little.carrier;
  const std::size_t dkp = kp.dim();
  QMatrix restrict = restriction_matrix(kp, sd.dim_k());

  for (int s = 0; s < samples; ++s) {
    GroupElemQ k = pick_kp_element(exact, rng, sd);
    CovectorPoint moved = coadjoint(sd, k, setup.n);
    if (!(moved.p == setup.n.p))
      throw std::invalid_argument("exact sampler element does not stabilize p");
    std::vector<Rat> v = rng.rational_vector(sd.dim_v());
    std::vector<Rat> z1 = moved.f + odot(sd, setup.n.p, v);
    std::vector<Rat> z = sd.assemble(z1, setup.n.p);
    LittlePoint m{restrict.apply(moved.f), setup.n.p};
    LittlePoint j = momentum_value(sd, setup, m, z);
    if (!all_zero(j.phi) || !all_zero(j.p)) out.positives_zero = false;

    // Perturbations off the characterized set must be detected.
    Rat eps = rat(rng.uniform(1, 5), rng.uniform(1, 3));
    if (dkp > 0) {
      std::size_t which =
          static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dkp) - 1));
      std::vector<Rat> psi = kp.basis_vector(which);  // restricts nontrivially
      std::vector<Rat> z1_bad = z1 + scaled(psi, eps);
      LittlePoint j_bad =
          momentum_value(sd, setup, m, sd.assemble(z1_bad, setup.n.p));
      if (all_zero(j_bad.phi) && all_zero(j_bad.p)) out.negatives_nonzero = false;
    }
    std::vector<Rat> p_bad = setup.n.p;
    p_bad[static_cast<std::size_t>(
        rng.uniform(0, static_cast<long>(sd.dim_v()) - 1))] += eps;
    LittlePoint j_bad2 = momentum_value(sd, setup, m, sd.assemble(z1, p_bad));
    if (all_zero(j_bad2.phi) && all_zero(j_bad2.p)) out.negatives_nonzero = false;

    // Differential of J at the zero-set point: the z-slot contributes minus
    // the restriction g* -> g_p*, the m-slot the little coadjoint directions.
    const std::size_t rows_n = dkp + sd.dim_v();
    QMatrix jac(rows_n, sd.dim_g() + setup.little_sd.dim_g());
    for (std::size_t c = 0; c < sd.dim_g(); ++c) {
      std::vector<Rat> dz = unit_vector<Rat>(sd.dim_g(), c);
      std::vector<Rat> dz1(dz.begin(), dz.begin() + sd.dim_k());
      std::vector<Rat> dz2(dz.begin() + sd.dim_k(), dz.end());
      std::vector<Rat> dphi = restrict.apply(dz1);
      for (std::size_t r = 0; r < dkp; ++r) jac(r, c) = -dphi[r];
      for (std::size_t r = 0; r < sd.dim_v(); ++r) jac(dkp + r, c) = -dz2[r];
    }
    CovectorPoint m_pt;
    m_pt.f = m.phi;
    m_pt.p = m.p;
    for (std::size_t u = 0; u < setup.little_sd.dim_g(); ++u) {
      std::vector<Rat> dir = fundamental_field(
          setup.little_sd, unit_vector<Rat>(setup.little_sd.dim_g(), u), m_pt);
      for (std::size_t r = 0; r < rows_n; ++r) jac(r, sd.dim_g() + u) = dir[r];
    }
    if (jac.rank() != rows_n) out.regular_value_rank = false;
  }
  return out;
}

InducedOrbitCheck induced_orbit_theorem_check(const SemidirectProduct& sd,
                                              const InductionSetup& setup,
                                              Rng& rng, int samples,
                                              const Tolerance& tol,
                                              const ExactSamplers* exact) {
  InducedOrbitCheck out;
  OrbitReport orbit = analyze_point(sd, setup.n);
  out.dimension_ok = (orbit.dim_orbit == setup.dim_m + 2 * setup.dim_gh);
  out.point_form_ok = true;
  out.h_invariance_ok = true;
  if (samples <= 0) return out;

  QMatrix restrict =
      restriction_matrix(setup.lgp.little.carrier, sd.dim_k());
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    // Exact quotient-representative identity: the zero-set tuple built from
    // (k in K_p, v) maps under Coad(ghat) to the point Coad(l, u) n with
    // l = khat k and u = khat.v + vhat; both routes are computed
    // independently and compared exactly.
    GroupElemQ k = pick_kp_element(exact, rng, sd);
    GroupElemQ ghat = pick_g_element(exact, rng, sd);
    std::vector<Rat> v = rng.rational_vector(sd.dim_v(), 3, 2);
    CovectorPoint moved = coadjoint(sd, k, setup.n);
    CovectorPoint z;
    z.f = moved.f + odot(sd, setup.n.p, v);
    z.p = setup.n.p;
    CovectorPoint rep = coadjoint(sd, ghat, z);

    GroupElemQ l;
    l.ad = ghat.ad * k.ad;
    l.rho = ghat.rho * k.rho;
    l.v = ghat.rho.apply(v) + ghat.v;
    CovectorPoint rep2 = coadjoint(sd, l, setup.n);
    if (!(rep.f == rep2.f) || !(rep.p == rep2.p)) out.point_form_ok = false;

    // G_p-invariance of the representative: translate the tuple by
    // h = (kq, u) in G_p and recompute.
    GroupElemQ kq = pick_kp_element(exact, rng, sd);
    GroupElemQ h = kq;
    h.v = rng.rational_vector(sd.dim_v(), 3, 2);
    CovectorPoint z_h = coadjoint(sd, h, z);
    GroupElemQ gh = group_compose(ghat, group_inverse(h));
    CovectorPoint rep3 = coadjoint(sd, gh, z_h);
    if (!(rep.f == rep3.f) || !(rep.p == rep3.p)) out.h_invariance_ok = false;

    // The H-translated tuple stays in the zero level set: the m-slot moves by
    // the little coadjoint action, the z-slot by Coad(h).
    GroupElemQ h_little = reinterpret_in_little(setup, h);
    CovectorPoint m_pt;
    m_pt.f = restrict.apply(moved.f);
    m_pt.p = setup.n.p;
    CovectorPoint m_moved = coadjoint(setup.little_sd, h_little, m_pt);
    LittlePoint j = momentum_value(sd, setup, {m_moved.f, m_moved.p},
                                   z_h.flat());
    if (!all_zero(j.phi) || !all_zero(j.p)) out.h_invariance_ok = false;

    // omega_ind against the KKS value: the induced route evaluates the form
    // at the base point on Ad(g^{-1})-transported arguments.
    GroupElemD g0 = sample_group_element(sd, rng);
    std::vector<Rat> xi = rng.rational_vector(sd.dim_g(), 4, 2);
    std::vector<Rat> eta = rng.rational_vector(sd.dim_g(), 4, 2);
    std::vector<double> m = coadjoint(sd, g0, to_double(setup.n.flat()), tol);
    std::vector<double> brg = to_double(sd.g().bracket(xi, eta));
    double lhs = 0.0;
    for (std::size_t u = 0; u < sd.dim_g(); ++u) lhs -= m[u] * brg[u];

    GroupElemD g0i = group_inverse(g0, tol);
    std::vector<double> xi_t = adjoint(sd, g0i, to_double(xi));
    std::vector<double> eta_t = adjoint(sd, g0i, to_double(eta));
    std::vector<double> br(sd.dim_g(), 0.0);
    for (std::size_t i = 0; i < sd.dim_g(); ++i)
      for (std::size_t j2 = 0; j2 < sd.dim_g(); ++j2) {
        double f = xi_t[i] * eta_t[j2];
        if (f == 0.0) continue;
        for (std::size_t t = 0; t < sd.dim_g(); ++t) {
          double c = sd.g().c(i, j2, t).get_d();
          if (c != 0.0) br[t] += f * c;
        }
      }
    std::vector<double> nd = to_double(setup.n.flat());
    double rhs = 0.0;
    for (std::size_t u = 0; u < sd.dim_g(); ++u) rhs -= nd[u] * br[u];
    worst = std::max(worst, std::fabs(lhs - rhs));
  }
  out.form_residual = worst;
  out.form_verdict = worst <= tol.eps ? TriVerdict::holds : TriVerdict::fails;
  return out;
}

ConnectionSpec make_connection_spec(const SemidirectProduct& sd,
                                    const Subspace& p_alg,
                                    const Subspace& complement) {
  ConnectionSpec spec;
  spec.p_alg = p_alg;
  spec.complement = complement;
  const std::size_t dk = sd.dim_k();
  spec.direct_sum = (p_alg.dim() + complement.dim() == dk) &&
                    (p_alg.intersect(complement).dim() == 0);
  if (!spec.direct_sum)
    throw std::invalid_argument("connection complement is not a direct complement");

  spec.ad_invariant = true;
  for (std::size_t a = 0; a < p_alg.dim(); ++a)
    for (std::size_t b = 0; b < complement.dim(); ++b)
      if (!complement.contains(
              sd.k().bracket(p_alg.basis_vector(a), complement.basis_vector(b))))
        spec.ad_invariant = false;

  // Projection onto p along the complement.
  QMatrix cols(dk, dk);
  for (std::size_t a = 0; a < p_alg.dim(); ++a)
    for (std::size_t i = 0; i < dk; ++i) cols(i, a) = p_alg.basis_vector(a)[i];
  for (std::size_t b = 0; b < complement.dim(); ++b)
    for (std::size_t i = 0; i < dk; ++i)
      cols(i, p_alg.dim() + b) = complement.basis_vector(b)[i];
  auto inv = cols.inverse();
  if (!inv) throw std::logic_error("degenerate basis in connection spec");
  QMatrix sel(dk, dk);
  for (std::size_t a = 0; a < p_alg.dim(); ++a) sel(a, a) = Rat(1);
  spec.projector_p = cols * sel * (*inv);
  return spec;
}

ConnectionValue connection_value(const SemidirectProduct& sd,
                                 const ConnectionSpec& spec, const GroupElemD& g,
                                 const std::vector<double>& zeta,
                                 const std::vector<double>& w,
                                 const Tolerance& tol) {
  auto adi = inverse_lu(g.ad, tol);
  auto rhoi = inverse_lu(g.rho, tol);
  if (!adi || !rhoi) throw std::invalid_argument("singular group element");
  DMatrix proj = to_double(spec.projector_p);
  std::vector<double> b = proj.apply(adi->apply(zeta));
  std::vector<double> vertical = g.ad.apply(b);
  std::vector<double> zx(zeta.size());
  for (std::size_t i = 0; i < zeta.size(); ++i) zx[i] = zeta[i] - vertical[i];
  DMatrix act(sd.dim_v(), sd.dim_v());
  for (std::size_t i = 0; i < sd.dim_k(); ++i)
    act = act + to_double(sd.rho().matrix(i)).scaled(zx[i]);
  std::vector<double> moved = act.apply(g.v);
  std::vector<double> delta_arg(sd.dim_v());
  for (std::size_t r = 0; r < sd.dim_v(); ++r) delta_arg[r] = w[r] - moved[r];
  ConnectionValue out;
  out.b = b;
  out.delta = rhoi->apply(delta_arg);
  return out;
}

ConnectionTransferCheck connection_transfer_check(const SemidirectProduct& sd,
                                                  const ConnectionSpec& spec,
                                                  Rng& rng, int samples,
                                                  const Tolerance& tol) {
  ConnectionTransferCheck out;
  out.complement_invariant = spec.ad_invariant;
  const std::size_t dk = sd.dim_k(), dv = sd.dim_v();
  double repro = 0.0, equiv = 0.0, pull = 0.0;
  for (int s = 0; s < samples; ++s) {
    GroupElemD g = sample_group_element(sd, rng);

    // (a) reproduction on fundamental fields of the right D-action.
    std::vector<double> bp(dk, 0.0);
    for (std::size_t a = 0; a < spec.p_alg.dim(); ++a) {
      double c = rng.uniform_real(-1.0, 1.0);
      std::vector<double> bv = to_double(spec.p_alg.basis_vector(a));
      for (std::size_t i = 0; i < dk; ++i) bp[i] += c * bv[i];
    }
    std::vector<double> bb(dv);
    for (auto& x : bb) x = rng.uniform_real(-1.0, 1.0);
    std::vector<double> zeta = g.ad.apply(bp);
    std::vector<double> w = g.rho.apply(bb);
    ConnectionValue cv = connection_value(sd, spec, g, zeta, w, tol);
    for (std::size_t i = 0; i < dk; ++i)
      repro = std::max(repro, std::fabs(cv.b[i] - bp[i]));
    for (std::size_t r = 0; r < dv; ++r)
      repro = std::max(repro, std::fabs(cv.delta[r] - bb[r]));

    // (b) equivariance under right translation by h = (l, u) in D.
    std::vector<double> zeta2(dk), w2(dv);
    for (auto& x : zeta2) x = rng.uniform_real(-1.0, 1.0);
    for (auto& x : w2) x = rng.uniform_real(-1.0, 1.0);
    std::vector<Rat> pl(dk, Rat(0));
    for (std::size_t a = 0; a < spec.p_alg.dim(); ++a)
      pl = pl + scaled(spec.p_alg.basis_vector(a), rng.rational(3, 2));
    GroupElemD h =
        group_exp(sd, sd.assemble(pl, std::vector<Rat>(dv, Rat(0))), 1.0);
    GroupElemD trans;
    trans.ad = DMatrix::identity(dk);
    trans.rho = DMatrix::identity(dv);
    trans.v = to_double(rng.rational_vector(dv, 3, 2));
    h = group_compose(h, trans);

    GroupElemD gh = group_compose(g, h);
    std::vector<double> ku = g.rho.apply(h.v);
    DMatrix act(dv, dv);
    for (std::size_t i = 0; i < dk; ++i)
      act = act + to_double(sd.rho().matrix(i)).scaled(zeta2[i]);
    std::vector<double> w_t = w2 + act.apply(ku);
    ConnectionValue lhs = connection_value(sd, spec, gh, zeta2, w_t, tol);

    ConnectionValue c_here = connection_value(sd, spec, g, zeta2, w2, tol);
    std::vector<double> cd(dk + dv);
    for (std::size_t i = 0; i < dk; ++i) cd[i] = c_here.b[i];
    for (std::size_t r = 0; r < dv; ++r) cd[dk + r] = c_here.delta[r];
    GroupElemD hi = group_inverse(h, tol);
    std::vector<double> rhs = adjoint(sd, hi, cd);
    for (std::size_t i = 0; i < dk; ++i)
      equiv = std::max(equiv, std::fabs(lhs.b[i] - rhs[i]));
    for (std::size_t r = 0; r < dv; ++r)
      equiv = std::max(equiv, std::fabs(lhs.delta[r] - rhs[dk + r]));

    // (c) pullback to the K-slice reproduces the base connection.
    GroupElemD k_only = g;
    k_only.v.assign(dv, 0.0);
    ConnectionValue pb = connection_value(sd, spec, k_only, zeta2,
                                          std::vector<double>(dv, 0.0), tol);
    auto adi = inverse_lu(g.ad, tol);
    std::vector<double> a_direct =
        to_double(spec.projector_p).apply(adi->apply(zeta2));
    for (std::size_t i = 0; i < dk; ++i)
      pull = std::max(pull, std::fabs(pb.b[i] - a_direct[i]));
    for (std::size_t r = 0; r < dv; ++r)
      pull = std::max(pull, std::fabs(pb.delta[r]));
  }
  out.reproduction_residual = repro;
  out.equivariance_residual = equiv;
  out.pullback_residual = pull;
  return out;
}

namespace {

SymmetricSpaceCheck run_symmetric_check(const SemidirectProduct& sd,
                                        const Subspace& little,
                                        const Subspace& p_alg, Subspace m_c,
                                        Subspace n_c) {
  SymmetricSpaceCheck out;
  out.m_complement = m_c;
  out.n_complement = n_c;
  const LieAlgebra& k = sd.k();
  out.pm_in_m = true;
  for (std::size_t a = 0; a < p_alg.dim(); ++a)
    for (std::size_t b = 0; b < m_c.dim(); ++b)
      if (!m_c.contains(k.bracket(p_alg.basis_vector(a), m_c.basis_vector(b))))
        out.pm_in_m = false;
  out.mm_in_p = true;
  for (std::size_t a = 0; a < m_c.dim(); ++a)
    for (std::size_t b = a + 1; b < m_c.dim(); ++b)
      if (!p_alg.contains(k.bracket(m_c.basis_vector(a), m_c.basis_vector(b))))
        out.mm_in_p = false;
  out.kpn_in_n = true;
  for (std::size_t a = 0; a < little.dim(); ++a)
    for (std::size_t b = 0; b < n_c.dim(); ++b)
      if (!n_c.contains(k.bracket(little.basis_vector(a), n_c.basis_vector(b))))
        out.kpn_in_n = false;
  out.nn_in_kp = true;
  for (std::size_t a = 0; a < n_c.dim(); ++a)
    for (std::size_t b = a + 1; b < n_c.dim(); ++b)
      if (!little.contains(k.bracket(n_c.basis_vector(a), n_c.basis_vector(b))))
        out.nn_in_kp = false;
  out.canonical_connection_exists =
      out.pm_in_m && out.mm_in_p && out.kpn_in_n && out.nn_in_kp;
  return out;
}

}  // namespace

SymmetricSpaceCheck symmetric_space_check(const SemidirectProduct& sd,
                                          const Subspace& little,
                                          const Subspace& p_alg,
                                          const Subspace& m_complement,
                                          const Subspace& n_complement) {
  return run_symmetric_check(sd, little, p_alg, m_complement, n_complement);
}

SymmetricSpaceCheck symmetric_space_check(const SemidirectProduct& sd,
                                          const Subspace& little,
                                          const Subspace& p_alg) {
  // Coordinate-orthogonal complements: m = k_p cap p^perp, n = k_p^perp.
  Subspace m_c = little.intersect(p_alg.annihilator());
  Subspace n_c = little.annihilator();
  return run_symmetric_check(sd, little, p_alg, m_c, n_c);
}

CurvatureProbe connection_curvature_probe(const SemidirectProduct& sd,
                                          const ConnectionSpec& spec,
                                          const CovectorPoint& n, Rng& rng,
                                          int samples, const Tolerance& tol) {
  CurvatureProbe out;
  const std::size_t dk = sd.dim_k(), dv = sd.dim_v();

  auto c0_at = [&](const GroupElemD& g, const std::vector<double>& zeta,
                   const std::vector<double>& w) {
    ConnectionValue cv = connection_value(sd, spec, g, zeta, w, tol);
    double s = 0.0;
    for (std::size_t i = 0; i < dk; ++i) s += n.f[i].get_d() * cv.b[i];
    for (std::size_t r = 0; r < dv; ++r) s += n.p[r].get_d() * cv.delta[r];
    return s;
  };
  auto right_invariant_at = [&](const std::vector<Rat>& xi, const GroupElemD& g) {
    std::vector<double> zeta = to_double(sd.k_part(xi));
    DMatrix act(dv, dv);
    for (std::size_t i = 0; i < dk; ++i)
      act = act + to_double(sd.rho().matrix(i)).scaled(zeta[i]);
    std::vector<double> w = act.apply(g.v) + to_double(sd.v_part(xi));
    return std::pair(zeta, w);
  };
  auto c0_on_rightinv = [&](const std::vector<Rat>& xi, const GroupElemD& g) {
    auto [zeta, w] = right_invariant_at(xi, g);
    return c0_at(g, zeta, w);
  };

  double inv_res = 0.0, horiz_res = 0.0, rich = 0.0;
  const double hstep = 1e-4;
  for (int s = 0; s < samples; ++s) {
    GroupElemD g = sample_group_element(sd, rng);
    std::vector<Rat> xi = rng.rational_vector(sd.dim_g(), 3, 2);
    std::vector<Rat> pl(dk, Rat(0));
    for (std::size_t a = 0; a < spec.p_alg.dim(); ++a)
      pl = pl + scaled(spec.p_alg.basis_vector(a), rng.rational(2, 2));
    std::vector<Rat> eta_d = sd.assemble(pl, rng.rational_vector(dv, 2, 2));

    // Fibre invariance of c0 under right translation by h in D.
    GroupElemD h = group_exp(sd, eta_d, 1.0);
    GroupElemD gh = group_compose(g, h);
    auto [zeta, w] = right_invariant_at(xi, g);
    std::vector<double> ku = g.rho.apply(h.v);
    DMatrix act(dv, dv);
    for (std::size_t i = 0; i < dk; ++i)
      act = act + to_double(sd.rho().matrix(i)).scaled(zeta[i]);
    std::vector<double> w_t = w + act.apply(ku);
    inv_res =
        std::max(inv_res, std::fabs(c0_at(gh, zeta, w_t) - c0_at(g, zeta, w)));

    // Horizontality of d c0 = pullback of the induced 2-form: contraction
    // with a vertical fundamental field vanishes. Right-invariant fields
    // commute with the fundamental fields of the right action, so
    // d c0(xi^r, eta^) = xi^r(c0(eta^)) - eta^(c0(xi^r)).
    auto vertical_at = [&](const GroupElemD& gg) {
      std::vector<double> zz = gg.ad.apply(to_double(sd.k_part(eta_d)));
      std::vector<double> ww = gg.rho.apply(to_double(sd.v_part(eta_d)));
      return c0_at(gg, zz, ww);
    };
    auto at1 = [&](double t) {
      return vertical_at(group_compose(group_exp(sd, xi, t), g));
    };
    double d1h = (at1(hstep) - at1(-hstep)) / (2 * hstep);
    double d1h2 = (at1(hstep / 2) - at1(-hstep / 2)) / hstep;
    double term1 = (4 * d1h2 - d1h) / 3.0;
    auto at2 = [&](double t) {
      return c0_on_rightinv(xi, group_compose(g, group_exp(sd, eta_d, t)));
    };
    double d2h = (at2(hstep) - at2(-hstep)) / (2 * hstep);
    double d2h2 = (at2(hstep / 2) - at2(-hstep / 2)) / hstep;
    double term2 = (4 * d2h2 - d2h) / 3.0;
    horiz_res = std::max(horiz_res, std::fabs(term1 - term2));
    rich = std::max(rich, std::fabs(d1h2 - d1h));
  }
  out.c0_invariance_residual = inv_res;
  out.horizontality_residual = horiz_res;
  out.richardson_delta = rich;
  return out;
}

}  // namespace orbitkit
