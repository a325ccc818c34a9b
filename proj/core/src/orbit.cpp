#include "orbitkit/orbit.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitkit {

namespace {

Subspace embed_k(const SemidirectProduct& sd) {
  QMatrix rows(sd.dim_k(), sd.dim_g());
  for (std::size_t i = 0; i < sd.dim_k(); ++i) rows(i, i) = Rat(1);
  return Subspace::span(sd.dim_g(), rows);
}

Subspace embed_v(const SemidirectProduct& sd) {
  QMatrix rows(sd.dim_v(), sd.dim_g());
  for (std::size_t s = 0; s < sd.dim_v(); ++s) rows(s, sd.dim_k() + s) = Rat(1);
  return Subspace::span(sd.dim_g(), rows);
}

Subspace fundamental_image(const SemidirectProduct& sd, const CovectorPoint& o,
                           const Subspace& directions) {
  QMatrix rows(directions.dim(), sd.dim_g());
  for (std::size_t i = 0; i < directions.dim(); ++i)
    rows.set_row(i, fundamental_field(sd, directions.basis_vector(i), o));
  return Subspace::span(sd.dim_g(), rows);
}

std::vector<double> odot_d(const SemidirectProduct& sd,
                           const std::vector<double>& p,
                           const std::vector<double>& v) {
  std::vector<double> out(sd.dim_k(), 0.0);
  for (std::size_t i = 0; i < sd.dim_k(); ++i) {
    std::vector<double> mv = to_double(sd.rho().matrix(i)).apply(v);
    double s = 0.0;
    for (std::size_t r = 0; r < sd.dim_v(); ++r) s += p[r] * mv[r];
    out[i] = s;
  }
  return out;
}

bool covector_closed_on(const LieAlgebra& k, const std::vector<Rat>& f,
                        const Subspace& s) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!is_zero(dot(f, k.bracket(s.basis_vector(a), s.basis_vector(b)))))
        return false;
  return true;
}

}  // namespace

Rat kks_form(const SemidirectProduct& sd, const CovectorPoint& m,
             const std::vector<Rat>& xi, const std::vector<Rat>& eta) {
  return -m.pair(sd.g().bracket(xi, eta));
}

Rat kks_form_expanded(const SemidirectProduct& sd, const CovectorPoint& m,
                      const std::vector<Rat>& xi, const std::vector<Rat>& eta) {
  return dot(fundamental_field(sd, xi, m), eta);
}

QMatrix pairing_form(const SemidirectProduct& sd, const CovectorPoint& n) {
  return sd.g().pairing_form(n.flat());
}

Subspace symplectic_orthogonal(const SemidirectProduct& sd,
                               const CovectorPoint& n, const Subspace& s) {
  QMatrix b = pairing_form(sd, n);
  QMatrix rows = s.basis() * b;
  return Subspace::span(sd.dim_g(), rows.kernel());
}

Subspace tangent_L(const SemidirectProduct& sd, const CovectorPoint& o) {
  return fundamental_image(sd, o, embed_k(sd));
}

Subspace tangent_N(const SemidirectProduct& sd, const CovectorPoint& o) {
  return fundamental_image(sd, o, embed_v(sd));
}

TangentComplements tangent_L_N(const SemidirectProduct& sd,
                               const CovectorPoint& o) {
  TangentComplements out;
  Subspace sk = embed_k(sd);
  Subspace sv = embed_v(sd);
  out.t_L = fundamental_image(sd, o, sk);
  out.t_N = fundamental_image(sd, o, sv);
  out.t_L_perp = fundamental_image(sd, o, symplectic_orthogonal(sd, o, sk));
  out.t_N_perp = fundamental_image(sd, o, symplectic_orthogonal(sd, o, sv));
  return out;
}

OrbitReport analyze_point(const SemidirectProduct& sd, const CovectorPoint& n) {
  if (n.f.size() != sd.dim_k() || n.p.size() != sd.dim_v())
    throw std::invalid_argument("analyze_point: covector dimensions mismatch");
  OrbitReport r;
  r.dim_g = sd.dim_g();
  Subspace kp = little_algebra(sd, n.p);
  LittleGroupPoint lgp = little_group_point(sd, n);
  Subspace gn = isotropy_algebra(sd, n);
  Subspace kf = sd.k().isotropy_of_covector(n.f);

  r.dim_little_algebra = kp.dim();
  r.dim_phi_stabilizer = lgp.stabilizer_in_kp.dim();
  r.dim_kernel_tau_star = kernel_tau_star(sd, n.p).dim();
  r.dim_isotropy = gn.dim();
  r.dim_orbit = sd.dim_g() - gn.dim();
  r.dim_base = sd.dim_k() - kp.dim();
  r.dim_little_orbit = kp.dim() - lgp.stabilizer_in_kp.dim();
  r.dim_fibre = image_tau_star(sd, n.p).dim();

  TangentComplements tc = tangent_L_N(sd, n);
  r.dim_L = tc.t_L.dim();
  r.dim_N = tc.t_N.dim();
  r.n_isotropic = tc.t_N_perp.contains(tc.t_N);
  r.n_lagrangian = (tc.t_N == tc.t_N_perp);
  r.l_lagrangian = (tc.t_L == tc.t_L_perp);
  r.kp_in_kf = kf.contains(kp);
  r.f_closed_on_k = covector_closed_on(sd.k(), n.f, Subspace::full(sd.dim_k()));
  r.f_closed_on_kp = covector_closed_on(sd.k(), n.f, kp);
  return r;
}

CharacteristicDistribution characteristic_distribution(
    const SemidirectProduct& sd, const CovectorPoint& o) {
  CharacteristicDistribution out;
  Subspace sk = embed_k(sd);
  Subspace tl = fundamental_image(sd, o, sk);
  Subspace tlp = fundamental_image(sd, o, symplectic_orthogonal(sd, o, sk));
  out.value = tl.intersect(tlp);

  Subspace kh = sd.k().isotropy_of_covector(o.f);
  QMatrix rows(kh.dim(), sd.dim_g());
  for (std::size_t i = 0; i < kh.dim(); ++i) {
    std::vector<Rat> aq = sd.rho().contragredient(kh.basis_vector(i)).apply(o.p);
    std::vector<Rat> row(sd.dim_g(), Rat(0));
    for (std::size_t s = 0; s < sd.dim_v(); ++s) row[sd.dim_k() + s] = aq[s];
    rows.set_row(i, row);
  }
  out.closed_form = Subspace::span(sd.dim_g(), rows);
  out.closed_form_matches = (out.closed_form == out.value);
  out.precondition_kp_in_kf = kh.contains(little_algebra(sd, o.p));
  return out;
}

FoliationLeaf foliation_leaf(const SemidirectProduct& sd, const CovectorPoint& o) {
  FoliationLeaf out;
  out.base = o;
  out.directions = tangent_N(sd, o);
  out.isotropic = true;
  for (std::size_t s = 0; s < sd.dim_v(); ++s)
    for (std::size_t t = s + 1; t < sd.dim_v(); ++t) {
      std::vector<Rat> xs(sd.dim_g(), Rat(0)), xt(sd.dim_g(), Rat(0));
      xs[sd.dim_k() + s] = Rat(1);
      xt[sd.dim_k() + t] = Rat(1);
      if (!is_zero(kks_form(sd, o, xs, xt))) out.isotropic = false;
    }
  std::size_t orbit_dim = sd.dim_g() - isotropy_algebra(sd, o).dim();
  out.lagrangian = out.isotropic && 2 * out.directions.dim() == orbit_dim;
  return out;
}

double splitting_residual(const SemidirectProduct& sd, const CovectorPoint& n,
                          const GroupElemD& g, const std::vector<Rat>& xi,
                          const std::vector<Rat>& eta, const Tolerance& tol) {
  std::vector<Rat> a = sd.k_part(xi), av = sd.v_part(xi);
  std::vector<Rat> b = sd.k_part(eta), bv = sd.v_part(eta);

  auto adi = inverse_lu(g.ad, tol);
  auto rhoi = inverse_lu(g.rho, tol);
  if (!adi || !rhoi) throw std::invalid_argument("singular group element");
  std::vector<double> h = adi->transpose().apply(to_double(n.f));
  std::vector<double> q = rhoi->transpose().apply(to_double(n.p));

  DMatrix act_a = to_double(sd.rho().act(a));
  DMatrix act_b = to_double(sd.rho().act(b));
  std::vector<double> av_d = to_double(av), bv_d = to_double(bv);
  std::vector<double> term1 = act_b.apply(act_a.apply(g.v) + av_d);
  std::vector<double> term2 = act_a.apply(act_b.apply(g.v) + bv_d);
  double lhs = 0.0;
  for (std::size_t r = 0; r < sd.dim_v(); ++r) lhs += q[r] * (term1[r] - term2[r]);
  std::vector<double> brk = to_double(sd.k().bracket(a, b));
  for (std::size_t i = 0; i < sd.dim_k(); ++i) lhs -= h[i] * brk[i];

  std::vector<double> m = coadjoint(sd, g, to_double(n.flat()), tol);
  std::vector<double> brg = to_double(sd.g().bracket(xi, eta));
  double rhs = 0.0;
  for (std::size_t u = 0; u < sd.dim_g(); ++u) rhs -= m[u] * brg[u];

  return std::fabs(lhs - rhs);
}

Rat splitting_residual_exact(const SemidirectProduct& sd, const CovectorPoint& n,
                             const GroupElemQ& g, const std::vector<Rat>& xi,
                             const std::vector<Rat>& eta) {
  std::vector<Rat> a = sd.k_part(xi), av = sd.v_part(xi);
  std::vector<Rat> b = sd.k_part(eta), bv = sd.v_part(eta);
  auto adi = g.ad.inverse();
  auto rhoi = g.rho.inverse();
  if (!adi || !rhoi) throw std::invalid_argument("singular group element");
  std::vector<Rat> h = adi->transpose().apply(n.f);
  std::vector<Rat> q = rhoi->transpose().apply(n.p);

  QMatrix act_a = sd.rho().act(a);
  QMatrix act_b = sd.rho().act(b);
  std::vector<Rat> term1 = act_b.apply(act_a.apply(g.v) + av);
  std::vector<Rat> term2 = act_a.apply(act_b.apply(g.v) + bv);
  Rat lhs = dot(q, term1 - term2) - dot(h, sd.k().bracket(a, b));

  CovectorPoint m = coadjoint(sd, g, n);
  Rat rhs = -m.pair(sd.g().bracket(xi, eta));
  return lhs - rhs;
}

Rat section_pullback_residual(const SemidirectProduct& sd,
                              const CovectorPoint& o, const std::vector<Rat>& a,
                              const std::vector<Rat>& b) {
  std::vector<Rat> zero_v(sd.dim_v(), Rat(0));
  Rat omega = kks_form(sd, o, sd.assemble(a, zero_v), sd.assemble(b, zero_v));
  Rat alpha0 = -dot(o.f, sd.k().bracket(a, b));
  return omega - alpha0;
}

double varisotropy_residual(const SemidirectProduct& sd, const CovectorPoint& n,
                            Rng& rng, int samples, const Tolerance& tol) {
  double worst = 0.0;
  Subspace kp = little_algebra(sd, n.p);
  if (kp.dim() == 0) return 0.0;  // K_q discrete at the algebra level
  for (int s = 0; s < samples; ++s) {
    GroupElemD g0 = sample_group_element(sd, rng);
    auto ad0i = inverse_lu(g0.ad, tol);
    auto rho0i = inverse_lu(g0.rho, tol);
    if (!ad0i || !rho0i) continue;
    std::vector<double> h = ad0i->transpose().apply(to_double(n.f));
    std::vector<double> q = rho0i->transpose().apply(to_double(n.p));

    // K_q = k0 K_p k0^{-1}: transport an exponential of k_p by conjugation.
    std::size_t which = static_cast<std::size_t>(
        rng.uniform(0, static_cast<long>(kp.dim()) - 1));
    double t = rng.uniform_real(-1.0, 1.0);
    std::vector<Rat> a = kp.basis_vector(which);
    GroupElemD ek = group_exp(sd, sd.assemble(a, std::vector<Rat>(sd.dim_v(), Rat(0))), t);
    DMatrix ad_k = g0.ad * ek.ad * (*ad0i);

    // k.h - h must lie in im tau_q* = span{q (.) e_s}.
    Tolerance inner{tol.eps};
    auto adki = inverse_lu(ad_k, inner);
    if (!adki) continue;
    std::vector<double> kh = adki->transpose().apply(h);
    std::vector<double> diff(sd.dim_k());
    for (std::size_t i = 0; i < sd.dim_k(); ++i) diff[i] = kh[i] - h[i];

    DMatrix rows(sd.dim_v(), sd.dim_k());
    for (std::size_t r = 0; r < sd.dim_v(); ++r) {
      std::vector<double> ev(sd.dim_v(), 0.0);
      ev[r] = 1.0;
      rows.set_row(r, odot_d(sd, q, ev));
    }
    double scale = std::max(1.0, max_abs(diff));
    worst = std::max(worst, distance_to_rowspan(rows, diff) / scale);
  }
  return worst;
}

}  // namespace orbitkit
