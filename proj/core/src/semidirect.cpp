#include "orbitkit/semidirect.hpp"

#include <stdexcept>

namespace orbitkit {

SemidirectProduct::SemidirectProduct(LieAlgebra k, Representation rho)
    : k_(std::move(k)), rho_(std::move(rho)) {
  if (rho_.algebra_dim() != k_.dim())
    throw std::invalid_argument("representation does not match algebra dimension");
  const std::size_t dk = k_.dim();
  const std::size_t dv = rho_.space_dim();
  std::vector<std::string> names = k_.names();
  for (std::size_t s = 0; s < dv; ++s) names.push_back("v" + std::to_string(s + 1));
  LieAlgebra g(dk + dv, names);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = i + 1; j < dk; ++j)
      for (std::size_t t = 0; t < dk; ++t)
        if (!is_zero(k_.c(i, j, t))) g.set_bracket(i, j, t, k_.c(i, j, t));
  for (std::size_t i = 0; i < dk; ++i) {
    const QMatrix& m = rho_.matrix(i);
    for (std::size_t s = 0; s < dv; ++s)
      for (std::size_t r = 0; r < dv; ++r)
        if (!is_zero(m(r, s))) g.set_bracket(i, dk + s, dk + r, m(r, s));
  }
  g_ = std::move(g);
}

std::vector<Rat> SemidirectProduct::k_part(const std::vector<Rat>& xi) const {
  return {xi.begin(), xi.begin() + dim_k()};
}
std::vector<Rat> SemidirectProduct::v_part(const std::vector<Rat>& xi) const {
  return {xi.begin() + dim_k(), xi.end()};
}
std::vector<Rat> SemidirectProduct::assemble(const std::vector<Rat>& a,
                                             const std::vector<Rat>& v) const {
  if (a.size() != dim_k() || v.size() != dim_v())
    throw std::invalid_argument("assemble: component dimensions mismatch");
  std::vector<Rat> out = a;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Rat> odot(const SemidirectProduct& sd, const std::vector<Rat>& p,
                      const std::vector<Rat>& v) {
  if (p.size() != sd.dim_v() || v.size() != sd.dim_v())
    throw std::invalid_argument("odot: dimension mismatch");
  std::vector<Rat> out(sd.dim_k(), Rat(0));
  for (std::size_t i = 0; i < sd.dim_k(); ++i)
    out[i] = dot(p, sd.rho().matrix(i).apply(v));
  return out;
}

QMatrix tau_matrix(const SemidirectProduct& sd, const std::vector<Rat>& p) {
  if (p.size() != sd.dim_v()) throw std::invalid_argument("tau: p dimension mismatch");
  QMatrix t(sd.dim_v(), sd.dim_k());
  for (std::size_t i = 0; i < sd.dim_k(); ++i) {
    // tau_p(e_i) = -e_i.p = rho'(e_i)^T p
    std::vector<Rat> col = sd.rho().matrix(i).transpose().apply(p);
    for (std::size_t s = 0; s < sd.dim_v(); ++s) t(s, i) = col[s];
  }
  return t;
}

QMatrix tau_star_matrix(const SemidirectProduct& sd, const std::vector<Rat>& p) {
  return tau_matrix(sd, p).transpose();
}

Subspace little_algebra(const SemidirectProduct& sd, const std::vector<Rat>& p) {
  return Subspace::span(sd.dim_k(), tau_matrix(sd, p).kernel());
}

Subspace image_tau_star(const SemidirectProduct& sd, const std::vector<Rat>& p) {
  QMatrix rows(sd.dim_v(), sd.dim_k());
  for (std::size_t s = 0; s < sd.dim_v(); ++s)
    rows.set_row(s, odot(sd, p, unit_vector<Rat>(sd.dim_v(), s)));
  return Subspace::span(sd.dim_k(), rows);
}

Subspace kernel_tau_star(const SemidirectProduct& sd, const std::vector<Rat>& p) {
  return Subspace::span(sd.dim_v(), tau_star_matrix(sd, p).kernel());
}

std::vector<Rat> fundamental_field(const SemidirectProduct& sd,
                                   const std::vector<Rat>& xi,
                                   const CovectorPoint& m) {
  if (xi.size() != sd.dim_g())
    throw std::invalid_argument("fundamental_field: dimension mismatch");
  std::vector<Rat> a = sd.k_part(xi);
  std::vector<Rat> av = sd.v_part(xi);
  std::vector<Rat> fh = sd.k().coadjoint_apply(a, m.f) + odot(sd, m.p, av);
  std::vector<Rat> fp = sd.rho().contragredient(a).apply(m.p);
  std::vector<Rat> out = fh;
  out.insert(out.end(), fp.begin(), fp.end());
  return out;
}

QMatrix fundamental_matrix(const SemidirectProduct& sd, const CovectorPoint& n) {
  QMatrix m(sd.dim_g(), sd.dim_g());
  for (std::size_t u = 0; u < sd.dim_g(); ++u) {
    std::vector<Rat> col = fundamental_field(sd, unit_vector<Rat>(sd.dim_g(), u), n);
    for (std::size_t r = 0; r < sd.dim_g(); ++r) m(r, u) = col[r];
  }
  return m;
}

Subspace isotropy_algebra(const SemidirectProduct& sd, const CovectorPoint& n) {
  return Subspace::span(sd.dim_g(), fundamental_matrix(sd, n).kernel());
}

LittleGroupPoint little_group_point(const SemidirectProduct& sd,
                                    const CovectorPoint& n) {
  LittleGroupPoint out;
  Subspace kp = little_algebra(sd, n.p);
  out.little = subalgebra_structure(sd.k(), kp);
  if (!out.little.closed)
    throw std::logic_error("little algebra is not closed under the bracket");
  out.phi = out.little.restrict_covector(n.f);
  // (k_p)_phi = {A in k_p : f([A, B]) = 0 for all B in k_p}; note that
  // phi([A,B]) = f([A,B]) because [A,B] stays in k_p.
  const std::size_t d = kp.dim();
  QMatrix w(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      w(b, a) = dot(n.f, sd.k().bracket(kp.basis_vector(a), kp.basis_vector(b)));
  QMatrix coeff_basis = w.kernel();  // rows: coefficient vectors over kp basis
  QMatrix rows(coeff_basis.rows(), sd.dim_k());
  for (std::size_t r = 0; r < coeff_basis.rows(); ++r) {
    std::vector<Rat> vec(sd.dim_k(), Rat(0));
    for (std::size_t a = 0; a < d; ++a) {
      if (is_zero(coeff_basis(r, a))) continue;
      vec = vec + scaled(kp.basis_vector(a), coeff_basis(r, a));
    }
    rows.set_row(r, vec);
  }
  out.stabilizer_in_kp = Subspace::span(sd.dim_k(), rows);
  return out;
}

GroupElemQ group_identity(const SemidirectProduct& sd) {
  GroupElemQ g;
  g.ad = QMatrix::identity(sd.dim_k());
  g.rho = QMatrix::identity(sd.dim_v());
  g.v.assign(sd.dim_v(), Rat(0));
  return g;
}

GroupElemQ group_from_k_action(QMatrix ad, QMatrix rho, std::vector<Rat> v) {
  GroupElemQ g;
  g.ad = std::move(ad);
  g.rho = std::move(rho);
  g.v = std::move(v);
  return g;
}

GroupElemD group_exp(const SemidirectProduct& sd, const std::vector<Rat>& xi,
                     double t) {
  std::vector<Rat> a = sd.k_part(xi);
  std::vector<Rat> av = sd.v_part(xi);
  DMatrix ad = to_double(sd.k().ad(a)).scaled(t);
  DMatrix rp = to_double(sd.rho().act(a)).scaled(t);
  GroupElemD g;
  g.ad = expm(ad);
  g.rho = expm(rp);
  std::vector<double> vd = to_double(av);
  g.v = expm_phi1(rp).apply(vd);
  for (auto& x : g.v) x *= t;
  return g;
}

GroupElemQ group_inverse(const GroupElemQ& g) {
  auto adi = g.ad.inverse();
  auto rhoi = g.rho.inverse();
  if (!adi || !rhoi) throw std::invalid_argument("singular group element");
  GroupElemQ out;
  out.ad = *adi;
  out.rho = *rhoi;
  out.v = scaled(out.rho.apply(g.v), Rat(-1));
  return out;
}

GroupElemD group_inverse(const GroupElemD& g, const Tolerance& tol) {
  auto adi = inverse_lu(g.ad, tol);
  auto rhoi = inverse_lu(g.rho, tol);
  if (!adi || !rhoi) throw std::invalid_argument("singular group element");
  GroupElemD out;
  out.ad = *adi;
  out.rho = *rhoi;
  out.v = out.rho.apply(g.v);
  for (auto& x : out.v) x = -x;
  return out;
}

CovectorPoint coadjoint(const SemidirectProduct& sd, const GroupElemQ& g,
                        const CovectorPoint& n) {
  auto adi = g.ad.inverse();
  auto rhoi = g.rho.inverse();
  if (!adi || !rhoi) throw std::invalid_argument("singular group element");
  // k.f = Ad(k^{-1})^T f ; k.p = rho(k^{-1})^T p
  std::vector<Rat> kf = adi->transpose().apply(n.f);
  std::vector<Rat> kp = rhoi->transpose().apply(n.p);
  CovectorPoint out;
  out.f = kf + odot(sd, kp, g.v);
  out.p = kp;
  return out;
}

std::vector<double> coadjoint(const SemidirectProduct& sd, const GroupElemD& g,
                              const std::vector<double>& n_flat,
                              const Tolerance& tol) {
  const std::size_t dk = sd.dim_k(), dv = sd.dim_v();
  std::vector<double> f(n_flat.begin(), n_flat.begin() + dk);
  std::vector<double> p(n_flat.begin() + dk, n_flat.end());
  auto adi = inverse_lu(g.ad, tol);
  auto rhoi = inverse_lu(g.rho, tol);
  if (!adi || !rhoi) throw std::invalid_argument("singular group element");
  std::vector<double> kf = adi->transpose().apply(f);
  std::vector<double> kp = rhoi->transpose().apply(p);
  // (k.p)(.)v over doubles
  std::vector<double> od(dk, 0.0);
  for (std::size_t i = 0; i < dk; ++i) {
    std::vector<double> mv = to_double(sd.rho().matrix(i)).apply(g.v);
    double s = 0.0;
    for (std::size_t r = 0; r < dv; ++r) s += kp[r] * mv[r];
    od[i] = s;
  }
  std::vector<double> out(dk + dv);
  for (std::size_t i = 0; i < dk; ++i) out[i] = kf[i] + od[i];
  for (std::size_t r = 0; r < dv; ++r) out[dk + r] = kp[r];
  return out;
}

std::vector<Rat> adjoint(const SemidirectProduct& sd, const GroupElemQ& g,
                         const std::vector<Rat>& xi) {
  std::vector<Rat> a = sd.k_part(xi);
  std::vector<Rat> av = sd.v_part(xi);
  std::vector<Rat> ada = g.ad.apply(a);
  std::vector<Rat> ka = g.rho.apply(av);
  std::vector<Rat> corr = sd.rho().act(ada).apply(g.v);
  return sd.assemble(ada, ka - corr);
}

std::vector<double> adjoint(const SemidirectProduct& sd, const GroupElemD& g,
                            const std::vector<double>& xi) {
  const std::size_t dk = sd.dim_k(), dv = sd.dim_v();
  std::vector<double> a(xi.begin(), xi.begin() + dk);
  std::vector<double> av(xi.begin() + dk, xi.end());
  std::vector<double> ada = g.ad.apply(a);
  std::vector<double> ka = g.rho.apply(av);
  DMatrix act(dv, dv);
  for (std::size_t i = 0; i < dk; ++i)
    act = act + to_double(sd.rho().matrix(i)).scaled(ada[i]);
  std::vector<double> corr = act.apply(g.v);
  std::vector<double> out(dk + dv);
  for (std::size_t i = 0; i < dk; ++i) out[i] = ada[i];
  for (std::size_t r = 0; r < dv; ++r) out[dk + r] = ka[r] - corr[r];
  return out;
}

GroupElemD sample_group_element(const SemidirectProduct& sd, Rng& rng,
                                int factors) {
  GroupElemD g;
  g.ad = DMatrix::identity(sd.dim_k());
  g.rho = DMatrix::identity(sd.dim_v());
  g.v.assign(sd.dim_v(), 0.0);
  for (int i = 0; i < factors; ++i) {
    std::vector<Rat> xi = rng.rational_vector(sd.dim_g(), 3, 3);
    double t = rng.uniform_real(-0.8, 0.8);
    g = group_compose(g, group_exp(sd, xi, t));
  }
  return g;
}

DMatrix algebra_ad_exp(const LieAlgebra& g, const std::vector<double>& xi) {
  DMatrix ad(g.dim(), g.dim());
  for (std::size_t u = 0; u < g.dim(); ++u) {
    QMatrix adu = g.ad(unit_vector<Rat>(g.dim(), u));
    ad = ad + to_double(adu).scaled(xi[u]);
  }
  return expm(ad);
}

DMatrix algebra_coad_exp(const LieAlgebra& g, const std::vector<double>& xi) {
  DMatrix ad(g.dim(), g.dim());
  for (std::size_t u = 0; u < g.dim(); ++u) {
    QMatrix adu = g.ad(unit_vector<Rat>(g.dim(), u));
    ad = ad + to_double(adu).scaled(xi[u]);
  }
  return expm(ad.transpose().scaled(-1.0));
}

}  // namespace orbitkit
