#include "orbitkit/polarization.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitkit {

namespace {

ComplexSubspace complex_isotropy(const LieAlgebra& g, const std::vector<Rat>& n) {
  return complexify(g.isotropy_of_covector(n));
}

std::vector<double> realify_vector(const std::vector<double>& re,
                                   const std::vector<double>& im) {
  std::vector<double> out = re;
  out.insert(out.end(), im.begin(), im.end());
  return out;
}

/// d and e of a candidate on a plain algebra.
void real_subalgebras(const ComplexSubspace& h, Subspace* d, Subspace* e) {
  *d = real_points(h);
  *e = real_points(h.sum(conjugate(h)));
}

bool subspace_closed(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(g.bracket(s.basis_vector(a), s.basis_vector(b))))
        return false;
  return true;
}

bool subspace_closed_c(const LieAlgebra& g, const ComplexSubspace& s) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(g.bracket_c(s.basis_vector(a), s.basis_vector(b))))
        return false;
  return true;
}

CRat pair_c(const std::vector<Rat>& n, const std::vector<CRat>& x) {
  CRat s(0);
  for (std::size_t i = 0; i < n.size(); ++i) {
    CRat t = CRat(n[i]) * x[i];
    s += t;
  }
  return s;
}

}  // namespace

Subspace realify(const ComplexSubspace& s) {
  const std::size_t n = s.ambient_dim();
  QMatrix rows(2 * s.dim(), 2 * n);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const CRat& z = s.basis()(i, j);
      rows(2 * i, j) = z.re;
      rows(2 * i, n + j) = z.im;
      rows(2 * i + 1, j) = -z.im;  // i * basis vector
      rows(2 * i + 1, n + j) = z.re;
    }
  }
  return Subspace::span(2 * n, rows);
}

PolarizationAxioms check_polarization_algebra(const LieAlgebra& g,
                                              const std::vector<Rat>& n,
                                              const ComplexSubspace& h,
                                              const SamplingOptions& opts) {
  if (h.ambient_dim() != g.dim())
    throw std::invalid_argument("polarization candidate has wrong ambient dimension");
  PolarizationAxioms ax;
  ax.is_subalgebra = subspace_closed_c(g, h);
  Subspace gn = g.isotropy_of_covector(n);
  ax.contains_isotropy = h.contains(complex_isotropy(g, n));
  ax.dimension_ok = (2 * h.dim() == g.dim() + gn.dim());
  ax.isotropic = true;
  for (std::size_t a = 0; a < h.dim() && ax.isotropic; ++a)
    for (std::size_t b = a + 1; b < h.dim(); ++b)
      if (!is_zero(pair_c(n, g.bracket_c(h.basis_vector(a), h.basis_vector(b))))) {
        ax.isotropic = false;
        break;
      }
  ax.invariant_exact = true;
  for (std::size_t u = 0; u < gn.dim() && ax.invariant_exact; ++u)
    for (std::size_t b = 0; b < h.dim(); ++b)
      if (!h.contains(g.bracket_c(complexify(gn.basis_vector(u)), h.basis_vector(b)))) {
        ax.invariant_exact = false;
        break;
      }
  ax.sum_subalgebra = subspace_closed_c(g, h.sum(conjugate(h)));

  if (opts.samples <= 0 || gn.dim() == 0) {
    ax.invariant_sampled =
        gn.dim() == 0 ? TriVerdict::holds : TriVerdict::not_evaluated;
    if (opts.samples <= 0) ax.invariant_sampled = TriVerdict::not_evaluated;
    return ax;
  }
  // Sampled Ad((G_n)_0)-invariance: transport the basis of h by Ad(exp xi)
  // for xi in g_n and test membership in the realified picture.
  Rng rng(opts.seed ^ 0x706f6c61ULL);
  Subspace hr = realify(h);
  double worst = 0.0;
  for (int s = 0; s < opts.samples; ++s) {
    std::vector<double> xi(g.dim(), 0.0);
    for (std::size_t u = 0; u < gn.dim(); ++u) {
      double c = rng.uniform_real(-1.0, 1.0);
      std::vector<double> bv = to_double(gn.basis_vector(u));
      for (std::size_t t = 0; t < g.dim(); ++t) xi[t] += c * bv[t];
    }
    DMatrix ad = algebra_ad_exp(g, xi);
    for (std::size_t b = 0; b < h.dim(); ++b) {
      std::vector<double> re(g.dim()), im(g.dim());
      for (std::size_t j = 0; j < g.dim(); ++j) {
        re[j] = h.basis()(b, j).re.get_d();
        im[j] = h.basis()(b, j).im.get_d();
      }
      std::vector<double> tre = ad.apply(re), tim = ad.apply(im);
      std::vector<double> v = realify_vector(tre, tim);
      double scale = std::max(1.0, max_abs(v));
      worst = std::max(worst, distance_to_subspace(hr, v) / scale);
    }
  }
  ax.invariant_residual = worst;
  ax.invariant_sampled =
      worst <= opts.tol.eps ? TriVerdict::holds : TriVerdict::fails;
  return ax;
}

PukanszkyResult pukanszky_algebra(const LieAlgebra& g, const std::vector<Rat>& n,
                                  const ComplexSubspace& h,
                                  const SamplingOptions& opts) {
  PukanszkyResult out;
  real_subalgebras(h, &out.d, &out.e);
  out.d_e_are_subalgebras = subspace_closed(g, out.d) && subspace_closed(g, out.e);
  out.e_annihilator = out.e.annihilator();

  QMatrix img(out.d.dim(), g.dim());
  for (std::size_t u = 0; u < out.d.dim(); ++u)
    img.set_row(u, g.coadjoint_apply(out.d.basis_vector(u), n));
  Subspace dn = Subspace::span(g.dim(), img);
  out.infinitesimal = (dn == out.e_annihilator);

  if (opts.samples <= 0) return out;

  Rng rng(opts.seed ^ 0x70756b61ULL);
  double worst = 0.0;
  std::vector<std::vector<double>> displacements;
  std::vector<double> nd = to_double(n);
  for (int s = 0; s < opts.samples; ++s) {
    DMatrix coad = DMatrix::identity(g.dim());
    int factors = 1 + static_cast<int>(rng.next_u64() % 2);
    for (int fct = 0; fct < factors; ++fct) {
      std::vector<double> xi(g.dim(), 0.0);
      for (std::size_t u = 0; u < out.d.dim(); ++u) {
        double c = rng.uniform_real(-1.0, 1.0);
        std::vector<double> bv = to_double(out.d.basis_vector(u));
        for (std::size_t t = 0; t < g.dim(); ++t) xi[t] += c * bv[t];
      }
      coad = algebra_coad_exp(g, xi) * coad;
    }
    std::vector<double> moved = coad.apply(nd);
    std::vector<double> diff(g.dim());
    for (std::size_t t = 0; t < g.dim(); ++t) diff[t] = moved[t] - nd[t];
    double scale = std::max(1.0, max_abs(diff));
    worst = std::max(worst, distance_to_subspace(out.e_annihilator, diff) / scale);
    displacements.push_back(diff);
  }
  out.membership_residual = worst;
  out.sampled_membership =
      worst <= opts.tol.eps ? TriVerdict::holds : TriVerdict::fails;

  DMatrix disp(displacements.size(), g.dim());
  for (std::size_t r = 0; r < displacements.size(); ++r)
    disp.set_row(r, displacements[r]);
  std::size_t spanned = rank_tol(disp, opts.tol);
  out.sampled_span = (spanned == out.e_annihilator.dim()) ? TriVerdict::holds
                                                          : TriVerdict::fails;
  return out;
}

PolarizationCandidate analyze_candidate(const SemidirectProduct& sd,
                                        const ComplexSubspace& h) {
  PolarizationCandidate cand;
  cand.h = h;
  CMatrix v_rows(sd.dim_v(), sd.dim_g());
  for (std::size_t s = 0; s < sd.dim_v(); ++s) v_rows(s, sd.dim_k() + s) = CRat(1);
  ComplexSubspace vc = ComplexSubspace::span(sd.dim_g(), v_rows);
  cand.has_semidirect_form = h.contains(vc);

  cand.d = real_points(h);
  cand.e = real_points(h.sum(conjugate(h)));

  if (!cand.has_semidirect_form) return cand;
  CMatrix kc_rows(sd.dim_k(), sd.dim_g());
  for (std::size_t i = 0; i < sd.dim_k(); ++i) kc_rows(i, i) = CRat(1);
  ComplexSubspace kc = ComplexSubspace::span(sd.dim_g(), kc_rows);
  cand.a = h.intersect(kc);

  // p = a cap k and q = (a + conj a) cap k; the vectors already live in the
  // k x {0} slice, so reading them in k is a truncation.
  auto truncate_to_k = [&](const Subspace& s) {
    QMatrix rows(s.dim(), sd.dim_k());
    for (std::size_t r = 0; r < s.dim(); ++r) {
      std::vector<Rat> v = s.basis_vector(r);
      rows.set_row(r, std::vector<Rat>(v.begin(), v.begin() + sd.dim_k()));
    }
    return Subspace::span(sd.dim_k(), rows);
  };
  cand.p_alg = truncate_to_k(real_points(cand.a));
  cand.q_alg = truncate_to_k(real_points(cand.a.sum(conjugate(cand.a))));
  return cand;
}

std::optional<ComplexSubspace> semidirect_form(const SemidirectProduct& sd,
                                               const ComplexSubspace& h) {
  PolarizationCandidate cand = analyze_candidate(sd, h);
  if (!cand.has_semidirect_form) return std::nullopt;
  return cand.a;
}

PolarizationAxioms check_polarization(const SemidirectProduct& sd,
                                      const CovectorPoint& n,
                                      const ComplexSubspace& h,
                                      const SamplingOptions& opts) {
  return check_polarization_algebra(sd.g(), n.flat(), h, opts);
}

PukanszkyResult pukanszky_check(const SemidirectProduct& sd,
                                const CovectorPoint& n, const ComplexSubspace& h,
                                const SamplingOptions& opts) {
  return pukanszky_algebra(sd.g(), n.flat(), h, opts);
}

namespace {

/// a, living in k^C embedded in g^C, rewritten in the coordinates of the
/// canonical k_p basis. Fails (nullopt) if a is not inside k_p^C.
std::optional<ComplexSubspace> restrict_a_to_little(
    const SemidirectProduct& sd, const SubalgebraStructure& little,
    const ComplexSubspace& a) {
  const std::size_t dkp = little.carrier.dim();
  CMatrix carrier_t(sd.dim_k(), dkp);
  for (std::size_t i = 0; i < sd.dim_k(); ++i)
    for (std::size_t j = 0; j < dkp; ++j)
      carrier_t(i, j) = CRat(little.carrier.basis()(j, i));
  CMatrix rows(a.dim(), dkp);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    std::vector<CRat> v = a.basis_vector(r);
    std::vector<CRat> kpart(v.begin(), v.begin() + sd.dim_k());
    auto sol = carrier_t.solve(kpart);
    if (!sol) return std::nullopt;
    rows.set_row(r, *sol);
  }
  return ComplexSubspace::span(dkp, rows);
}

}  // namespace

ReductionCheck reduction_theorem_check(const SemidirectProduct& sd,
                                       const CovectorPoint& n,
                                       const ComplexSubspace& h,
                                       const SamplingOptions& opts) {
  ReductionCheck out;
  PolarizationCandidate cand = analyze_candidate(sd, h);
  out.has_semidirect_form = cand.has_semidirect_form;
  if (!out.has_semidirect_form) {
    out.note = "candidate does not contain V^C; not of split form";
    return out;
  }
  out.big_axioms = check_polarization(sd, n, h, opts);
  out.big_puk = pukanszky_algebra(sd.g(), n.flat(), h, opts);

  LittleGroupPoint lgp = little_group_point(sd, n);
  auto a_little = restrict_a_to_little(sd, lgp.little, cand.a);
  if (!a_little) {
    // a is not inside k_p^C; it cannot be a polarization of the little
    // algebra, and the big candidate necessarily fails isotropy.
    out.axioms_consistent = !out.big_axioms.passes();
    out.pukanszky_consistent = true;
    out.note = "a is not contained in k_p^C";
    return out;
  }
  out.little_axioms =
      check_polarization_algebra(lgp.little.algebra, lgp.phi, *a_little, opts);
  out.little_puk = pukanszky_algebra(lgp.little.algebra, lgp.phi, *a_little, opts);
  out.axioms_consistent = (out.big_axioms.passes() == out.little_axioms.passes());
  out.pukanszky_consistent = (out.big_puk.holds() == out.little_puk.holds());

  // Intermediate facts of the reduction proof.
  Subspace im_ts = image_tau_star(sd, n.p);
  Subspace kp_ann = little_algebra(sd, n.p).annihilator();
  Subspace q_ann = cand.q_alg.annihilator();
  out.odot_in_q_annihilator = kp_ann.contains(im_ts) && q_ann.contains(kp_ann);

  if (opts.samples > 0 && cand.p_alg.dim() > 0) {
    Rng rng(opts.seed ^ 0x72656463ULL);
    bool all_match = true;
    QMatrix restrict(lgp.little.carrier.dim(), sd.dim_k());
    for (std::size_t a = 0; a < lgp.little.carrier.dim(); ++a)
      restrict.set_row(a, lgp.little.carrier.basis_vector(a));
    Subspace q_ann_red = Subspace::image(restrict, q_ann);
    for (int s = 0; s < opts.samples; ++s) {
      std::vector<double> xi(sd.dim_k(), 0.0);
      for (std::size_t u = 0; u < cand.p_alg.dim(); ++u) {
        double c = rng.uniform_real(-1.0, 1.0);
        std::vector<double> bv = to_double(cand.p_alg.basis_vector(u));
        for (std::size_t t = 0; t < sd.dim_k(); ++t) xi[t] += c * bv[t];
      }
      DMatrix coad_k = algebra_coad_exp(sd.k(), xi);
      std::vector<double> fd = to_double(n.f);
      std::vector<double> moved = coad_k.apply(fd);
      std::vector<double> diff(sd.dim_k());
      for (std::size_t t = 0; t < sd.dim_k(); ++t) diff[t] = moved[t] - fd[t];
      bool big_side = in_subspace(q_ann, diff, opts.tol);
      std::vector<double> diff_red = to_double(restrict).apply(diff);
      bool little_side = in_subspace(q_ann_red, diff_red, opts.tol);
      if (big_side != little_side) all_match = false;
    }
    out.restriction_equivalence =
        all_match ? TriVerdict::holds : TriVerdict::fails;
  }
  return out;
}

ComplexSubspace trivial_polarization(const SemidirectProduct& sd,
                                     const CovectorPoint& n) {
  Subspace kp = little_algebra(sd, n.p);
  std::string bad;
  for (std::size_t a = 0; a < kp.dim(); ++a)
    for (std::size_t b = a + 1; b < kp.dim(); ++b)
      if (!is_zero(dot(n.f, sd.k().bracket(kp.basis_vector(a), kp.basis_vector(b))))) {
        if (!bad.empty()) bad += ", ";
        bad += "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
      }
  if (!bad.empty())
    throw std::domain_error(
        "trivial polarization needs f to vanish on [k_p, k_p]; nonzero on "
        "little-basis pairs " + bad);
  QMatrix rows(kp.dim() + sd.dim_v(), sd.dim_g());
  for (std::size_t a = 0; a < kp.dim(); ++a) {
    std::vector<Rat> v = kp.basis_vector(a);
    for (std::size_t i = 0; i < sd.dim_k(); ++i) rows(a, i) = v[i];
  }
  for (std::size_t s = 0; s < sd.dim_v(); ++s)
    rows(kp.dim() + s, sd.dim_k() + s) = Rat(1);
  return complexify(Subspace::span(sd.dim_g(), rows));
}

BundleCheck pukanszky_bundle_check(const SemidirectProduct& sd,
                                   const CovectorPoint& n,
                                   const ComplexSubspace& h,
                                   const SamplingOptions& opts) {
  BundleCheck out;
  PolarizationCandidate cand = analyze_candidate(sd, h);
  PukanszkyResult puk = pukanszky_algebra(sd.g(), n.flat(), h, SamplingOptions{0, 0, Tolerance{}});
  OrbitReport orb = analyze_point(sd, n);

  out.dim_orbit = orb.dim_orbit;
  out.dim_f = (sd.dim_g() - puk.d.dim()) + puk.e_annihilator.dim();
  out.f_matches_orbit = (out.dim_f == out.dim_orbit);
  out.dim_e_mod_d = puk.e.dim() - puk.d.dim();
  out.dim_t_ge = 2 * (sd.dim_g() - puk.e.dim());

  LittleGroupPoint lgp = little_group_point(sd, n);
  out.dim_little_orbit = orb.dim_little_orbit;
  if (cand.has_semidirect_form) {
    QMatrix restrict(lgp.little.carrier.dim(), sd.dim_k());
    for (std::size_t a = 0; a < lgp.little.carrier.dim(); ++a)
      restrict.set_row(a, lgp.little.carrier.basis_vector(a));
    Subspace q_ann = cand.q_alg.annihilator();
    Subspace q_ann_red = Subspace::image(restrict, q_ann);
    // P as subspace of k_p; dim(K_p / P) = dim k_p - dim p_alg.
    out.dim_f_reduced =
        (lgp.little.carrier.dim() - cand.p_alg.dim()) + q_ann_red.dim();
    out.f_reduced_matches = (out.dim_f_reduced == out.dim_little_orbit);

    // Exact fibre-projection consistency at the identity: restriction of the
    // q-annihilator equals the annihilator of q inside k_p*.
    QMatrix q_in_kp(cand.q_alg.dim(), lgp.little.carrier.dim());
    bool q_inside = true;
    QMatrix carrier_t = lgp.little.carrier.basis().transpose();
    for (std::size_t r = 0; r < cand.q_alg.dim(); ++r) {
      auto sol = carrier_t.solve(cand.q_alg.basis_vector(r));
      if (!sol) {
        q_inside = false;
        break;
      }
      q_in_kp.set_row(r, *sol);
    }
    if (q_inside) {
      Subspace q_red = Subspace::span(lgp.little.carrier.dim(), q_in_kp);
      out.projection_exact = (q_ann_red == q_red.annihilator());
    }

    if (opts.samples > 0 && q_inside) {
      Rng rng(opts.seed ^ 0x62756e64ULL);
      bool ok = true;
      double eps = opts.tol.eps;
      const std::size_t dkp = lgp.little.carrier.dim();
      for (int s = 0; s < opts.samples; ++s) {
        // Draw coordinates over the k_p basis so the element is known on both
        // the ambient and the little side without solving.
        std::vector<double> coords(dkp);
        for (auto& c : coords) c = rng.uniform_real(-1.0, 1.0);
        std::vector<double> xi(sd.dim_k(), 0.0);
        for (std::size_t u = 0; u < dkp; ++u) {
          std::vector<double> bv = to_double(lgp.little.carrier.basis_vector(u));
          for (std::size_t t = 0; t < sd.dim_k(); ++t) xi[t] += coords[u] * bv[t];
        }
        DMatrix coad_k = algebra_coad_exp(sd.k(), xi);
        DMatrix coad_kp = algebra_coad_exp(lgp.little.algebra, coords);
        // transported fibres: restrict(Coad_K(k) q_ann) vs Coad_kp(k)(q_ann_red)
        DMatrix target(q_ann_red.dim(), dkp);
        for (std::size_t r = 0; r < q_ann_red.dim(); ++r)
          target.set_row(r, coad_kp.apply(to_double(q_ann_red.basis_vector(r))));
        DMatrix projected(q_ann.dim(), dkp);
        for (std::size_t r = 0; r < q_ann.dim(); ++r) {
          std::vector<double> moved = coad_k.apply(to_double(q_ann.basis_vector(r)));
          std::vector<double> proj = to_double(restrict).apply(moved);
          projected.set_row(r, proj);
          double scale = std::max(1.0, max_abs(proj));
          if (distance_to_rowspan(target, proj) / scale > eps) ok = false;
        }
        if (rank_tol(projected, opts.tol) != q_ann_red.dim()) ok = false;
      }
      out.projection_sampled = ok ? TriVerdict::holds : TriVerdict::fails;
    }
  }
  return out;
}

}  // namespace orbitkit
