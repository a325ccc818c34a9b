#include <doctest.h>

#include <cmath>

#include "orbitkit/catalog.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/rng.hpp"

using namespace orbitkit;

namespace {

std::vector<Rat> e(std::size_t dim, std::size_t i) {
  return unit_vector<Rat>(dim, i);
}

struct Dims {
  std::size_t orbit, base, little, isotropy, kert, n_dim;
  bool kp_in_kf;
};

void check_dims(const char* fixture, const char* point, const Dims& d) {
  Fixture fix = build_fixture(fixture);
  OrbitReport r = analyze_point(fix.sd, fix.points.at(point));
  CHECK(r.dim_orbit == d.orbit);
  CHECK(r.dim_base == d.base);
  CHECK(r.dim_little_orbit == d.little);
  CHECK(r.dim_isotropy == d.isotropy);
  CHECK(r.dim_kernel_tau_star == d.kert);
  CHECK(r.dim_N == d.n_dim);
  CHECK(r.kp_in_kf == d.kp_in_kf);
  CHECK(r.n_isotropic);
  CHECK(r.dim_isotropy == r.dim_kernel_tau_star + r.dim_phi_stabilizer);
  CHECK(r.dim_orbit == r.dim_little_orbit + 2 * r.dim_base);
}

}  // namespace

TEST_CASE("fixture dimension tables") {
  check_dims("se3", "spin_momentum", {4, 2, 0, 2, 1, 2, true});
  check_dims("galilei", "massless_spin", {6, 3, 0, 4, 1, 3, true});
  check_dims("galilei", "infinite_velocity", {8, 3, 2, 2, 1, 3, false});
  check_dims("bargmann", "massive_spin", {8, 3, 2, 3, 2, 3, false});
}

TEST_CASE("kks form: hand value, antisymmetry, radical") {
  Fixture fix = build_fixture("se3");
  CovectorPoint m = fix.points.at("spin_momentum");
  std::vector<Rat> xi(6, Rat(0)), eta(6, Rat(0));
  xi[0] = Rat(1);
  eta[1] = Rat(1);
  CHECK(kks_form(fix.sd, m, xi, eta) == Rat(-1));
  CHECK(kks_form(fix.sd, m, xi, xi) == Rat(0));

  Rng rng(31);
  for (const auto& name : fixture_names()) {
    Fixture f2 = build_fixture(name);
    CovectorPoint n = f2.points.at(f2.point_order.front());
    for (int t = 0; t < 30; ++t) {
      std::vector<Rat> a = rng.rational_vector(f2.sd.dim_g());
      std::vector<Rat> b = rng.rational_vector(f2.sd.dim_g());
      Rat w = kks_form(f2.sd, n, a, b);
      CHECK(w == -kks_form(f2.sd, n, b, a));
      CHECK(w == kks_form_expanded(f2.sd, n, a, b));
    }
    // radical: isotropy directions pair to zero with everything
    Subspace gn = isotropy_algebra(f2.sd, n);
    for (std::size_t i = 0; i < gn.dim(); ++i)
      for (int t = 0; t < 10; ++t)
        CHECK(kks_form(f2.sd, n, gn.basis_vector(i),
                       rng.rational_vector(f2.sd.dim_g())) == Rat(0));
  }
}

TEST_CASE("tangent spaces of L and N with their complements") {
  Fixture se3 = build_fixture("se3");
  CovectorPoint n = se3.points.at("spin_momentum");
  TangentComplements tc = tangent_L_N(se3.sd, n);
  CHECK(tc.t_N.dim() == 2);
  CHECK(tc.t_N_perp.dim() == 2);
  CHECK(tc.t_N == tc.t_N_perp);  // Lagrangian at the cotangent-type point
  CHECK(tc.t_L.dim() == 2);
  CHECK(tc.t_L != tc.t_L_perp);  // f does not kill [k,k]

  // T_nN is the image of tau* in the k*-slot and constant along N
  Subspace tN = tangent_N(se3.sd, n);
  Subspace im = image_tau_star(se3.sd, n.p);
  for (std::size_t i = 0; i < im.dim(); ++i) {
    std::vector<Rat> embedded(6, Rat(0));
    for (std::size_t j = 0; j < 3; ++j) embedded[j] = im.basis_vector(i)[j];
    CHECK(tN.contains(embedded));
  }
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    CovectorPoint moved = n;
    moved.f = n.f + odot(se3.sd, n.p, rng.rational_vector(3));
    CHECK(tangent_N(se3.sd, moved) == tN);
  }

  // p = 0 makes N a point
  CovectorPoint degenerate;
  degenerate.f = e(3, 2);
  degenerate.p = std::vector<Rat>(3, Rat(0));
  CHECK(tangent_N(se3.sd, degenerate).dim() == 0);

  Fixture gal = build_fixture("galilei");
  TangentComplements tg = tangent_L_N(gal.sd, gal.points.at("infinite_velocity"));
  CHECK(tg.t_N.dim() == 3);
  CHECK(tg.t_N_perp.dim() == 5);
  CHECK(tg.t_N_perp.contains(tg.t_N));
  CHECK(tg.t_N != tg.t_N_perp);
}

TEST_CASE("N is isotropic on seeded points of every fixture") {
  Rng rng(35);
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    for (int t = 0; t < 40; ++t) {
      CovectorPoint n;
      n.f = rng.rational_vector(fix.sd.dim_k());
      n.p = rng.rational_vector(fix.sd.dim_v());
      TangentComplements tc = tangent_L_N(fix.sd, n);
      CHECK(tc.t_N_perp.contains(tc.t_N));
      OrbitReport r = analyze_point(fix.sd, n);
      if (r.kp_in_kf) CHECK(tc.t_N == tc.t_N_perp);
      CHECK((tc.t_N == tc.t_N_perp) == (r.dim_little_orbit == 0));
      // L Lagrangian iff f vanishes on [k,k]
      CHECK((tc.t_L == tc.t_L_perp) == r.f_closed_on_k);
    }
    // constructed closed f: the zero covector
    CovectorPoint flat;
    flat.f = std::vector<Rat>(fix.sd.dim_k(), Rat(0));
    flat.p = rng.rational_vector(fix.sd.dim_v());
    TangentComplements tc = tangent_L_N(fix.sd, flat);
    CHECK(tc.t_L == tc.t_L_perp);
    CHECK(analyze_point(fix.sd, flat).l_lagrangian);
  }
}

TEST_CASE("splitting identity: exact at rational elements, sampled elsewhere") {
  Rng rng(37);
  Tolerance tol;
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    CovectorPoint n = fix.points.at(fix.point_order.front());
    // exact route: the identity element and Cayley-rational elements
    GroupElemQ id = group_identity(fix.sd);
    ExactSamplers ex = exact_samplers(fix, fix.point_order.front(), rng, 5);
    for (int t = 0; t < 20; ++t) {
      std::vector<Rat> xi = rng.rational_vector(fix.sd.dim_g());
      std::vector<Rat> eta = rng.rational_vector(fix.sd.dim_g());
      CHECK(is_zero(splitting_residual_exact(fix.sd, n, id, xi, eta)));
      GroupElemQ g = ex.g_elements[t % ex.g_elements.size()];
      g.v = rng.rational_vector(fix.sd.dim_v(), 2, 2);
      CHECK(is_zero(splitting_residual_exact(fix.sd, n, g, xi, eta)));
    }
    for (int t = 0; t < 100; ++t) {
      GroupElemD g = sample_group_element(fix.sd, rng);
      std::vector<Rat> xi = rng.rational_vector(fix.sd.dim_g());
      std::vector<Rat> eta = rng.rational_vector(fix.sd.dim_g());
      CHECK(splitting_residual(fix.sd, n, g, xi, eta, tol) < 1e-9);
    }
  }
}

TEST_CASE("characteristic distribution: values frozen from the oracle") {
  Fixture se3 = build_fixture("se3");
  CharacteristicDistribution cd =
      characteristic_distribution(se3.sd, se3.points.at("spin_momentum"));
  CHECK(cd.value.dim() == 0);
  CHECK(cd.precondition_kp_in_kf);
  CHECK(cd.closed_form_matches);

  Fixture barg = build_fixture("bargmann");
  CharacteristicDistribution cb =
      characteristic_distribution(barg.sd, barg.points.at("massive_spin"));
  CHECK(cb.value.dim() == 3);
  CHECK(!cb.precondition_kp_in_kf);
  CHECK(cb.closed_form_matches);

  Fixture gal = build_fixture("galilei");
  CHECK(characteristic_distribution(gal.sd, gal.points.at("massless_spin"))
            .value.dim() == 1);
  CHECK(characteristic_distribution(gal.sd, gal.points.at("infinite_velocity"))
            .value.dim() == 1);

  // degenerate p = 0: L is the K-orbit of (f, 0); the characteristic space
  // is the radical of the f-orbit form, all inside the k*-slot
  CovectorPoint deg;
  deg.f = e(3, 2);
  deg.p = std::vector<Rat>(3, Rat(0));
  CharacteristicDistribution cz = characteristic_distribution(se3.sd, deg);
  CHECK(cz.value.dim() == 0);
}

TEST_CASE("foliation leaves") {
  Fixture se3 = build_fixture("se3");
  FoliationLeaf leaf = foliation_leaf(se3.sd, se3.points.at("spin_momentum"));
  CHECK(leaf.directions.dim() == 2);
  CHECK(leaf.isotropic);
  CHECK(leaf.lagrangian);

  CovectorPoint deg;
  deg.f = e(3, 2);
  deg.p = std::vector<Rat>(3, Rat(0));
  CHECK(foliation_leaf(se3.sd, deg).directions.dim() == 0);

  Fixture gal = build_fixture("galilei");
  FoliationLeaf lg = foliation_leaf(gal.sd, gal.points.at("infinite_velocity"));
  CHECK(lg.directions.dim() == 3);
  CHECK(lg.isotropic);
  CHECK(!lg.lagrangian);
}

TEST_CASE("section pullback identity is exact on and off the base point") {
  Rng rng(41);
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    CovectorPoint n = fix.points.at(fix.point_order.front());
    ExactSamplers ex = exact_samplers(fix, fix.point_order.front(), rng, 4);
    for (const auto& g : ex.g_elements) {
      CovectorPoint o = coadjoint(fix.sd, g, n);  // a point of L when v = 0
      for (int t = 0; t < 10; ++t) {
        std::vector<Rat> a = rng.rational_vector(fix.sd.dim_k());
        std::vector<Rat> b = rng.rational_vector(fix.sd.dim_k());
        CHECK(is_zero(section_pullback_residual(fix.sd, o, a, b)));
      }
    }
  }
}

TEST_CASE("varisotropy residual under the cotangent-type hypothesis") {
  Tolerance tol;
  Fixture se3 = build_fixture("se3");
  Rng rng(43);
  CHECK(varisotropy_residual(se3.sd, se3.points.at("spin_momentum"), rng, 40, tol) <
        1e-9);
  Fixture gal = build_fixture("galilei");
  Rng rng2(43);
  CHECK(varisotropy_residual(gal.sd, gal.points.at("massless_spin"), rng2, 40, tol) <
        1e-9);
}
