#include <doctest.h>

#include "orbitkit/catalog.hpp"
#include "orbitkit/lie_algebra.hpp"
#include "orbitkit/rng.hpp"

using namespace orbitkit;

namespace {

LieAlgebra so3() { return build_fixture("se3").sd.k(); }
Representation so3_vec() { return build_fixture("se3").sd.rho(); }

std::vector<Rat> e(std::size_t dim, std::size_t i) {
  return unit_vector<Rat>(dim, i);
}

}  // namespace

TEST_CASE("so(3) bracket table") {
  LieAlgebra k = so3();
  CHECK(k.bracket(e(3, 0), e(3, 1)) == e(3, 2));
  CHECK(k.bracket(e(3, 1), e(3, 2)) == e(3, 0));
  CHECK(k.bracket(e(3, 2), e(3, 0)) == e(3, 1));

  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rat> x = rng.rational_vector(3);
    CHECK(all_zero(k.bracket(x, x)));
    std::vector<Rat> y = rng.rational_vector(3);
    CHECK(k.bracket(x, y) + k.bracket(y, x) == std::vector<Rat>(3, Rat(0)));
  }

  LieAlgebra ab = LieAlgebra::abelian(4);
  Rng rng2(5);
  CHECK(all_zero(ab.bracket(rng2.rational_vector(4), rng2.rational_vector(4))));
}

TEST_CASE("coderivative: so(3), e1 . e3* = -e2*") {
  LieAlgebra k = so3();
  // oracle: evaluate -f([A, e_j]) on the basis
  std::vector<Rat> f = e(3, 2);
  std::vector<Rat> got = k.coadjoint_apply(e(3, 0), f);
  std::vector<Rat> expected(3, Rat(0));
  for (std::size_t j = 0; j < 3; ++j)
    expected[j] = -dot(f, k.bracket(e(3, 0), e(3, j)));
  CHECK(got == expected);
  CHECK(got == std::vector<Rat>{Rat(0), Rat(-1), Rat(0)});

  CHECK(all_zero(k.coadjoint_apply(std::vector<Rat>(3, Rat(0)), f)));
  LieAlgebra ab = LieAlgebra::abelian(3);
  CHECK(all_zero(ab.coadjoint_apply(e(3, 1), f)));
}

TEST_CASE("coderivative matrix is minus the transposed adjoint") {
  for (const auto& name : fixture_names()) {
    const LieAlgebra k = build_fixture(name).sd.k();
    Rng rng(17);
    for (int t = 0; t < 5; ++t) {
      std::vector<Rat> a = rng.rational_vector(k.dim());
      CHECK(k.coadjoint_matrix(a) == k.ad(a).transpose().scaled(Rat(-1)));
    }
  }
}

TEST_CASE("contragredient: so(3) on R^3, e3 . e1* fixed by the oracle") {
  Representation rho = so3_vec();
  std::vector<Rat> p = e(3, 0);
  std::vector<Rat> got = rho.contragredient(e(3, 2)).apply(p);
  // oracle: (A.p)(v_j) = -p(A.v_j)
  std::vector<Rat> expected(3, Rat(0));
  for (std::size_t j = 0; j < 3; ++j)
    expected[j] = -dot(p, rho.act(e(3, 2)).apply(e(3, j)));
  CHECK(got == expected);
  CHECK(got == std::vector<Rat>{Rat(0), Rat(1), Rat(0)});

  CHECK(rho.contragredient(e(3, 1)) == rho.act(e(3, 1)).transpose().scaled(Rat(-1)));
  CHECK(all_zero(rho.contragredient(std::vector<Rat>(3, Rat(0))).apply(p)));
  CHECK(all_zero(rho.contragredient(e(3, 2)).apply(std::vector<Rat>(3, Rat(0)))));
}

TEST_CASE("derived coadjoint and contragredient are representations") {
  for (const auto& name : fixture_names()) {
    Fixture fix = build_fixture(name);
    const LieAlgebra& k = fix.sd.k();
    const Representation& rho = fix.sd.rho();
    for (std::size_t i = 0; i < k.dim(); ++i)
      for (std::size_t j = 0; j < k.dim(); ++j) {
        std::vector<Rat> br = k.bracket(e(k.dim(), i), e(k.dim(), j));
        QMatrix ci = k.coadjoint_matrix(e(k.dim(), i));
        QMatrix cj = k.coadjoint_matrix(e(k.dim(), j));
        CHECK(k.coadjoint_matrix(br) == ci * cj - cj * ci);
        QMatrix ri = rho.contragredient(e(k.dim(), i));
        QMatrix rj = rho.contragredient(e(k.dim(), j));
        CHECK(rho.contragredient(br) == ri * rj - rj * ri);
      }
  }
}

TEST_CASE("validate catches constructed failures") {
  LieAlgebra k = so3();
  CHECK(validate(k, so3_vec()).ok());

  // Jacobi violation: [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=e2
  LieAlgebra nojacobi(3, {});
  nojacobi.set_bracket(0, 1, 2, Rat(1));
  nojacobi.set_bracket(0, 2, 0, Rat(1));
  nojacobi.set_bracket(1, 2, 1, Rat(1));
  ValidationReport vr = validate(nojacobi);
  REQUIRE(!vr.ok());
  CHECK(vr.issues.front().kind == ValidationIssue::Kind::jacobi);
  CHECK(vr.issues.front().i == 0);
  CHECK(vr.issues.front().j == 1);
  CHECK(vr.issues.front().k == 2);

  // perturbed representation matrix: homomorphism violation located
  Representation rho = so3_vec();
  QMatrix m = rho.matrix(2);
  m(0, 0) += Rat(1, 7);
  rho.set_matrix(2, m);
  ValidationReport vr2 = validate(k, rho);
  REQUIRE(!vr2.ok());
  bool found = false;
  for (const auto& issue : vr2.issues)
    if (issue.kind == ValidationIssue::Kind::homomorphism &&
        (issue.i == 2 || issue.j == 2))
      found = true;
  CHECK(found);
}

TEST_CASE("isotropy algebra of a covector") {
  LieAlgebra k = so3();
  Subspace kf = k.isotropy_of_covector(e(3, 2));
  CHECK(kf.dim() == 1);
  CHECK(kf.contains(e(3, 2)));
  CHECK(k.isotropy_of_covector(std::vector<Rat>(3, Rat(0))) == Subspace::full(3));
}

TEST_CASE("subalgebra structure extraction") {
  Fixture fix = build_fixture("bargmann");
  Subspace kp = little_algebra(fix.sd, fix.points.at("massive_spin").p);
  SubalgebraStructure sub = subalgebra_structure(fix.sd.k(), kp);
  REQUIRE(sub.closed);
  CHECK(sub.algebra.dim() == 3);
  CHECK(sub.algebra == so3());

  // a plane that is not a subalgebra of so(3)
  Subspace plane =
      Subspace::span(3, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}});
  CHECK(!subalgebra_structure(so3(), plane).closed);
}
