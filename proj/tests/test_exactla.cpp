#include <doctest.h>

#include "orbitkit/matrix.hpp"
#include "orbitkit/rng.hpp"
#include "orbitkit/subspace.hpp"

using namespace orbitkit;

namespace {

QMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.rational();
  return m;
}

QMatrix cross_with_e3() {
  // v -> e3 x v
  QMatrix m(3, 3);
  m(0, 1) = Rat(-1);
  m(1, 0) = Rat(1);
  return m;
}

}  // namespace

TEST_CASE("kernel of simple maps") {
  QMatrix zero(3, 3);
  CHECK(Subspace::span(3, zero.kernel()) == Subspace::full(3));
  CHECK(QMatrix::identity(3).kernel().rows() == 0);

  Subspace k = Subspace::span(3, cross_with_e3().kernel());
  CHECK(k.dim() == 1);
  CHECK(k.contains({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("rank-nullity on seeded matrices up to 12x12") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng.next_u64() % 12;
    std::size_t c = 1 + rng.next_u64() % 12;
    QMatrix m = random_matrix(rng, r, c);
    CHECK(m.kernel().rows() + m.rank() == c);
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("annihilator dimensions and involution") {
  CHECK(Subspace(3).annihilator() == Subspace::full(3));
  CHECK(Subspace::full(3).annihilator().dim() == 0);

  Subspace e3 = Subspace::span(3, {{Rat(0), Rat(0), Rat(1)}});
  Subspace ann = e3.annihilator();
  CHECK(ann ==
        Subspace::span(3, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}));

  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    std::size_t dim = 1 + rng.next_u64() % 8;
    std::size_t rows = 1 + rng.next_u64() % dim;
    Subspace s = Subspace::span(dim, random_matrix(rng, rows, dim));
    CHECK(s.dim() + s.annihilator().dim() == dim);
    CHECK(s.annihilator().annihilator() == s);
  }
}

TEST_CASE("sum, intersection and the Grassmann identity") {
  Subspace a = Subspace::span(3, {{Rat(1), Rat(0), Rat(0)}});
  Subspace b = Subspace::span(3, {{Rat(0), Rat(1), Rat(0)}});
  CHECK(a.sum(b).dim() == 2);
  CHECK(a.intersect(b).dim() == 0);
  CHECK(a.sum(a) == a);
  CHECK(a.intersect(a) == a);

  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    Subspace s = Subspace::span(6, random_matrix(rng, 1 + rng.next_u64() % 5, 6));
    Subspace u = Subspace::span(6, random_matrix(rng, 1 + rng.next_u64() % 5, 6));
    // brute-force rank oracle for the sum
    QMatrix stacked = QMatrix::vstack(s.basis(), u.basis());
    CHECK(s.sum(u).dim() == stacked.rank());
    CHECK(s.dim() + u.dim() == s.sum(u).dim() + s.intersect(u).dim());
    CHECK(s.sum(u).contains(s.intersect(u)));
  }
}

TEST_CASE("quotient representatives complete the sub-basis") {
  Subspace whole = Subspace::full(4);
  Subspace sub =
      Subspace::span(4, {{Rat(1), Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1), Rat(0)}});
  auto reps = whole.quotient_representatives(sub);
  CHECK(reps.size() == 2);
  QMatrix all(4, 4);
  all.set_row(0, sub.basis_vector(0));
  all.set_row(1, sub.basis_vector(1));
  all.set_row(2, reps[0]);
  all.set_row(3, reps[1]);
  CHECK(all.rank() == 4);

  CHECK_THROWS(sub.quotient_representatives(whole));
}

TEST_CASE("canonical bases are identical across row-equivalent inputs") {
  Rng rng(37);
  for (int t = 0; t < 60; ++t) {
    std::size_t dim = 2 + rng.next_u64() % 7;
    std::size_t rows = 1 + rng.next_u64() % dim;
    QMatrix m = random_matrix(rng, rows, dim);
    Subspace s = Subspace::span(dim, m);

    // scramble by invertible row operations, then permute the rows
    QMatrix scr = m;
    for (int ops = 0; ops < 6; ++ops) {
      std::size_t i = rng.next_u64() % rows;
      std::size_t j = rng.next_u64() % rows;
      if (i == j) continue;
      Rat c = rng.rational();
      for (std::size_t col = 0; col < dim; ++col) {
        Rat add = c * scr(j, col);
        scr(i, col) += add;
      }
    }
    for (int sw = 0; sw < 4; ++sw) {
      std::size_t i = rng.next_u64() % rows;
      std::size_t j = rng.next_u64() % rows;
      for (std::size_t col = 0; col < dim; ++col) std::swap(scr(i, col), scr(j, col));
    }
    Subspace s2 = Subspace::span(dim, scr);
    CHECK(s == s2);
    CHECK(s.basis() == s2.basis());
  }
}

TEST_CASE("complex subspaces: conjugation is an involution") {
  Rng rng(53);
  for (int t = 0; t < 30; ++t) {
    std::size_t dim = 2 + rng.next_u64() % 5;
    std::size_t rows = 1 + rng.next_u64() % dim;
    CMatrix m(rows, dim);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        m(i, j) = CRat(rng.rational(), rng.rational());
    ComplexSubspace s = ComplexSubspace::span(dim, m);
    CHECK(conjugate(conjugate(s)) == s);
    CHECK(real_points(s).dim() <= s.dim());
  }
}

TEST_CASE("real points of a complexified subspace recover it") {
  Rng rng(59);
  for (int t = 0; t < 30; ++t) {
    std::size_t dim = 2 + rng.next_u64() % 6;
    Subspace s = Subspace::span(dim, random_matrix(rng, 1 + rng.next_u64() % dim, dim));
    CHECK(real_points(complexify(s)) == s);
    CHECK(conjugate(complexify(s)) == complexify(s));
  }
}

TEST_CASE("solve and inverse") {
  QMatrix a(2, 2);
  a(0, 0) = Rat(2);
  a(0, 1) = Rat(1);
  a(1, 0) = Rat(1);
  a(1, 1) = Rat(1);
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK((*inv) * a == QMatrix::identity(2));

  auto sol = a.solve({Rat(3), Rat(2)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rat(1));
  CHECK((*sol)[1] == Rat(1));

  QMatrix sing(2, 2);
  sing(0, 0) = Rat(1);
  sing(1, 0) = Rat(1);
  CHECK(!sing.inverse().has_value());
  CHECK(!sing.solve({Rat(0), Rat(1)}).has_value());
}
