#include "orbitkit/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitkit {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

namespace {

double norm1(const DMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::fabs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

DMatrix exp_series(const DMatrix& a) {
  const std::size_t n = a.rows();
  DMatrix acc = DMatrix::identity(n);
  DMatrix term = DMatrix::identity(n);
  double fact = 1.0;
  for (int k = 1; k < 64; ++k) {
    term = term * a;
    fact *= k;
    DMatrix contrib = term.scaled(1.0 / fact);
    acc = acc + contrib;
    if (norm1(contrib) < 1e-17 * (1.0 + norm1(acc))) break;
  }
  return acc;
}

}  // namespace

DMatrix expm(const DMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: square matrix required");
  double nrm = norm1(a);
  int s = 0;
  while (nrm > 0.5) {
    nrm /= 2.0;
    ++s;
  }
  DMatrix b = a.scaled(std::pow(0.5, s));
  DMatrix e = exp_series(b);
  for (int i = 0; i < s; ++i) e = e * e;
  return e;
}

DMatrix expm_phi1(const DMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm_phi1: square matrix required");
  // phi1(A) = (exp(A) - I) A^{-1} when invertible; the series form avoids the
  // inverse and is exact for nilpotent blocks.
  const std::size_t n = a.rows();
  DMatrix acc = DMatrix::identity(n);
  DMatrix term = DMatrix::identity(n);
  double fact = 1.0;
  for (int k = 1; k < 96; ++k) {
    term = term * a;
    fact *= (k + 1);
    DMatrix contrib = term.scaled(1.0 / fact);
    acc = acc + contrib;
    if (norm1(contrib) < 1e-17 * (1.0 + norm1(acc))) break;
  }
  return acc;
}

std::optional<std::vector<double>> solve_lu(const DMatrix& a,
                                            const std::vector<double>& b,
                                            const Tolerance& tol) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw std::invalid_argument("solve_lu: shape mismatch");
  DMatrix m = a;
  std::vector<double> rhs = b;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(m(r, c)) > std::fabs(m(piv, c))) piv = r;
    if (tol.is_zero(m(piv, c))) return std::nullopt;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      std::swap(rhs[piv], rhs[c]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      double f = m(r, c) / m(c, c);
      if (f == 0.0) continue;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m(i, i);
  return x;
}

std::optional<DMatrix> inverse_lu(const DMatrix& a, const Tolerance& tol) {
  const std::size_t n = a.rows();
  DMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    auto col = solve_lu(a, e, tol);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  return inv;
}

std::size_t rank_tol(DMatrix a, const Tolerance& tol) {
  double scale = std::max(1.0, norm1(a));
  std::size_t rank = 0;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
    std::size_t piv = pr;
    for (std::size_t r = pr; r < a.rows(); ++r)
      if (std::fabs(a(r, c)) > std::fabs(a(piv, c))) piv = r;
    if (std::fabs(a(piv, c)) <= tol.eps * scale) continue;
    if (piv != pr)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(pr, j));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pr) continue;
      double f = a(r, c) / a(pr, c);
      if (f == 0.0) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(pr, j);
    }
    ++rank;
    ++pr;
  }
  return rank;
}

double distance_to_rowspan(const DMatrix& basis, const std::vector<double>& x) {
  std::vector<std::vector<double>> ortho;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::vector<double> v = basis.row(i);
    for (const auto& q : ortho) {
      double c = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) c += v[j] * q[j];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * q[j];
    }
    double nn = norm2(v);
    if (nn > 1e-14) {
      for (auto& t : v) t /= nn;
      ortho.push_back(v);
    }
  }
  std::vector<double> r = x;
  for (const auto& q : ortho) {
    double c = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) c += r[j] * q[j];
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * q[j];
  }
  return max_abs(r);
}

double distance_to_subspace(const Subspace& s, const std::vector<double>& x) {
  return distance_to_rowspan(to_double(s.basis()), x);
}

bool in_subspace(const Subspace& s, const std::vector<double>& x,
                 const Tolerance& tol) {
  double scale = std::max(1.0, max_abs(x));
  return distance_to_subspace(s, x) <= tol.eps * scale;
}

}  // namespace orbitkit
