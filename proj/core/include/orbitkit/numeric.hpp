#pragma once

#include <optional>
#include <vector>

#include "orbitkit/matrix.hpp"
#include "orbitkit/subspace.hpp"

namespace orbitkit {

/// Floating-point comparisons in the sampled paths always go through an
/// explicit tolerance; nothing in the numeric layer compares doubles to zero
/// directly.
struct Tolerance {
  double eps = 1e-9;
  bool is_zero(double x) const { return x <= eps && x >= -eps; }
};

double max_abs(const std::vector<double>& v);
double norm2(const std::vector<double>& v);

/// Matrix exponential by scaling and squaring with a truncated series; the
/// truncation threshold targets residuals well below 1e-12 for the small,
/// benign matrices that arise here (dim <= ~22, moderate norms).
DMatrix expm(const DMatrix& a);

/// phi1(A) = sum_k A^k/(k+1)!, the factor mapping algebra translations to the
/// translation part of a mixed exponential.
DMatrix expm_phi1(const DMatrix& a);

std::optional<std::vector<double>> solve_lu(const DMatrix& a,
                                            const std::vector<double>& b,
                                            const Tolerance& tol);
std::optional<DMatrix> inverse_lu(const DMatrix& a, const Tolerance& tol);

/// Rank by Gaussian elimination with partial pivoting; entries below
/// tol.eps * scale count as zero.
std::size_t rank_tol(DMatrix a, const Tolerance& tol);

/// Distance (sup of the orthogonal residual) from x to the span of the rows
/// of `basis`, after orthonormalizing the rows.
double distance_to_rowspan(const DMatrix& basis, const std::vector<double>& x);
double distance_to_subspace(const Subspace& s, const std::vector<double>& x);

bool in_subspace(const Subspace& s, const std::vector<double>& x,
                 const Tolerance& tol);

}  // namespace orbitkit
