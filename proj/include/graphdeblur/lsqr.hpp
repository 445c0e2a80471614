#pragma once

#include <span>
#include <vector>

#include "graphdeblur/core.hpp"
#include "graphdeblur/sparse.hpp"

namespace graphdeblur {

struct LsqrOptions {
  double tol = 1e-8;  // on ||S^T (S y - v)|| / ||S^T v||
  int max_iter = 200;
};

struct LsqrReport {
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
  // ||S y_j - v|| as tracked by the bidiagonalisation, one per iteration.
  std::vector<double> residual_norms;
};

struct LsqrResult {
  Vector y;
  LsqrReport report;
};

// Least squares for the stacked operator S = [L; I]:
//   min_y || L y - top ||^2 + || y - bottom ||^2,
// i.e. (L^T L + I) y = L^T top + bottom, by Golub-Kahan bidiagonalisation
// (Paige-Saunders LSQR). A non-empty warm_start w solves for the correction
// y - w. Hitting max_iter returns the last iterate with converged = false.
LsqrResult lsqr_solve(const SparseMatrix& reg, std::span<const double> top_rhs,
                      std::span<const double> bottom_rhs, const LsqrOptions& options = {},
                      std::span<const double> warm_start = {});

}  // namespace graphdeblur
