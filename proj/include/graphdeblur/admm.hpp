#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "graphdeblur/core.hpp"
#include "graphdeblur/lsqr.hpp"
#include "graphdeblur/sparse.hpp"
#include "graphdeblur/spectral.hpp"

namespace graphdeblur {

// sign(v) * max(|v| - theta, 0), elementwise.
Vector soft_threshold(std::span<const double> v, double theta);
// max(v, 0), elementwise.
Vector project_nonneg(std::span<const double> v);

struct AdmmConfig {
  double rho = 1e-1;
  double tau = 1e-4;
  int max_iter = 3000;
  double mu = 0.0;  // must be set by the caller
  LsqrOptions lsqr{};
  // Abort when ||x|| exceeds this multiple of ||b_delta||.
  double divergence_factor = 1e6;

  void validate() const;
};

// Iterates of the split problem. z lives in the range of L (rows(L)
// entries); the others in pixel space.
struct AdmmState {
  Vector x, y, w, z;
  Vector lambda1, lambda2, lambda3;
  int k = 0;
};

struct AdmmRecord {
  int k = 0;                 // 0-based index of the completed iteration
  double res_xy = 0.0;       // ||x - y||
  double res_zly = 0.0;      // ||z - L y||
  double res_xw = 0.0;       // ||x - w||
  double objective = 0.0;    // 0.5 ||A x - b||^2 + mu ||z||_1
  double relchange = 0.0;    // ||x_{k+1} - x_k|| / ||x_k||
  double lambda_change = 0.0;  // ||lambda_{k+1} - lambda_k|| / ||lambda_{k+1}||
  int lsqr_iterations = 0;
  bool lsqr_converged = true;
};

struct AdmmTrace {
  std::vector<AdmmRecord> records;
  bool stopped_by_tolerance = false;
  int lsqr_failures = 0;
  std::vector<std::string> warnings;
};

struct AdmmResult {
  Image x;            // projected onto the nonnegative cone
  AdmmState state;    // final iterates, unprojected
  AdmmTrace trace;
};

// Called after every iteration with the iterates before and after it.
using AdmmObserver = std::function<void(const AdmmState& before, const AdmmState& after)>;

// Graph-Laplacian (or any sparse L) l2-l1 deblurring with nonnegativity:
//   min_{x >= 0} 0.5 ||A x - b||^2 + mu ||L x||_1,
// A given by its BCCB spectrum. Throws DivergenceError on non-finite or
// runaway iterates.
AdmmResult admm_deblur(const Spectrum& sigma_a, const SparseMatrix& reg, const Image& b_delta,
                       const AdmmConfig& cfg, const AdmmObserver& observer = {});

// CSV with header k,res_xy,res_zLy,res_xw,objective,relchange.
std::string trace_csv(const AdmmTrace& trace);

}  // namespace graphdeblur
