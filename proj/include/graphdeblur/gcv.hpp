#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphdeblur/core.hpp"
#include "graphdeblur/fft.hpp"
#include "graphdeblur/psf.hpp"
#include "graphdeblur/spectral.hpp"

namespace graphdeblur {

// Pieces of the GCV functional G(mu) = r_mu^2 / t_mu^2 for the Tikhonov
// problem with L_TV. r_mu is the spatial residual norm ||A x_mu - b||;
// t_mu = trace(I - A (A^T A + mu L^T L)^{-1} A^T).
struct GcvTerms {
  double residual_norm = 0.0;  // r_mu
  double trace = 0.0;          // t_mu
  double value() const { return residual_norm * residual_norm / (trace * trace); }
};

// O(N) per call. Throws DegenerateGcvError when t_mu is at machine zero.
GcvTerms gcv_terms(const Spectrum& sigma, const Spectrum& lx, const Spectrum& ly,
                   std::span<const Complex> b_hat, double mu);
double gcv_value(const Spectrum& sigma, const Spectrum& lx, const Spectrum& ly,
                 std::span<const Complex> b_hat, double mu);

struct GcvSearch {
  double mu_min = 1e-12;
  double mu_max = 1e2;
  int points_per_decade = 15;
  double relative_width = 1e-4;  // golden-section stop: (hi - lo) <= width * mid
};

struct GcvResult {
  double mu_gcv = 0.0;
  double g_value = 0.0;
  std::vector<std::pair<double, double>> evaluations;  // (mu, G(mu)) in probe order
  Image x_star;
  bool boundary_minimizer = false;
  std::vector<std::string> warnings;
};

// Coarse log-grid scan followed by golden-section refinement (in log mu) of
// the bracket around the best grid point. A minimiser on the grid boundary is
// returned as-is with a warning. x_star is left empty; compute_reference
// fills it.
GcvResult gcv_minimize(const Spectrum& sigma, const Spectrum& lx, const Spectrum& ly,
                       std::span<const Complex> b_hat, const GcvSearch& search = {});

// Tikhonov/GCV reference reconstruction x* (unclamped) for blurred data.
GcvResult compute_reference(const Psf& psf, const Image& b_delta, const GcvSearch& search = {});
GcvResult compute_reference(const Spectrum& sigma, const Image& b_delta, const GcvSearch& search = {});

// The (mu, G) probe log as CSV with header "mu,g".
std::string gcv_probes_csv(const GcvResult& result);

}  // namespace graphdeblur
