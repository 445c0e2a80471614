#pragma once

#include <optional>

#include "graphdeblur/core.hpp"

namespace graphdeblur {

struct MetricsReport {
  double rre = 0.0;
  double psnr = 0.0;  // dB; +inf for identical images
  double ssim = 0.0;
};

// ||x - x_true|| / ||x_true||. Throws ConfigError when x_true is zero.
double rre(const Image& x, const Image& x_true);

// 20 log10(n * peak / ||x - x_true||), equivalent to 10 log10(peak^2 / MSE).
double psnr(const Image& x, const Image& x_true, double peak);

// Mean SSIM: 11x11 Gaussian window (std 1.5), K1 = 0.01, K2 = 0.03,
// symmetric (edge-including mirror) padding.
double ssim(const Image& x, const Image& y, double peak);

// Peak defaults to max(x_true).
MetricsReport compute_metrics(const Image& x, const Image& x_true, std::optional<double> peak = std::nullopt);

}  // namespace graphdeblur
