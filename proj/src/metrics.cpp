#include "graphdeblur/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/simd/kernels.hpp"

namespace graphdeblur {

double rre(const Image& x, const Image& x_true) {
  require_same_shape(x, x_true, "rre");
  const double ref = std::sqrt(simd::sum_sq(x_true.values()));
  if (!(ref > 0.0)) throw ConfigError("rre: reference image has zero norm");
  return std::sqrt(simd::sum_sq_diff(x.values(), x_true.values())) / ref;
}

double psnr(const Image& x, const Image& x_true, double peak) {
  require_same_shape(x, x_true, "psnr");
  if (!(peak > 0.0)) throw ConfigError("psnr: peak must be positive");
  const double err = std::sqrt(simd::sum_sq_diff(x.values(), x_true.values()));
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 20.0 * std::log10(static_cast<double>(x.side()) * peak / err);
}

namespace {

constexpr int kRadius = 5;
constexpr double kWindowStd = 1.5;

std::array<double, 2 * kRadius + 1> gaussian_taps() {
  std::array<double, 2 * kRadius + 1> g{};
  double sum = 0.0;
  for (int i = -kRadius; i <= kRadius; ++i) {
    g[i + kRadius] = std::exp(-static_cast<double>(i * i) / (2.0 * kWindowStd * kWindowStd));
    sum += g[i + kRadius];
  }
  for (double& v : g) v /= sum;
  return g;
}

// Mirror index with the edge sample repeated: -1 -> 0, n -> n-1.
std::size_t reflect(long i, long n) {
  const long period = 2 * n;
  long k = i % period;
  if (k < 0) k += period;
  return static_cast<std::size_t>(k < n ? k : period - 1 - k);
}

// Separable Gaussian filter with symmetric padding.
Vector blur(const Vector& img, std::size_t n) {
  static const auto taps = gaussian_taps();
  const long side = static_cast<long>(n);
  Vector tmp(img.size()), out(img.size());
  for (long r = 0; r < side; ++r)
    for (long c = 0; c < side; ++c) {
      double s = 0.0;
      for (int t = -kRadius; t <= kRadius; ++t) s += taps[t + kRadius] * img[r * side + reflect(c + t, side)];
      tmp[r * side + c] = s;
    }
  for (long r = 0; r < side; ++r)
    for (long c = 0; c < side; ++c) {
      double s = 0.0;
      for (int t = -kRadius; t <= kRadius; ++t) s += taps[t + kRadius] * tmp[reflect(r + t, side) * side + c];
      out[r * side + c] = s;
    }
  return out;
}

}  // namespace

double ssim(const Image& x, const Image& y, double peak) {
  require_same_shape(x, y, "ssim");
  if (!(peak > 0.0)) throw ConfigError("ssim: peak must be positive");
  const std::size_t n = x.side();
  const std::size_t big_n = x.size();
  const double c1 = (0.01 * peak) * (0.01 * peak);
  const double c2 = (0.03 * peak) * (0.03 * peak);
  Vector xx(big_n), yy(big_n), xy(big_n);
  for (std::size_t i = 0; i < big_n; ++i) {
    xx[i] = x[i] * x[i];
    yy[i] = y[i] * y[i];
    xy[i] = x[i] * y[i];
  }
  const Vector mx = blur(x.vec(), n);
  const Vector my = blur(y.vec(), n);
  const Vector sxx = blur(xx, n);
  const Vector syy = blur(yy, n);
  const Vector sxy = blur(xy, n);
  double total = 0.0;
  for (std::size_t i = 0; i < big_n; ++i) {
    const double mxy = mx[i] * my[i];
    const double vx = sxx[i] - mx[i] * mx[i];
    const double vy = syy[i] - my[i] * my[i];
    const double cov = sxy[i] - mxy;
    total += ((2.0 * mxy + c1) * (2.0 * cov + c2)) / ((mx[i] * mx[i] + my[i] * my[i] + c1) * (vx + vy + c2));
  }
  return total / static_cast<double>(big_n);
}

MetricsReport compute_metrics(const Image& x, const Image& x_true, std::optional<double> peak) {
  const double m = peak.value_or(x_true.max());
  return MetricsReport{rre(x, x_true), psnr(x, x_true, m), ssim(x, x_true, m)};
}

}  // namespace graphdeblur
