#include "graphdeblur/noise.hpp"

#include <cmath>
#include <numbers>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/simd/kernels.hpp"

namespace graphdeblur {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform in (0, 1]: 53 random bits, offset so log() never sees zero.
double uniform(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t bits = splitmix64(seed ^ splitmix64(counter)) >> 11;
  return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

}  // namespace

Vector standard_normal(std::uint64_t seed, std::size_t count) {
  Vector out(count);
  for (std::size_t i = 0; i < count; i += 2) {
    const std::uint64_t pair = i / 2;
    const double u1 = uniform(seed, 2 * pair);
    const double u2 = uniform(seed, 2 * pair + 1);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    out[i] = radius * std::cos(angle);
    if (i + 1 < count) out[i + 1] = radius * std::sin(angle);
  }
  return out;
}

NoisyImage add_noise(const Image& b, double level, std::uint64_t seed) {
  if (!(level >= 0.0) || !std::isfinite(level)) throw ConfigError("noise level must be finite and nonnegative");
  if (level == 0.0) return NoisyImage{b, 0.0};
  Vector eta = standard_normal(seed, b.size());
  const double eta_norm = std::sqrt(simd::sum_sq(eta));
  const double target = level * std::sqrt(simd::sum_sq(b.values()));
  if (eta_norm > 0.0) simd::scale(target / eta_norm, eta);
  Vector out = b.vec();
  simd::axpy(1.0, eta, out);
  return NoisyImage{Image(b.side(), std::move(out)), std::sqrt(simd::sum_sq(eta))};
}

}  // namespace graphdeblur
