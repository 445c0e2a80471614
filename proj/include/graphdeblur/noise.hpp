#pragma once

#include <cstdint>
#include <string_view>

#include "graphdeblur/core.hpp"

namespace graphdeblur {

// Identity of the noise generator, recorded in sidecars. Bump the version
// whenever the output for a given seed changes.
inline constexpr std::string_view kNoiseGenerator = "splitmix64-counter/box-muller/v1";

// Counter-based standard normal stream: value i depends only on (seed, i).
Vector standard_normal(std::uint64_t seed, std::size_t count);

struct NoisyImage {
  Image image;
  double noise_norm = 0.0;  // ||eta||, equal to level * ||b||
};

// b + eta with eta Gaussian, rescaled so that ||eta|| = level * ||b||.
NoisyImage add_noise(const Image& b, double level, std::uint64_t seed);

}  // namespace graphdeblur
