#pragma once

#include <cstddef>

#include "graphdeblur/core.hpp"

namespace graphdeblur {

// Piecewise-constant test scene on an n x n grid with values in [0, 1]: a
// large disk on a dark background carrying a 5 x 5 array of small bright
// dots of two radii. Geometry scales with n.
Image piecewise_constant_phantom(std::size_t n);

}  // namespace graphdeblur
