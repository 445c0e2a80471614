#pragma once

#include <cstddef>
#include <span>

#include "graphdeblur/core.hpp"
#include "graphdeblur/sparse.hpp"

namespace graphdeblur {

struct GraphConfig {
  int radius = 10;      // Chebyshev neighbourhood radius R
  double sigma = 1e-2;  // kernel scale: w = exp(-(x_i - x_j)^2 / sigma)

  void validate() const;
};

// Weights below this are stored as exact zeros and dropped from the pattern.
inline constexpr double kWeightFloor = 1e-300;

// Symmetric adjacency with zero diagonal. Pixels i != j are connected when
// max(|i1-j1|, |i2-j2|) <= R on the (non-wrapping) pixel grid. Throws
// DegenerateGraphError if every weight underflows.
SparseMatrix build_adjacency(const Image& x_ref, const GraphConfig& cfg);

// (D - Omega) / ||Omega||_F.
SparseMatrix build_laplacian(const SparseMatrix& omega);

// Graph Laplacian for a reference image: build_laplacian(build_adjacency(..)).
SparseMatrix build_graph_laplacian(const Image& x_ref, const GraphConfig& cfg);

// Same construction from the exact image; exists to name the oracle operator.
inline SparseMatrix build_oracle_laplacian(const Image& x_true, const GraphConfig& cfg) {
  return build_graph_laplacian(x_true, cfg);
}

Vector laplacian_apply(const SparseMatrix& lap, std::span<const double> x);

}  // namespace graphdeblur
