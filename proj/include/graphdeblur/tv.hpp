#pragma once

#include <cstddef>

#include "graphdeblur/core.hpp"
#include "graphdeblur/sparse.hpp"
#include "graphdeblur/spectral.hpp"

namespace graphdeblur {

// Periodic first-difference operator L_TV = [L1 (x) I; I (x) L1] with
// (L1 v)_i = v_{i+1 mod n} - v_i. The first block differences along the row
// index i1, the second along the column index i2.
struct TvOperator {
  std::size_t n = 0;
  Spectrum lambda_x;  // L1 (x) I
  Spectrum lambda_y;  // I (x) L1
};

// Throws ConfigError for n < 2.
TvOperator build_tv(std::size_t n);

// 2N vector: first N entries along i1, last N along i2.
Vector tv_apply(const TvOperator& op, const Image& x);

// L_TV as an explicit 2N x N sparse matrix, used by the TV-l1 baseline.
SparseMatrix tv_matrix(std::size_t n);

}  // namespace graphdeblur
