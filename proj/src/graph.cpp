#include "graphdeblur/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/parallel.hpp"

namespace graphdeblur {

void GraphConfig::validate() const {
  if (radius < 1) throw ConfigError("graph radius R must be >= 1");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ConfigError("graph sigma must be positive");
}

namespace {

struct RowBlock {
  std::vector<std::int64_t> counts;
  std::vector<std::int32_t> cols;
  std::vector<double> vals;
};

}  // namespace

SparseMatrix build_adjacency(const Image& x_ref, const GraphConfig& cfg) {
  cfg.validate();
  const std::size_t n = x_ref.side();
  const std::size_t big_n = x_ref.size();
  if (big_n == 0) throw ConfigError("build_adjacency: empty reference image");
  for (double v : x_ref.values())
    if (!std::isfinite(v)) throw ConfigError("build_adjacency: reference image has non-finite values");
  const auto r = static_cast<std::ptrdiff_t>(cfg.radius);
  const auto side = static_cast<std::ptrdiff_t>(n);
  const double inv_sigma = 1.0 / cfg.sigma;
  const auto& x = x_ref.vec();

  // Rows are assembled in fixed blocks of image rows and concatenated in
  // order, so the output does not depend on the number of worker threads.
  const std::size_t blocks = std::min<std::size_t>(n, 64);
  std::vector<RowBlock> parts(blocks);
  parallel_chunks(
      n,
      [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        RowBlock& part = parts[chunk];
        for (std::size_t i1 = begin; i1 < end; ++i1) {
          const auto a1 = static_cast<std::ptrdiff_t>(i1);
          for (std::ptrdiff_t a2 = 0; a2 < side; ++a2) {
            const double xi = x[static_cast<std::size_t>(a1 * side + a2)];
            std::int64_t count = 0;
            for (std::ptrdiff_t j1 = std::max<std::ptrdiff_t>(0, a1 - r); j1 <= std::min(side - 1, a1 + r); ++j1) {
              for (std::ptrdiff_t j2 = std::max<std::ptrdiff_t>(0, a2 - r); j2 <= std::min(side - 1, a2 + r); ++j2) {
                if (j1 == a1 && j2 == a2) continue;
                const std::size_t j = static_cast<std::size_t>(j1 * side + j2);
                const double d = xi - x[j];
                const double w = std::exp(-d * d * inv_sigma);
                if (w < kWeightFloor) continue;
                part.cols.push_back(static_cast<std::int32_t>(j));
                part.vals.push_back(w);
                ++count;
              }
            }
            part.counts.push_back(count);
          }
        }
      },
      blocks);

  std::vector<std::int64_t> row_ptr(big_n + 1, 0);
  std::vector<std::int32_t> col_idx;
  std::vector<double> values;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.vals.size();
  col_idx.reserve(total);
  values.reserve(total);
  std::size_t row = 0;
  for (auto& p : parts) {
    for (std::int64_t c : p.counts) {
      row_ptr[row + 1] = row_ptr[row] + c;
      ++row;
    }
    col_idx.insert(col_idx.end(), p.cols.begin(), p.cols.end());
    values.insert(values.end(), p.vals.begin(), p.vals.end());
    p = RowBlock{};
  }
  if (values.empty()) throw DegenerateGraphError("adjacency has no edges above the underflow floor");
  return SparseMatrix::from_csr(big_n, big_n, std::move(row_ptr), std::move(col_idx), std::move(values),
                                Symmetry::symmetric);
}

SparseMatrix build_laplacian(const SparseMatrix& omega) {
  if (!omega.is_symmetric()) throw ConfigError("build_laplacian: adjacency must be symmetric");
  const double fro = omega.frobenius_norm();
  if (!(fro > 0.0)) throw DegenerateGraphError("build_laplacian: adjacency has zero Frobenius norm");
  const std::size_t big_n = omega.rows();
  const auto ptr = omega.row_ptr();
  const auto idx = omega.col_idx();
  const auto val = omega.values();

  std::vector<std::int64_t> row_ptr(big_n + 1, 0);
  std::vector<std::int32_t> col_idx;
  std::vector<double> values;
  col_idx.reserve(omega.nnz() + big_n);
  values.reserve(omega.nnz() + big_n);
  for (std::size_t i = 0; i < big_n; ++i) {
    double degree = 0.0;
    for (std::int64_t p = ptr[i]; p < ptr[i + 1]; ++p) {
      if (static_cast<std::size_t>(idx[p]) == i) throw ConfigError("build_laplacian: adjacency has a nonzero diagonal");
      if (val[p] < 0.0) throw ConfigError("build_laplacian: adjacency has a negative weight");
      degree += val[p];
    }
    bool diag_done = degree == 0.0;  // isolated node: no stored diagonal
    for (std::int64_t p = ptr[i]; p < ptr[i + 1]; ++p) {
      if (!diag_done && static_cast<std::size_t>(idx[p]) > i) {
        col_idx.push_back(static_cast<std::int32_t>(i));
        values.push_back(degree / fro);
        diag_done = true;
      }
      col_idx.push_back(idx[p]);
      values.push_back(-val[p] / fro);
    }
    if (!diag_done) {
      col_idx.push_back(static_cast<std::int32_t>(i));
      values.push_back(degree / fro);
    }
    row_ptr[i + 1] = static_cast<std::int64_t>(values.size());
  }
  return SparseMatrix::from_csr(big_n, big_n, std::move(row_ptr), std::move(col_idx), std::move(values),
                                Symmetry::symmetric);
}

SparseMatrix build_graph_laplacian(const Image& x_ref, const GraphConfig& cfg) {
  return build_laplacian(build_adjacency(x_ref, cfg));
}

Vector laplacian_apply(const SparseMatrix& lap, std::span<const double> x) { return lap.multiply(x); }

}  // namespace graphdeblur
