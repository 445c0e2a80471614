#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "graphdeblur/core.hpp"

namespace graphdeblur {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

enum class Symmetry { general, symmetric };

// Immutable sparse matrix in compressed-row form with sorted column indices.
// Rectangular matrices keep a compressed copy of their transpose so that
// A^T x costs the same as A x; symmetric matrices reuse their own rows.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  // Rejects duplicate (row, col) pairs, out-of-range indices and non-finite
  // values; with Symmetry::symmetric, also requires the pattern and values to
  // be mirror images. Input order is irrelevant.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries,
                                    Symmetry symmetry = Symmetry::general);
  // Takes ownership of pre-built CSR arrays; validates as above.
  static SparseMatrix from_csr(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_ptr,
                               std::vector<std::int32_t> col_idx, std::vector<double> values,
                               Symmetry symmetry = Symmetry::general);
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return values_.size(); }
  bool is_symmetric() const noexcept { return symmetric_; }

  std::span<const std::int64_t> row_ptr() const noexcept { return row_ptr_; }
  std::span<const std::int32_t> col_idx() const noexcept { return col_idx_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t row_nnz(std::size_t r) const { return static_cast<std::size_t>(row_ptr_[r + 1] - row_ptr_[r]); }

  // Stored value or 0.
  double coeff(std::size_t r, std::size_t c) const;
  std::vector<Triplet> triplets() const;

  void multiply(std::span<const double> x, std::span<double> y) const;
  void multiply_transpose(std::span<const double> x, std::span<double> y) const;
  Vector multiply(std::span<const double> x) const;
  Vector multiply_transpose(std::span<const double> x) const;

  double frobenius_norm() const;
  SparseMatrix scaled(double factor) const;

 private:
  void build_transpose();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool symmetric_ = false;
  std::vector<std::int64_t> row_ptr_{0};
  std::vector<std::int32_t> col_idx_;
  std::vector<double> values_;
  std::shared_ptr<const SparseMatrix> transpose_;
};

}  // namespace graphdeblur
