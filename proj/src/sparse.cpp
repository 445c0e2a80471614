#include "graphdeblur/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/simd/kernels.hpp"

namespace graphdeblur {

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries,
                                         Symmetry symmetry) {
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<std::int64_t> row_ptr(rows + 1, 0);
  std::vector<std::int32_t> col_idx;
  std::vector<double> values;
  col_idx.reserve(entries.size());
  values.reserve(entries.size());
  for (const Triplet& t : entries) {
    if (t.row >= rows || t.col >= cols) throw ConfigError("sparse entry index out of range");
    ++row_ptr[t.row + 1];
    col_idx.push_back(static_cast<std::int32_t>(t.col));
    values.push_back(t.value);
  }
  for (std::size_t r = 0; r < rows; ++r) row_ptr[r + 1] += row_ptr[r];
  return from_csr(rows, cols, std::move(row_ptr), std::move(col_idx), std::move(values), symmetry);
}

SparseMatrix SparseMatrix::from_csr(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_ptr,
                                    std::vector<std::int32_t> col_idx, std::vector<double> values,
                                    Symmetry symmetry) {
  if (cols > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
    throw ConfigError("sparse matrix has too many columns for 32-bit indices");
  if (row_ptr.size() != rows + 1 || row_ptr.front() != 0 ||
      static_cast<std::size_t>(row_ptr.back()) != values.size() || col_idx.size() != values.size())
    throw ConfigError("malformed CSR arrays");
  for (std::size_t r = 0; r < rows; ++r) {
    if (row_ptr[r + 1] < row_ptr[r]) throw ConfigError("malformed CSR row pointers");
    for (std::int64_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p) {
      if (col_idx[p] < 0 || static_cast<std::size_t>(col_idx[p]) >= cols)
        throw ConfigError("sparse column index out of range");
      if (p > row_ptr[r] && col_idx[p] <= col_idx[p - 1]) {
        std::ostringstream os;
        os << "duplicate or unsorted sparse entry at (" << r << ", " << col_idx[p] << ")";
        throw ConfigError(os.str());
      }
      if (!std::isfinite(values[p])) throw ConfigError("sparse matrix contains a non-finite value");
    }
  }
  SparseMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.row_ptr_ = std::move(row_ptr);
  m.col_idx_ = std::move(col_idx);
  m.values_ = std::move(values);
  if (symmetry == Symmetry::symmetric) {
    if (rows != cols) throw ConfigError("symmetric matrix must be square");
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::int64_t p = m.row_ptr_[r]; p < m.row_ptr_[r + 1]; ++p) {
        const auto c = static_cast<std::size_t>(m.col_idx_[p]);
        const auto first = m.col_idx_.begin() + m.row_ptr_[c];
        const auto last = m.col_idx_.begin() + m.row_ptr_[c + 1];
        const auto it = std::lower_bound(first, last, static_cast<std::int32_t>(r));
        if (it == last || *it != static_cast<std::int32_t>(r) ||
            m.values_[static_cast<std::size_t>(it - m.col_idx_.begin())] != m.values_[p])
          throw ConfigError("matrix tagged symmetric is not symmetric");
      }
    }
    m.symmetric_ = true;
  } else {
    m.build_transpose();
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<std::int64_t> ptr(n + 1);
  std::vector<std::int32_t> idx(n);
  for (std::size_t i = 0; i <= n; ++i) ptr[i] = static_cast<std::int64_t>(i);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::int32_t>(i);
  return from_csr(n, n, std::move(ptr), std::move(idx), std::vector<double>(n, 1.0), Symmetry::symmetric);
}

SparseMatrix SparseMatrix::zero(std::size_t rows, std::size_t cols) {
  return from_csr(rows, cols, std::vector<std::int64_t>(rows + 1, 0), {}, {},
                  rows == cols ? Symmetry::symmetric : Symmetry::general);
}

void SparseMatrix::build_transpose() {
  std::vector<std::int64_t> ptr(cols_ + 1, 0);
  for (std::int32_t c : col_idx_) ++ptr[c + 1];
  for (std::size_t c = 0; c < cols_; ++c) ptr[c + 1] += ptr[c];
  std::vector<std::int32_t> idx(values_.size());
  std::vector<double> vals(values_.size());
  std::vector<std::int64_t> next(ptr.begin(), ptr.end() - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
      const std::int64_t q = next[col_idx_[p]]++;
      idx[q] = static_cast<std::int32_t>(r);
      vals[q] = values_[p];
    }
  }
  auto t = std::make_shared<SparseMatrix>();
  t->rows_ = cols_;
  t->cols_ = rows_;
  t->row_ptr_ = std::move(ptr);
  t->col_idx_ = std::move(idx);
  t->values_ = std::move(vals);
  transpose_ = std::move(t);
}

double SparseMatrix::coeff(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) return 0.0;
  const auto first = col_idx_.begin() + row_ptr_[r];
  const auto last = col_idx_.begin() + row_ptr_[r + 1];
  const auto it = std::lower_bound(first, last, static_cast<std::int32_t>(c));
  if (it == last || *it != static_cast<std::int32_t>(c)) return 0.0;
  return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(values_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
      out.push_back({r, static_cast<std::size_t>(col_idx_[p]), values_[p]});
  return out;
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != cols_ || y.size() != rows_) throw ConfigError("sparse multiply: dimension mismatch");
  simd::active().csr_spmv(row_ptr_.data(), col_idx_.data(), values_.data(), x.data(), y.data(), rows_);
}

void SparseMatrix::multiply_transpose(std::span<const double> x, std::span<double> y) const {
  if (symmetric_) {
    multiply(x, y);
    return;
  }
  if (x.size() != rows_ || y.size() != cols_)
    throw ConfigError("sparse transpose multiply: dimension mismatch");
  transpose_->multiply(x, y);
}

Vector SparseMatrix::multiply(std::span<const double> x) const {
  Vector y(rows_);
  multiply(x, y);
  return y;
}

Vector SparseMatrix::multiply_transpose(std::span<const double> x) const {
  Vector y(cols_);
  multiply_transpose(x, y);
  return y;
}

double SparseMatrix::frobenius_norm() const { return std::sqrt(simd::sum_sq(values_)); }

SparseMatrix SparseMatrix::scaled(double factor) const {
  SparseMatrix m = *this;
  for (double& v : m.values_) v *= factor;
  if (!symmetric_) m.build_transpose();
  return m;
}

}  // namespace graphdeblur
