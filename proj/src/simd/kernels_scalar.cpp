#include "graphdeblur/simd/kernels.hpp"

#include <cmath>

namespace graphdeblur::simd {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_sq_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
  return s;
}

double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double sum_abs_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i]);
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpby_scalar(double alpha, const double* x, double beta, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = alpha * x[i] + beta * y[i];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void soft_threshold_scalar(const double* v, double theta, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::fabs(v[i]) - theta;
    out[i] = mag > 0.0 ? std::copysign(mag, v[i]) : 0.0;
  }
}

void project_nonneg_scalar(const double* v, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = v[i] > 0.0 ? v[i] : 0.0;
}

void cmul_real_scalar(const double* z, const double* w, double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    out[2 * k] = z[2 * k] * w[k];
    out[2 * k + 1] = z[2 * k + 1] * w[k];
  }
}

void csr_spmv_scalar(const std::int64_t* row_ptr, const std::int32_t* col_idx, const double* vals,
                     const double* x, double* y, std::size_t rows) {
  for (std::size_t r = 0; r < rows; ++r) {
    double s = 0.0;
    for (std::int64_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p) s += vals[p] * x[col_idx[p]];
    y[r] = s;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      Isa::scalar,        dot_scalar,     sum_sq_scalar,         sum_sq_diff_scalar,
      sum_abs_scalar,     axpy_scalar,    axpby_scalar,          scale_scalar,
      soft_threshold_scalar, project_nonneg_scalar, cmul_real_scalar, csr_spmv_scalar,
  };
  return table;
}

}  // namespace graphdeblur::simd
