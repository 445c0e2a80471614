#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops used by the solvers. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2+FMA variant. The active
// table is chosen once at runtime from CPUID and can be forced with the
// environment variable GRAPHDEBLUR_SIMD=scalar|avx2.
namespace graphdeblur::simd {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum_sq)(const double* a, std::size_t n);
  double (*sum_sq_diff)(const double* a, const double* b, std::size_t n);
  double (*sum_abs)(const double* a, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y = alpha * x + beta * y
  void (*axpby)(double alpha, const double* x, double beta, double* y, std::size_t n);
  void (*scale)(double alpha, double* x, std::size_t n);
  // out = sign(v) * max(|v| - theta, 0)
  void (*soft_threshold)(const double* v, double theta, double* out, std::size_t n);
  // out = max(v, 0)
  void (*project_nonneg)(const double* v, double* out, std::size_t n);
  // Complex-by-real product on interleaved (re, im) pairs; n counts complex values.
  void (*cmul_real)(const double* z, const double* w, double* out, std::size_t n);
  // y = A x for a CSR matrix with `rows` rows.
  void (*csr_spmv)(const std::int64_t* row_ptr, const std::int32_t* col_idx, const double* vals,
                   const double* x, double* y, std::size_t rows);
};

const KernelTable& scalar_kernels();
// nullptr when the binary was built without AVX2 support for this target.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();
const KernelTable& active();
std::string_view isa_name(Isa isa);

// Span conveniences over the active table.
inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline double sum_sq(std::span<const double> a) { return active().sum_sq(a.data(), a.size()); }
inline double sum_sq_diff(std::span<const double> a, std::span<const double> b) {
  return active().sum_sq_diff(a.data(), b.data(), a.size());
}
inline double sum_abs(std::span<const double> a) { return active().sum_abs(a.data(), a.size()); }
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), y.size());
}
inline void axpby(double alpha, std::span<const double> x, double beta, std::span<double> y) {
  active().axpby(alpha, x.data(), beta, y.data(), y.size());
}
inline void scale(double alpha, std::span<double> x) { active().scale(alpha, x.data(), x.size()); }
inline void cmul_real(std::span<const std::complex<double>> z, std::span<const double> w,
                      std::span<std::complex<double>> out) {
  active().cmul_real(reinterpret_cast<const double*>(z.data()), w.data(),
                     reinterpret_cast<double*>(out.data()), z.size());
}

}  // namespace graphdeblur::simd
