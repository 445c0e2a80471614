#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <random>

#include "graphdeblur/graph.hpp"
#include "graphdeblur/simd/kernels.hpp"
#include "graphdeblur/tv.hpp"
#include "oracles.hpp"

using namespace graphdeblur;

namespace {

const simd::KernelTable* vector_table() {
  const simd::KernelTable* t = simd::avx2_kernels();
  return (t && simd::cpu_has_avx2()) ? t : nullptr;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("active kernel table is a known ISA") {
  const auto isa = simd::active().isa;
  CHECK((isa == simd::Isa::scalar || isa == simd::Isa::avx2));
  CHECK(simd::isa_name(simd::Isa::scalar) == "scalar");
  CHECK(simd::isa_name(simd::Isa::avx2) == "avx2");
}

TEST_CASE("vector kernels agree with the scalar reference") {
  const simd::KernelTable* v = vector_table();
  if (!v) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  const simd::KernelTable& s = simd::scalar_kernels();
  std::mt19937_64 rng(81);
  // Lengths straddle the 4-wide lanes and unrolled blocks.
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 33u, 1000u, 4099u}) {
    const auto a = oracle::random_vector(rng, n, -2.0, 2.0);
    const auto b = oracle::random_vector(rng, n, -2.0, 2.0);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale += std::abs(a[i] * b[i]) + a[i] * a[i] + b[i] * b[i];
    const double tol = 1e-14 * (scale + 1.0);

    CHECK(std::abs(s.dot(a.data(), b.data(), n) - v->dot(a.data(), b.data(), n)) <= tol);
    CHECK(std::abs(s.sum_sq(a.data(), n) - v->sum_sq(a.data(), n)) <= tol);
    CHECK(std::abs(s.sum_sq_diff(a.data(), b.data(), n) - v->sum_sq_diff(a.data(), b.data(), n)) <= 4.0 * tol);
    CHECK(std::abs(s.sum_abs(a.data(), n) - v->sum_abs(a.data(), n)) <= tol);

    auto y1 = b, y2 = b;
    s.axpy(0.37, a.data(), y1.data(), n);
    v->axpy(0.37, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-15).scale(1.0));
    y1 = b, y2 = b;
    s.axpby(-1.5, a.data(), 0.25, y1.data(), n);
    v->axpby(-1.5, a.data(), 0.25, y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-15).scale(1.0));
    y1 = a, y2 = a;
    s.scale(3.0, y1.data(), n);
    v->scale(3.0, y2.data(), n);
    CHECK(y1 == y2);

    // Thresholding and projection involve no rounding and must match bit for bit.
    std::vector<double> o1(n), o2(n);
    s.soft_threshold(a.data(), 0.7, o1.data(), n);
    v->soft_threshold(a.data(), 0.7, o2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(same_bits(o1[i], o2[i]));
    s.project_nonneg(a.data(), o1.data(), n);
    v->project_nonneg(a.data(), o2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(same_bits(o1[i], o2[i]));

    const auto z = oracle::random_vector(rng, 2 * n);
    std::vector<double> c1(2 * n), c2(2 * n);
    s.cmul_real(z.data(), a.data(), c1.data(), n);
    v->cmul_real(z.data(), a.data(), c2.data(), n);
    CHECK(c1 == c2);
  }
}

TEST_CASE("soft threshold handles signed zeros and ties identically") {
  const simd::KernelTable* v = vector_table();
  if (!v) return;
  const std::vector<double> in{0.0, -0.0, 1.0, -1.0, 1.0000001, -1.0000001, 2.0, -2.0};
  std::vector<double> o1(in.size()), o2(in.size());
  simd::scalar_kernels().soft_threshold(in.data(), 1.0, o1.data(), in.size());
  v->soft_threshold(in.data(), 1.0, o2.data(), in.size());
  for (std::size_t i = 0; i < in.size(); ++i) CHECK(same_bits(o1[i], o2[i]));
}

TEST_CASE("sparse products agree across kernel tables") {
  const simd::KernelTable* v = vector_table();
  if (!v) return;
  std::mt19937_64 rng(82);
  for (const SparseMatrix& m : {build_graph_laplacian(oracle::random_image(rng, 9), GraphConfig{3, 0.05}),
                                tv_matrix(7)}) {
    const auto x = oracle::random_vector(rng, m.cols());
    std::vector<double> y1(m.rows()), y2(m.rows());
    simd::scalar_kernels().csr_spmv(m.row_ptr().data(), m.col_idx().data(), m.values().data(), x.data(), y1.data(), m.rows());
    v->csr_spmv(m.row_ptr().data(), m.col_idx().data(), m.values().data(), x.data(), y2.data(), m.rows());
    for (std::size_t i = 0; i < y1.size(); ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14).scale(1e-14));
  }
}
