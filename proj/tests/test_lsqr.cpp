#include <doctest.h>

#include <random>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/graph.hpp"
#include "graphdeblur/lsqr.hpp"
#include "graphdeblur/tv.hpp"
#include "oracles.hpp"

using namespace graphdeblur;

namespace {

oracle::Vec dense_normal_solve(const SparseMatrix& l, std::span<const double> top, std::span<const double> bottom) {
  const oracle::Mat d = oracle::dense(l);
  const oracle::Mat lhs = d.transpose() * d + oracle::Mat::Identity(d.cols(), d.cols());
  return lhs.ldlt().solve(d.transpose() * oracle::to_eigen(top) + oracle::to_eigen(bottom));
}

}  // namespace

TEST_CASE("zero operator returns the bottom right-hand side") {
  std::mt19937_64 rng(51);
  const auto top = oracle::random_vector(rng, 5);
  const auto bottom = oracle::random_vector(rng, 4);
  const LsqrResult r = lsqr_solve(SparseMatrix::zero(5, 4), top, bottom);
  CHECK(r.report.converged);
  for (std::size_t i = 0; i < 4; ++i) CHECK(r.y[i] == doctest::Approx(bottom[i]).epsilon(1e-14));
}

TEST_CASE("consistent right-hand side is recovered") {
  std::mt19937_64 rng(52);
  const SparseMatrix l = build_graph_laplacian(oracle::random_image(rng, 5), GraphConfig{2, 0.05});
  const auto c = oracle::random_vector(rng, 25);
  const LsqrResult r = lsqr_solve(l, l.multiply(c), c);
  CHECK(r.report.converged);
  CHECK(oracle::rel_diff(oracle::to_eigen(r.y), oracle::to_eigen(c)) <= 1e-8);
}

TEST_CASE("LSQR matches the dense normal equations on graph Laplacians") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const SparseMatrix l = build_graph_laplacian(oracle::random_image(rng, n), GraphConfig{1 + trial % 3, 1e-2});
    const auto top = oracle::random_vector(rng, n * n);
    const auto bottom = oracle::random_vector(rng, n * n);
    const LsqrResult r = lsqr_solve(l, top, bottom);
    CHECK(r.report.converged);
    CHECK(r.report.iterations <= 50);
    CHECK(r.report.relative_residual <= 1e-8);
    CHECK(oracle::rel_diff(oracle::to_eigen(r.y), dense_normal_solve(l, top, bottom)) <= 1e-8);
    // Least-squares residual never increases.
    for (std::size_t i = 1; i < r.report.residual_norms.size(); ++i)
      CHECK(r.report.residual_norms[i] <= r.report.residual_norms[i - 1] * (1.0 + 1e-12));
  }
}

TEST_CASE("LSQR handles the rectangular TV operator") {
  std::mt19937_64 rng(54);
  const SparseMatrix l = tv_matrix(6);
  const auto top = oracle::random_vector(rng, 72);
  const auto bottom = oracle::random_vector(rng, 36);
  const LsqrResult r = lsqr_solve(l, top, bottom);
  CHECK(r.report.converged);
  CHECK(oracle::rel_diff(oracle::to_eigen(r.y), dense_normal_solve(l, top, bottom)) <= 1e-8);
}

TEST_CASE("warm start converges to the same solution in fewer iterations") {
  std::mt19937_64 rng(55);
  const SparseMatrix l = build_graph_laplacian(oracle::random_image(rng, 8), GraphConfig{2, 1e-2});
  const auto top = oracle::random_vector(rng, 64);
  const auto bottom = oracle::random_vector(rng, 64);
  const LsqrResult cold = lsqr_solve(l, top, bottom);
  auto guess = cold.y;
  for (double& g : guess) g *= 1.0 + 1e-6;
  const LsqrResult warm = lsqr_solve(l, top, bottom, {}, guess);
  CHECK(warm.report.converged);
  CHECK(warm.report.iterations <= cold.report.iterations);
  CHECK(oracle::rel_diff(oracle::to_eigen(warm.y), oracle::to_eigen(cold.y)) <= 1e-8);
}

TEST_CASE("iteration cap reports non-convergence with the last iterate") {
  std::mt19937_64 rng(56);
  const SparseMatrix l = tv_matrix(8);
  const auto top = oracle::random_vector(rng, 128);
  const auto bottom = oracle::random_vector(rng, 64);
  const LsqrResult r = lsqr_solve(l, top, bottom, LsqrOptions{1e-14, 2});
  CHECK_FALSE(r.report.converged);
  CHECK(r.report.iterations == 2);
  CHECK(r.report.relative_residual > 1e-14);
}

TEST_CASE("LSQR input validation") {
  const SparseMatrix l = tv_matrix(2);
  CHECK_THROWS_AS(lsqr_solve(l, Vector(3), Vector(4)), ConfigError);
  CHECK_THROWS_AS(lsqr_solve(l, Vector(8), Vector(4), LsqrOptions{0.0, 10}), ConfigError);
  CHECK_THROWS_AS(lsqr_solve(l, Vector(8), Vector(4), {}, Vector(2)), ConfigError);
  const LsqrResult zero = lsqr_solve(l, Vector(8, 0.0), Vector(4, 0.0));
  CHECK(zero.y == Vector(4, 0.0));
  CHECK(zero.report.converged);
}
