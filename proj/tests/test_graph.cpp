#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/graph.hpp"
#include "graphdeblur/matrix_market.hpp"
#include "graphdeblur/phantom.hpp"
#include "graphdeblur/tv.hpp"
#include "oracles.hpp"

using namespace graphdeblur;

TEST_CASE("constant image gives the complete graph weights") {
  const SparseMatrix w = build_adjacency(Image::constant(2, 0.3), GraphConfig{1, 1e-2});
  CHECK(w.nnz() == 12);
  CHECK(w.is_symmetric());
  const oracle::Mat expected = oracle::Mat::Ones(4, 4) - oracle::Mat::Identity(4, 4);
  CHECK(oracle::dense(w) == expected);

  const SparseMatrix l = build_laplacian(w);
  const oracle::Mat lexp = (3.0 * oracle::Mat::Identity(4, 4) - expected) / std::sqrt(12.0);
  CHECK((oracle::dense(l) - lexp).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(oracle::dense(build_oracle_laplacian(Image::constant(2, 0.3), GraphConfig{1, 1e-2})) == oracle::dense(l));
}

TEST_CASE("two-level image weights") {
  const SparseMatrix w = build_adjacency(Image(2, {0.0, 1.0, 0.0, 1.0}), GraphConfig{1, 1.0});
  const double e = std::exp(-1.0);
  oracle::Mat expected(4, 4);
  expected << 0, e, 1, e,  //
      e, 0, e, 1,          //
      1, e, 0, e,          //
      e, 1, e, 0;
  CHECK((oracle::dense(w) - expected).cwiseAbs().maxCoeff() <= 1e-16);
}

TEST_CASE("single connected pair") {
  const SparseMatrix w = SparseMatrix::from_triplets(2, 2, {{0, 1, 1.0}, {1, 0, 1.0}}, Symmetry::symmetric);
  const oracle::Mat l = oracle::dense(build_laplacian(w));
  CHECK(l(0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(l(0, 1) == doctest::Approx(-1.0 / std::sqrt(2.0)));
}

TEST_CASE("graph matches the dense brute-force construction") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 3 + trial;
    const Image x = oracle::random_image(rng, n);
    const GraphConfig cfg{1 + trial % 3, 0.05};
    const oracle::Mat got = oracle::dense(build_graph_laplacian(x, cfg));
    const oracle::Mat expected = oracle::graph_laplacian(x, cfg.radius, cfg.sigma);
    CHECK((got - expected).cwiseAbs().maxCoeff() <= 1e-15);
  }
}

TEST_CASE("Laplacian invariants") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 4 + 2 * (trial % 3);
    const Image x = oracle::random_image(rng, n);
    const GraphConfig cfg{1 + trial % 4, 1e-2};
    const SparseMatrix w = build_adjacency(x, cfg);
    const SparseMatrix l = build_laplacian(w);
    const oracle::Mat d = oracle::dense(l);
    CHECK(d == d.transpose());
    CHECK(d.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-12);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(d);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
    for (double v : w.values()) CHECK((v > 0.0 && v <= 1.0));
    const std::size_t cap = static_cast<std::size_t>((2 * cfg.radius + 1) * (2 * cfg.radius + 1) - 1);
    for (std::size_t r = 0; r < w.rows(); ++r) CHECK(w.row_nnz(r) <= cap);
    // Scaling round trip: ||D - Omega||_F / ||L||_F = ||Omega||_F.
    oracle::Mat unscaled = -oracle::dense(w);
    for (long i = 0; i < unscaled.rows(); ++i) unscaled(i, i) = oracle::dense(w).row(i).sum();
    CHECK(unscaled.norm() / d.norm() == doctest::Approx(w.frobenius_norm()).epsilon(1e-12));
    // Dirichlet form.
    const auto v = oracle::random_vector(rng, n * n);
    const oracle::Vec ve = oracle::to_eigen(v);
    double form = 0.0;
    const oracle::Mat wd = oracle::dense(w);
    for (long i = 0; i < wd.rows(); ++i)
      for (long j = i + 1; j < wd.cols(); ++j) form += wd(i, j) * (v[i] - v[j]) * (v[i] - v[j]);
    form /= w.frobenius_norm();
    CHECK(ve.dot(d * ve) == doctest::Approx(form).epsilon(1e-12));
    CHECK(form >= 0.0);
  }
}

TEST_CASE("neighbourhoods do not wrap around the border") {
  const SparseMatrix w = build_adjacency(Image::constant(5, 0.0), GraphConfig{1, 1e-2});
  CHECK(w.row_nnz(lex_index(0, 0, 5)) == 3);
  CHECK(w.row_nnz(lex_index(2, 2, 5)) == 8);
  CHECK(w.coeff(lex_index(0, 0, 5), lex_index(0, 4, 5)) == 0.0);
}

TEST_CASE("underflowing weights are dropped and all-underflow is degenerate") {
  // exp(-1 / 1e-300) underflows to zero.
  const Image checker(2, {0.0, 1.0, 1.0, 0.0});
  const SparseMatrix w = build_adjacency(checker, GraphConfig{1, 1e-3});
  CHECK(w.nnz() == 4);  // only the equal-valued diagonal pairs survive
  CHECK_THROWS_AS(build_adjacency(Image(2, {0.0, 1.0, 2.0, 3.0}), GraphConfig{1, 1e-4}), DegenerateGraphError);
  CHECK_THROWS_AS(build_adjacency(Image::constant(2, 0.0), GraphConfig{0, 1e-2}), ConfigError);
  CHECK_THROWS_AS(build_adjacency(Image::constant(2, 0.0), GraphConfig{1, 0.0}), ConfigError);
}

TEST_CASE("laplacian_apply") {
  std::mt19937_64 rng(33);
  const Image ref = oracle::random_image(rng, 3);
  const SparseMatrix l = build_graph_laplacian(ref, GraphConfig{2, 0.1});
  for (double v : laplacian_apply(l, Image::constant(3, 4.0).values())) CHECK(std::abs(v) <= 1e-15);
  const auto x = oracle::random_vector(rng, 9);
  const oracle::Vec expected = oracle::dense(l) * oracle::to_eigen(x);
  CHECK(oracle::rel_diff(oracle::to_eigen(laplacian_apply(l, x)), expected) <= 1e-14);
}

TEST_CASE("piecewise-constant reference concentrates L x on borders") {
  const std::size_t n = 8;
  Vector v(n * n, 0.2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 4; j < n; ++j) v[lex_index(i, j, n)] = 0.9;
  const Image x(n, v);
  const SparseMatrix l = build_graph_laplacian(x, GraphConfig{1, 1e-2});
  const Vector lx = laplacian_apply(l, x.values());
  const oracle::Vec dense = oracle::dense(l) * oracle::to_eigen(x.values());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = lex_index(i, j, n);
      CHECK(lx[k] == doctest::Approx(dense[static_cast<long>(k)]).scale(1.0).epsilon(1e-14));
      if (j <= 2 || j >= 5) CHECK(std::abs(lx[k]) <= 1e-15);
    }
}

TEST_CASE("oracle Laplacian is sparser on the truth than the data-driven one") {
  const std::size_t n = 32;
  const Image x = piecewise_constant_phantom(n);
  std::mt19937_64 rng(34);
  Vector noisy = x.vec();
  std::normal_distribution<double> g(0.0, 0.05);
  for (double& v : noisy) v += g(rng);
  const GraphConfig cfg{3, 1e-2};
  auto l1 = [](const Vector& v) {
    double s = 0.0;
    for (double a : v) s += std::abs(a);
    return s;
  };
  const double oracle_norm = l1(laplacian_apply(build_oracle_laplacian(x, cfg), x.values()));
  const double data_norm = l1(laplacian_apply(build_graph_laplacian(Image(n, noisy), cfg), x.values()));
  CHECK(oracle_norm <= data_norm);
}

TEST_CASE("graph assembly is deterministic across thread counts") {
  const Image x = piecewise_constant_phantom(24);
  const SparseMatrix a = build_graph_laplacian(x, GraphConfig{4, 1e-2});
  const SparseMatrix b = build_graph_laplacian(x, GraphConfig{4, 1e-2});
  CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin(), b.values().end()));
  CHECK(std::equal(a.col_idx().begin(), a.col_idx().end(), b.col_idx().begin(), b.col_idx().end()));
}
