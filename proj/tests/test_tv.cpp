#include <doctest.h>

#include <random>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/fft.hpp"
#include "graphdeblur/spectral.hpp"
#include "graphdeblur/tv.hpp"
#include "oracles.hpp"

using namespace graphdeblur;

TEST_CASE("one-dimensional difference spectrum at n = 4") {
  const TvOperator tv = build_tv(4);
  // The forward DFT kernel is e^{-2 pi i jk/n}, so the first column
  // (-1, 0, 0, 1) transforms to e^{+2 pi i k/n} - 1.
  const Complex expected[4] = {{0, 0}, {-1, 1}, {-2, 0}, {-1, -1}};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(tv.lambda_x[lex_index(k, 0, 4)] - expected[k]) < 1e-15);
    CHECK(std::abs(tv.lambda_y[lex_index(0, k, 4)] - expected[k]) < 1e-15);
    // Conjugate-convention invariant: |lambda|^2 = 2 - 2 cos(2 pi k / n).
    const double mag = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / 4.0);
    CHECK(std::norm(tv.lambda_x[lex_index(k, 3, 4)]) == doctest::Approx(mag).scale(1.0).epsilon(1e-15));
  }
}

TEST_CASE("TV spectra vanish at DC and stay within radius 2") {
  for (std::size_t n : {2u, 3u, 7u, 16u}) {
    const TvOperator tv = build_tv(n);
    CHECK(std::abs(tv.lambda_x[0]) == 0.0);
    CHECK(std::abs(tv.lambda_y[0]) == 0.0);
    for (std::size_t k = 0; k < n * n; ++k) {
      CHECK(std::abs(tv.lambda_x[k]) <= 2.0 + 1e-15);
      CHECK(std::abs(tv.lambda_y[k]) <= 2.0 + 1e-15);
    }
  }
  CHECK_THROWS_AS(build_tv(1), ConfigError);
}

TEST_CASE("constant images are annihilated") {
  const TvOperator tv = build_tv(5);
  for (double v : tv_apply(tv, Image::constant(5, 0.7))) CHECK(v == 0.0);
}

TEST_CASE("tv_apply matches the Kronecker construction") {
  const TvOperator tv2 = build_tv(2);
  const Image x(2, {0.0, 1.0, 0.0, 1.0});
  const oracle::Vec expected2 = oracle::tv_matrix(2) * oracle::to_eigen(x.values());
  const Vector got2 = tv_apply(tv2, x);
  REQUIRE(got2.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(got2[i] == expected2[static_cast<long>(i)]);

  std::mt19937_64 rng(11);
  for (std::size_t n : {3u, 6u}) {
    const Image r = oracle::random_image(rng, n, -1.0, 1.0);
    const oracle::Vec expected = oracle::tv_matrix(n) * oracle::to_eigen(r.values());
    CHECK(oracle::rel_diff(oracle::to_eigen(tv_apply(build_tv(n), r)), expected) <= 1e-15);
    CHECK(oracle::dense(tv_matrix(n)) == oracle::tv_matrix(n));
  }
}

TEST_CASE("tv_apply agrees with the spectral route") {
  std::mt19937_64 rng(12);
  for (std::size_t n : {4u, 13u, 32u}) {
    const TvOperator tv = build_tv(n);
    const Image x = oracle::random_image(rng, n);
    const Vector direct = tv_apply(tv, x);
    const Vector via_x = bccb_apply(tv.lambda_x, x.values());
    const Vector via_y = bccb_apply(tv.lambda_y, x.values());
    double err = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < n * n; ++i) {
      err += std::pow(direct[i] - via_x[i], 2) + std::pow(direct[n * n + i] - via_y[i], 2);
      ref += direct[i] * direct[i] + direct[n * n + i] * direct[n * n + i];
    }
    CHECK(std::sqrt(err / ref) <= 1e-12);

    // Parseval: ||L x||^2 = (1/N) sum |lx|^2 + |ly|^2 times |x_hat|^2.
    const ComplexVector xh = fft2::forward(x.values(), n);
    double parseval = 0.0;
    for (std::size_t k = 0; k < n * n; ++k)
      parseval += (std::norm(tv.lambda_x[k]) + std::norm(tv.lambda_y[k])) * std::norm(xh[k]);
    parseval /= static_cast<double>(n * n);
    CHECK(ref == doctest::Approx(parseval).epsilon(1e-12));
  }
}

TEST_CASE("combined filter is positive for normalised PSFs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 8;
    const Spectrum s = psf_to_spectrum(oracle::random_psf(rng, 3, 3), n);
    const TvOperator tv = build_tv(n);
    for (std::size_t k = 0; k < n * n; ++k)
      CHECK(std::norm(s[k]) + std::norm(tv.lambda_x[k]) + std::norm(tv.lambda_y[k]) > 0.0);
  }
}
