#pragma once

#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <span>
#include <utility>
#include <vector>

namespace graphdeblur {

class SparseMatrix;
class Spectrum;

using Vector = std::vector<double>;

// Programming-error check that stays active in release builds.
#define GD_CHECK(cond)                                                          \
  do {                                                                          \
    if (!(cond)) {                                                              \
      std::fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      std::abort();                                                             \
    }                                                                           \
  } while (0)

// Row-major (lexicographic) index of pixel (i1, i2) in an n x n grid.
constexpr std::size_t lex_index(std::size_t i1, std::size_t i2, std::size_t n) {
  GD_CHECK(i1 < n && i2 < n);
  return i1 * n + i2;
}

constexpr std::pair<std::size_t, std::size_t> lex_unindex(std::size_t i, std::size_t n) {
  GD_CHECK(n > 0 && i < n * n);
  return {i / n, i % n};
}

// Square grayscale image of side n stored as n*n doubles in lexicographic order.
class Image {
 public:
  Image() = default;
  // Throws ConfigError when data.size() != n*n.
  Image(std::size_t n, Vector data);

  static Image zeros(std::size_t n) { return Image(n, Vector(n * n, 0.0)); }
  static Image constant(std::size_t n, double value) { return Image(n, Vector(n * n, value)); }

  std::size_t side() const noexcept { return n_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double operator[](std::size_t i) const { return data_[i]; }
  double at(std::size_t i1, std::size_t i2) const { return data_[lex_index(i1, i2, n_)]; }

  std::span<const double> values() const noexcept { return data_; }
  const Vector& vec() const noexcept { return data_; }

  double min() const;
  double max() const;

  bool operator==(const Image&) const = default;

 private:
  std::size_t n_ = 0;
  Vector data_;
};

// Throws ConfigError unless both images have the same side.
void require_same_shape(const Image& a, const Image& b, const char* what);

struct Objective {
  double fidelity = 0.0;         // 0.5 * ||A x - b||^2
  double penalty = 0.0;          // mu * ||L x||_1
  double total = 0.0;            // fidelity + penalty
  double feasibility_gap = 0.0;  // max(0, -min(x))
};

// Objective of the constrained l2-l1 model for blur spectrum A and sparse
// regulariser L (L may be rectangular, e.g. the stacked TV operator).
Objective evaluate_objective(const Spectrum& spectrum_a, const SparseMatrix& reg,
                             const Image& x, const Image& b_delta, double mu);

}  // namespace graphdeblur
