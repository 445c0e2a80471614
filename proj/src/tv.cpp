#include "graphdeblur/tv.hpp"

#include "graphdeblur/errors.hpp"

namespace graphdeblur {

TvOperator build_tv(std::size_t n) {
  if (n < 2) throw ConfigError("build_tv: n must be at least 2");
  // First columns of L1 (x) I and I (x) L1: -1 at the origin, +1 one step
  // "behind" it along the respective axis (the wrap-around corner of L1).
  Vector col_x(n * n, 0.0);
  Vector col_y(n * n, 0.0);
  col_x[lex_index(0, 0, n)] = -1.0;
  col_x[lex_index(n - 1, 0, n)] = 1.0;
  col_y[lex_index(0, 0, n)] = -1.0;
  col_y[lex_index(0, n - 1, n)] = 1.0;
  return TvOperator{n, Spectrum::from_first_column(col_x, n), Spectrum::from_first_column(col_y, n)};
}

Vector tv_apply(const TvOperator& op, const Image& x) {
  const std::size_t n = op.n;
  if (x.side() != n) throw ConfigError("tv_apply: image side differs from operator");
  const std::size_t big_n = n * n;
  Vector out(2 * big_n);
  const auto& v = x.vec();
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    const std::size_t next1 = (i1 + 1) % n;
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const std::size_t next2 = (i2 + 1) % n;
      const std::size_t i = i1 * n + i2;
      out[i] = v[next1 * n + i2] - v[i];
      out[big_n + i] = v[i1 * n + next2] - v[i];
    }
  }
  return out;
}

SparseMatrix tv_matrix(std::size_t n) {
  if (n < 2) throw ConfigError("tv_matrix: n must be at least 2");
  const std::size_t big_n = n * n;
  std::vector<Triplet> t;
  t.reserve(4 * big_n);
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const std::size_t i = i1 * n + i2;
      t.push_back({i, i, -1.0});
      t.push_back({i, ((i1 + 1) % n) * n + i2, 1.0});
      t.push_back({big_n + i, i, -1.0});
      t.push_back({big_n + i, i1 * n + (i2 + 1) % n, 1.0});
    }
  }
  return SparseMatrix::from_triplets(2 * big_n, big_n, std::move(t));
}

}  // namespace graphdeblur
