#include "graphdeblur/phantom.hpp"

#include "graphdeblur/errors.hpp"

namespace graphdeblur {

Image piecewise_constant_phantom(std::size_t n) {
  if (n < 8) throw ConfigError("phantom needs n >= 8");
  Vector v(n * n, 0.1);
  const double s = static_cast<double>(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const double y = (static_cast<double>(r) + 0.5) / s;
      const double x = (static_cast<double>(c) + 0.5) / s;
      auto inside = [&](double cy, double cx, double rad) {
        return (y - cy) * (y - cy) + (x - cx) * (x - cx) < rad * rad;
      };
      double& p = v[lex_index(r, c, n)];
      if (inside(0.5, 0.5, 0.45)) p = 0.3;
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          if (inside(0.18 + 0.16 * i, 0.18 + 0.16 * j, 0.04 + 0.01 * ((i + j) % 2))) p = 0.9;
    }
  return Image(n, std::move(v));
}

}  // namespace graphdeblur
