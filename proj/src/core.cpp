#include "graphdeblur/core.hpp"

#include <algorithm>
#include <sstream>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/simd/kernels.hpp"
#include "graphdeblur/sparse.hpp"
#include "graphdeblur/spectral.hpp"

namespace graphdeblur {

Image::Image(std::size_t n, Vector data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n_ * n_) {
    std::ostringstream os;
    os << "image data has " << data_.size() << " values, expected " << n_ << "^2 = " << n_ * n_;
    throw ConfigError(os.str());
  }
}

double Image::min() const { return data_.empty() ? 0.0 : *std::min_element(data_.begin(), data_.end()); }
double Image::max() const { return data_.empty() ? 0.0 : *std::max_element(data_.begin(), data_.end()); }

void require_same_shape(const Image& a, const Image& b, const char* what) {
  if (a.side() != b.side()) {
    std::ostringstream os;
    os << what << ": image sides differ (" << a.side() << " vs " << b.side() << ")";
    throw ConfigError(os.str());
  }
}

Objective evaluate_objective(const Spectrum& spectrum_a, const SparseMatrix& reg, const Image& x,
                             const Image& b_delta, double mu) {
  require_same_shape(x, b_delta, "evaluate_objective");
  if (spectrum_a.side() != x.side()) throw ConfigError("evaluate_objective: spectrum size differs from image");
  if (reg.cols() != x.size()) throw ConfigError("evaluate_objective: regulariser columns differ from image size");
  if (!(mu > 0.0)) throw ConfigError("evaluate_objective: mu must be positive");

  const Vector ax = bccb_apply(spectrum_a, x.values());
  const Vector lx = reg.multiply(x.values());
  Objective obj;
  obj.fidelity = 0.5 * simd::sum_sq_diff(ax, b_delta.values());
  obj.penalty = mu * simd::sum_abs(lx);
  obj.total = obj.fidelity + obj.penalty;
  obj.feasibility_gap = std::max(0.0, -x.min());
  return obj;
}

}  // namespace graphdeblur
