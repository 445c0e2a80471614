#include "graphdeblur/psf.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "graphdeblur/errors.hpp"

namespace graphdeblur {

Psf::Psf(std::size_t rows, std::size_t cols, std::vector<double> data)
    : Psf(rows, cols, std::move(data), rows / 2, cols / 2) {}

Psf::Psf(std::size_t rows, std::size_t cols, std::vector<double> data, std::size_t center_row,
         std::size_t center_col)
    : rows_(rows),
      cols_(cols),
      data_(std::move(data)),
      center_row_(center_row),
      center_col_(center_col) {
  if (rows_ == 0 || cols_ == 0) throw ConfigError("PSF must have positive extents");
  if (data_.size() != rows_ * cols_) throw ConfigError("PSF data length does not match rows*cols");
  if (center_row_ >= rows_ || center_col_ >= cols_) throw ConfigError("PSF center outside kernel");
  double sum = 0.0;
  for (double v : data_) {
    if (!std::isfinite(v)) throw ConfigError("PSF contains non-finite weights");
    sum += v;
  }
  if (sum == 0.0) throw ConfigError("PSF weights sum to zero");
  for (double& v : data_) v /= sum;
  std::ostringstream os;
  os << "file:" << rows_ << "x" << cols_;
  descriptor_ = os.str();
}

Psf Psf::gaussian(double stddev, std::size_t size) {
  if (!(stddev > 0.0) || size == 0) throw ConfigError("gaussian PSF needs stddev > 0 and size >= 1");
  std::vector<double> w(size * size);
  const double c = 0.5 * static_cast<double>(size - 1);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t q = 0; q < size; ++q) {
      const double dr = static_cast<double>(r) - c;
      const double dq = static_cast<double>(q) - c;
      w[r * size + q] = std::exp(-(dr * dr + dq * dq) / (2.0 * stddev * stddev));
    }
  }
  std::ostringstream os;
  os.precision(17);
  os << "gaussian:std=" << stddev << ":size=" << size;
  return Psf(size, size, std::move(w)).with_descriptor(os.str());
}

Psf Psf::average(std::size_t size) {
  if (size == 0) throw ConfigError("average PSF needs size >= 1");
  return Psf(size, size, std::vector<double>(size * size, 1.0))
      .with_descriptor("average:size=" + std::to_string(size));
}

Psf Psf::motion(std::size_t length) {
  if (length == 0) throw ConfigError("motion PSF needs length >= 1");
  return Psf(1, length, std::vector<double>(length, 1.0))
      .with_descriptor("motion:length=" + std::to_string(length));
}

Psf Psf::delta() { return Psf(1, 1, {1.0}).with_descriptor("delta"); }

Psf Psf::with_descriptor(std::string d) const {
  Psf copy = *this;
  copy.descriptor_ = std::move(d);
  return copy;
}

}  // namespace graphdeblur
