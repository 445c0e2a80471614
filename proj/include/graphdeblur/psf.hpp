#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace graphdeblur {

// Point spread function. Weights are normalised to sum 1 on construction.
class Psf {
 public:
  // Center defaults to (rows/2, cols/2) with integer division.
  Psf(std::size_t rows, std::size_t cols, std::vector<double> data);
  Psf(std::size_t rows, std::size_t cols, std::vector<double> data, std::size_t center_row,
      std::size_t center_col);

  // Isotropic Gaussian sampled on a size x size grid.
  static Psf gaussian(double stddev, std::size_t size);
  // Uniform size x size box.
  static Psf average(std::size_t size);
  // Horizontal linear motion of the given length (1 x length box).
  static Psf motion(std::size_t length);
  static Psf delta();

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t center_row() const noexcept { return center_row_; }
  std::size_t center_col() const noexcept { return center_col_; }
  const std::vector<double>& data() const noexcept { return data_; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Short human-readable description recorded in sidecars.
  const std::string& descriptor() const noexcept { return descriptor_; }
  Psf with_descriptor(std::string d) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::size_t center_row_;
  std::size_t center_col_;
  std::string descriptor_;
};

}  // namespace graphdeblur
