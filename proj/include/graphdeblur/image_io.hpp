#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graphdeblur/core.hpp"
#include "graphdeblur/psf.hpp"

namespace graphdeblur::io {

// Rectangular grid of samples as read from disk, row-major.
struct Grid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;
};

// PGM (P2 ASCII or P5 binary, 8 or 16 bit) scaled to [0, 1] by maxval, or
// GLF1 (magic "GLF1", u32 LE rows, u32 LE cols, row-major f64 LE) as-is.
// The format is detected from the magic bytes.
Grid read_grid(const std::string& path);

// As read_grid, then requires rows == cols.
Image read_image(const std::string& path);

// PSF from any grid file; center at (rows/2, cols/2).
Psf read_psf(const std::string& path);

void write_glf(const std::string& path, const Grid& grid);
void write_glf(const std::string& path, const Image& img);

// 8-bit P5; values are clamped to [0, 1] and scaled by 255.
void write_pgm(const std::string& path, const Image& img);
// ASCII P2 with maxval 255.
void write_pgm_ascii(const std::string& path, const Image& img);

void write_text(const std::string& path, const std::string& contents);

}  // namespace graphdeblur::io
