#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace graphdeblur {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// 2-D DFT over an n x n row-major grid. Forward is unnormalised with the
// e^{-2 pi i jk/n} kernel; inverse carries the 1/N factor, so
// inverse(forward(x)) == x. Plans are cached per side and shared across
// threads; execution is reentrant.
namespace fft2 {

ComplexVector forward(std::span<const double> x, std::size_t n);
ComplexVector forward(std::span<const Complex> x, std::size_t n);
ComplexVector inverse(std::span<const Complex> x, std::size_t n);

// Inverse transform into `out`, returning the largest |imag| encountered.
double inverse_real(std::span<const Complex> x, std::size_t n, std::span<double> out);

}  // namespace fft2
}  // namespace graphdeblur
