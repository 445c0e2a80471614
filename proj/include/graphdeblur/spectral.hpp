#pragma once

#include <cstddef>
#include <span>

#include "graphdeblur/core.hpp"
#include "graphdeblur/fft.hpp"
#include "graphdeblur/psf.hpp"

namespace graphdeblur {

// Eigenvalues of a BCCB operator on an n x n grid, indexed like the 2-D DFT
// output (row frequency k1, column frequency k2, lexicographic).
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::size_t n, ComplexVector values);

  // Spectrum of the BCCB matrix whose first column is `first_column`.
  static Spectrum from_first_column(std::span<const double> first_column, std::size_t n);
  static Spectrum identity(std::size_t n) { return Spectrum(n, ComplexVector(n * n, 1.0)); }

  std::size_t side() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t k) const { return values_[k]; }
  std::span<const Complex> values() const noexcept { return values_; }

  Spectrum conj() const;
  // Largest |s(k) - conj(s(-k))| over all frequencies.
  double conjugate_symmetry_defect() const;

 private:
  std::size_t n_ = 0;
  ComplexVector values_;
};

// Relative tolerance on the imaginary part left after an inverse transform.
inline constexpr double kImagResidueTolerance = 1e-10;

// Places the PSF center at (0,0) by circular shift and transforms.
Spectrum psf_to_spectrum(const Psf& psf, std::size_t n);

// Real part of F^{-1} diag(s) F x; throws NumericError when the discarded
// imaginary part exceeds kImagResidueTolerance * ||x||.
Image bccb_apply(const Spectrum& s, const Image& x);
Vector bccb_apply(const Spectrum& s, std::span<const double> x);

// F^{-1} (|sigma|^2 + mu (|lx|^2 + |ly|^2))^{-1} conj(sigma) rhs_hat.
// With rhs_hat = F b this is the Tikhonov solution for L_TV. Throws
// SingularityError naming the first frequency with a zero denominator.
Image bccb_solve_filtered(const Spectrum& sigma, const Spectrum& lx, const Spectrum& ly, double mu,
                          std::span<const Complex> rhs_hat);

}  // namespace graphdeblur
