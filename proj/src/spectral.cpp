#include "graphdeblur/spectral.hpp"

#include <cmath>
#include <sstream>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/simd/kernels.hpp"

namespace graphdeblur {

Spectrum::Spectrum(std::size_t n, ComplexVector values) : n_(n), values_(std::move(values)) {
  if (n_ == 0 || values_.size() != n_ * n_) throw ConfigError("spectrum length must equal n*n");
}

Spectrum Spectrum::from_first_column(std::span<const double> first_column, std::size_t n) {
  return Spectrum(n, fft2::forward(first_column, n));
}

Spectrum Spectrum::conj() const {
  ComplexVector out(values_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::conj(values_[k]);
  return Spectrum(n_, std::move(out));
}

double Spectrum::conjugate_symmetry_defect() const {
  double worst = 0.0;
  for (std::size_t k1 = 0; k1 < n_; ++k1) {
    for (std::size_t k2 = 0; k2 < n_; ++k2) {
      const std::size_t m1 = (n_ - k1) % n_;
      const std::size_t m2 = (n_ - k2) % n_;
      const Complex d = values_[k1 * n_ + k2] - std::conj(values_[m1 * n_ + m2]);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

Spectrum psf_to_spectrum(const Psf& psf, std::size_t n) {
  if (psf.rows() > n || psf.cols() > n) {
    std::ostringstream os;
    os << "PSF " << psf.rows() << "x" << psf.cols() << " does not fit a " << n << "x" << n << " image";
    throw ConfigError(os.str());
  }
  Vector column(n * n, 0.0);
  for (std::size_t r = 0; r < psf.rows(); ++r) {
    for (std::size_t c = 0; c < psf.cols(); ++c) {
      const std::size_t i1 = (r + n - psf.center_row()) % n;
      const std::size_t i2 = (c + n - psf.center_col()) % n;
      column[i1 * n + i2] += psf.at(r, c);
    }
  }
  return Spectrum::from_first_column(column, n);
}

Vector bccb_apply(const Spectrum& s, std::span<const double> x) {
  if (x.size() != s.size()) throw ConfigError("bccb_apply: spectrum and image sizes differ");
  const std::size_t n = s.side();
  ComplexVector xf = fft2::forward(x, n);
  for (std::size_t k = 0; k < xf.size(); ++k) xf[k] *= s[k];
  const ComplexVector back = fft2::inverse(xf, n);
  Vector out(back.size());
  double imag_sq = 0.0;
  for (std::size_t i = 0; i < back.size(); ++i) {
    out[i] = back[i].real();
    imag_sq += back[i].imag() * back[i].imag();
  }
  const double xnorm = std::sqrt(simd::sum_sq(x));
  if (std::sqrt(imag_sq) > kImagResidueTolerance * xnorm) {
    throw NumericError("bccb_apply: imaginary residue above tolerance (spectrum is not conjugate-symmetric)");
  }
  return out;
}

Image bccb_apply(const Spectrum& s, const Image& x) {
  if (x.side() != s.side()) throw ConfigError("bccb_apply: spectrum and image sizes differ");
  return Image(x.side(), bccb_apply(s, x.values()));
}

Image bccb_solve_filtered(const Spectrum& sigma, const Spectrum& lx, const Spectrum& ly, double mu,
                          std::span<const Complex> rhs_hat) {
  const std::size_t n = sigma.side();
  if (lx.side() != n || ly.side() != n || rhs_hat.size() != sigma.size())
    throw ConfigError("bccb_solve_filtered: inconsistent spectrum sizes");
  if (!(mu >= 0.0)) throw ConfigError("bccb_solve_filtered: mu must be nonnegative");
  ComplexVector filtered(sigma.size());
  for (std::size_t k = 0; k < filtered.size(); ++k) {
    const double den = std::norm(sigma[k]) + mu * (std::norm(lx[k]) + std::norm(ly[k]));
    if (!(den > 0.0)) {
      std::ostringstream os;
      os << "bccb_solve_filtered: zero filter denominator at frequency (" << k / n << ", " << k % n << ")";
      throw SingularityError(os.str());
    }
    filtered[k] = std::conj(sigma[k]) * rhs_hat[k] / den;
  }
  Vector out(sigma.size());
  const double max_imag = fft2::inverse_real(filtered, n, out);
  double max_real = 0.0;
  for (double v : out) max_real = std::max(max_real, std::fabs(v));
  if (max_imag > kImagResidueTolerance * max_real && max_imag > 0.0)
    throw NumericError("bccb_solve_filtered: imaginary residue above tolerance");
  return Image(n, std::move(out));
}

}  // namespace graphdeblur
