#include "graphdeblur/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "graphdeblur/errors.hpp"

namespace graphdeblur::fft2 {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// FFTW's planner is not thread-safe; fftw_execute_dft on an existing plan is.
// FFTW_ESTIMATE keeps the chosen algorithm, and therefore every bit of the
// output, independent of timing measurements.
const PlanPair& plans_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const int side = static_cast<int>(n);
  ComplexVector scratch(n * n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p;
  p.forward = fftw_plan_dft_2d(side, side, buf, buf, FFTW_FORWARD, flags);
  p.backward = fftw_plan_dft_2d(side, side, buf, buf, FFTW_BACKWARD, flags);
  if (!p.forward || !p.backward) throw NumericError("FFTW failed to create a plan");
  return cache.emplace(n, p).first->second;
}

void check_size(std::size_t size, std::size_t n) {
  if (n == 0 || size != n * n) throw ConfigError("fft2: buffer length does not match n*n");
}

void execute(fftw_plan plan, ComplexVector& data) {
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace

ComplexVector forward(std::span<const double> x, std::size_t n) {
  check_size(x.size(), n);
  ComplexVector out(x.begin(), x.end());
  execute(plans_for(n).forward, out);
  return out;
}

ComplexVector forward(std::span<const Complex> x, std::size_t n) {
  check_size(x.size(), n);
  ComplexVector out(x.begin(), x.end());
  execute(plans_for(n).forward, out);
  return out;
}

ComplexVector inverse(std::span<const Complex> x, std::size_t n) {
  check_size(x.size(), n);
  ComplexVector out(x.begin(), x.end());
  execute(plans_for(n).backward, out);
  const double inv = 1.0 / static_cast<double>(n * n);
  for (auto& v : out) v *= inv;
  return out;
}

double inverse_real(std::span<const Complex> x, std::size_t n, std::span<double> out) {
  check_size(out.size(), n);
  const ComplexVector full = inverse(x, n);
  double max_imag = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    out[i] = full[i].real();
    max_imag = std::max(max_imag, std::fabs(full[i].imag()));
  }
  return max_imag;
}

}  // namespace graphdeblur::fft2
