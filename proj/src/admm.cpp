#include "graphdeblur/admm.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/fft.hpp"
#include "graphdeblur/simd/kernels.hpp"

namespace graphdeblur {

Vector soft_threshold(std::span<const double> v, double theta) {
  if (!(theta >= 0.0)) throw ConfigError("soft_threshold: theta must be nonnegative");
  Vector out(v.size());
  simd::active().soft_threshold(v.data(), theta, out.data(), v.size());
  return out;
}

Vector project_nonneg(std::span<const double> v) {
  Vector out(v.size());
  simd::active().project_nonneg(v.data(), out.data(), v.size());
  return out;
}

void AdmmConfig::validate() const {
  if (!(rho > 0.0)) throw ConfigError("ADMM rho must be positive");
  if (!(tau >= 0.0)) throw ConfigError("ADMM tau must be nonnegative");
  if (max_iter < 1) throw ConfigError("ADMM max_iter must be at least 1");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw ConfigError("ADMM mu must be finite and nonnegative");
  if (!(divergence_factor > 0.0)) throw ConfigError("ADMM divergence factor must be positive");
}

namespace {

double norm2(std::span<const double> a) { return std::sqrt(simd::sum_sq(a)); }

bool all_finite(std::span<const double> a) {
  for (double v : a)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

AdmmResult admm_deblur(const Spectrum& sigma_a, const SparseMatrix& reg, const Image& b_delta,
                       const AdmmConfig& cfg, const AdmmObserver& observer) {
  cfg.validate();
  const std::size_t n = b_delta.side();
  const std::size_t big_n = b_delta.size();
  if (sigma_a.side() != n) throw ConfigError("admm_deblur: blur spectrum and image sizes differ");
  if (reg.cols() != big_n) throw ConfigError("admm_deblur: regulariser columns differ from image size");
  const std::size_t m = reg.rows();
  const double rho = cfg.rho;
  const double inv_rho = 1.0 / rho;

  // Per-frequency data for the x-update (A^T A + 2 rho I)^{-1}.
  const ComplexVector b_hat = fft2::forward(b_delta.values(), n);
  ComplexVector atb_hat(big_n);
  Vector inv_den(big_n);
  for (std::size_t k = 0; k < big_n; ++k) {
    atb_hat[k] = std::conj(sigma_a[k]) * b_hat[k];
    inv_den[k] = 1.0 / (std::norm(sigma_a[k]) + 2.0 * rho);
  }
  const double b_norm = norm2(b_delta.values());
  const double x_limit = cfg.divergence_factor * b_norm;
  const double inv_big_n = 1.0 / static_cast<double>(big_n);

  AdmmState s;
  s.x.assign(big_n, 0.0);
  s.y.assign(big_n, 0.0);
  s.w.assign(big_n, 0.0);
  s.z.assign(m, 0.0);
  s.lambda1.assign(big_n, 0.0);
  s.lambda2.assign(m, 0.0);
  s.lambda3.assign(big_n, 0.0);

  AdmmResult result;
  AdmmTrace& trace = result.trace;
  Vector ly(m, 0.0);  // L y^{(k)}
  Vector work(big_n), work_m(m), top(m), bottom(big_n), x_prev(big_n);
  ComplexVector x_hat(big_n);
  AdmmState before;

  for (int k = 0; k < cfg.max_iter; ++k) {
    if (observer) before = s;
    x_prev = s.x;

    // x = (A^T A + 2 rho I)^{-1} (A^T b + rho y - lambda1 + rho w - lambda3)
    for (std::size_t i = 0; i < big_n; ++i)
      work[i] = rho * s.y[i] - s.lambda1[i] + rho * s.w[i] - s.lambda3[i];
    ComplexVector rhs_hat = fft2::forward(work, n);
    for (std::size_t i = 0; i < big_n; ++i) rhs_hat[i] += atb_hat[i];
    simd::cmul_real(rhs_hat, inv_den, x_hat);
    fft2::inverse_real(x_hat, n, s.x);
    double fidelity = 0.0;
    for (std::size_t i = 0; i < big_n; ++i) fidelity += std::norm(sigma_a[i] * x_hat[i] - b_hat[i]);
    fidelity *= 0.5 * inv_big_n;

    // z = S_{mu/rho}(L y - lambda2 / rho)
    work_m = ly;
    simd::axpy(-inv_rho, s.lambda2, work_m);
    simd::active().soft_threshold(work_m.data(), cfg.mu * inv_rho, s.z.data(), m);

    // y = argmin || [L; I] y - [z + lambda2/rho; x + lambda1/rho] ||
    top = s.z;
    simd::axpy(inv_rho, s.lambda2, top);
    bottom = s.x;
    simd::axpy(inv_rho, s.lambda1, bottom);
    LsqrResult ls = lsqr_solve(reg, top, bottom, cfg.lsqr, s.y);
    s.y = std::move(ls.y);
    if (!ls.report.converged) ++trace.lsqr_failures;

    // w = P_+(x + lambda3 / rho)
    work = s.x;
    simd::axpy(inv_rho, s.lambda3, work);
    simd::active().project_nonneg(work.data(), s.w.data(), big_n);

    // Multipliers.
    reg.multiply(s.y, ly);
    AdmmRecord rec;
    rec.k = k;
    for (std::size_t i = 0; i < big_n; ++i) work[i] = s.x[i] - s.y[i];
    rec.res_xy = norm2(work);
    simd::axpy(rho, work, s.lambda1);
    for (std::size_t i = 0; i < m; ++i) work_m[i] = s.z[i] - ly[i];
    rec.res_zly = norm2(work_m);
    simd::axpy(rho, work_m, s.lambda2);
    for (std::size_t i = 0; i < big_n; ++i) work[i] = s.x[i] - s.w[i];
    rec.res_xw = norm2(work);
    simd::axpy(rho, work, s.lambda3);
    s.k = k + 1;

    const double lambda_norm = std::sqrt(simd::sum_sq(s.lambda1) + simd::sum_sq(s.lambda2) + simd::sum_sq(s.lambda3));
    const double step = rho * std::sqrt(rec.res_xy * rec.res_xy + rec.res_zly * rec.res_zly + rec.res_xw * rec.res_xw);
    rec.lambda_change = lambda_norm > 0.0 ? step / lambda_norm : 0.0;
    rec.objective = fidelity + cfg.mu * simd::sum_abs(s.z);
    const double x_norm = norm2(s.x);
    const double prev_norm = norm2(x_prev);
    const double diff = std::sqrt(simd::sum_sq_diff(s.x, x_prev));
    rec.relchange = prev_norm > 0.0 ? diff / prev_norm : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    rec.lsqr_iterations = ls.report.iterations;
    rec.lsqr_converged = ls.report.converged;
    trace.records.push_back(rec);

    if (!std::isfinite(x_norm) || !all_finite(s.z) || !all_finite(s.y) || !std::isfinite(lambda_norm)) {
      throw DivergenceError("admm_deblur: non-finite iterate at iteration " + std::to_string(k + 1), k + 1);
    }
    if (x_norm > x_limit && x_norm > 0.0) {
      throw DivergenceError("admm_deblur: ||x|| exceeded the divergence guard at iteration " + std::to_string(k + 1),
                            k + 1);
    }
    if (observer) observer(before, s);
    if (k > 1 && diff <= cfg.tau * prev_norm) {
      trace.stopped_by_tolerance = true;
      break;
    }
  }
  if (trace.lsqr_failures > 0) {
    trace.warnings.push_back("inner LSQR did not reach its tolerance in " + std::to_string(trace.lsqr_failures) +
                             " iteration(s)");
  }
  result.x = Image(n, project_nonneg(s.x));
  result.state = std::move(s);
  return result;
}

std::string trace_csv(const AdmmTrace& trace) {
  std::string out = "k,res_xy,res_zLy,res_xw,objective,relchange\n";
  char buf[256];
  for (const AdmmRecord& r : trace.records) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.k + 1, r.res_xy, r.res_zly, r.res_xw,
                  r.objective, r.relchange);
    out += buf;
  }
  return out;
}

}  // namespace graphdeblur
