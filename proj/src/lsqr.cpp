#include "graphdeblur/lsqr.hpp"

#include <cmath>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/simd/kernels.hpp"

namespace graphdeblur {
namespace {

// Stacked operator S = [L; I] acting on split vectors (top, bottom).
struct Stacked {
  const SparseMatrix& reg;

  void apply(std::span<const double> v, std::span<double> top, std::span<double> bottom) const {
    reg.multiply(v, top);
    std::copy(v.begin(), v.end(), bottom.begin());
  }
  // out = L^T top + bottom
  void apply_transpose(std::span<const double> top, std::span<const double> bottom, std::span<double> out) const {
    reg.multiply_transpose(top, out);
    simd::axpy(1.0, bottom, out);
  }
};

double norm2(std::span<const double> a) { return std::sqrt(simd::sum_sq(a)); }

// ||S^T (S y - v)||.
double normal_residual(const Stacked& op, std::span<const double> y, std::span<const double> top,
                       std::span<const double> bottom) {
  Vector rt(top.size()), rb(bottom.size()), g(bottom.size());
  op.apply(y, rt, rb);
  simd::axpy(-1.0, top, rt);
  simd::axpy(-1.0, bottom, rb);
  op.apply_transpose(rt, rb, g);
  return norm2(g);
}

}  // namespace

LsqrResult lsqr_solve(const SparseMatrix& reg, std::span<const double> top_rhs,
                      std::span<const double> bottom_rhs, const LsqrOptions& options,
                      std::span<const double> warm_start) {
  const std::size_t m = reg.rows();
  const std::size_t n = reg.cols();
  if (top_rhs.size() != m || bottom_rhs.size() != n)
    throw ConfigError("lsqr_solve: right-hand side sizes do not match the operator");
  if (!warm_start.empty() && warm_start.size() != n) throw ConfigError("lsqr_solve: warm start has wrong size");
  if (!(options.tol > 0.0) || options.max_iter < 1) throw ConfigError("lsqr_solve: invalid options");

  const Stacked op{reg};
  LsqrResult result;
  LsqrReport& rep = result.report;
  Vector& y = result.y;
  y = warm_start.empty() ? Vector(n, 0.0) : Vector(warm_start.begin(), warm_start.end());

  Vector g0(n);
  op.apply_transpose(top_rhs, bottom_rhs, g0);
  const double denom = norm2(g0);
  if (denom == 0.0) {
    // S has full column rank, so the minimiser is y = 0.
    std::fill(y.begin(), y.end(), 0.0);
    rep.converged = true;
    return result;
  }
  const double target = options.tol * denom;

  Vector u_top(m), u_bot(n), sv_top(m), sv_bot(n), v(n), w(n), tmp(n), d(n);
  while (true) {
    // Restarting from the current iterate: u = v_hat - S y.
    op.apply(y, u_top, u_bot);
    simd::axpby(1.0, top_rhs, -1.0, u_top);
    simd::axpby(1.0, bottom_rhs, -1.0, u_bot);
    double beta = std::sqrt(simd::sum_sq(u_top) + simd::sum_sq(u_bot));
    double alpha = 0.0;
    if (beta > 0.0) {
      simd::scale(1.0 / beta, u_top);
      simd::scale(1.0 / beta, u_bot);
      op.apply_transpose(u_top, u_bot, v);
      alpha = norm2(v);
    }
    if (beta > 0.0 && alpha > 0.0) {
      simd::scale(1.0 / alpha, v);
      w = v;
      std::fill(d.begin(), d.end(), 0.0);
      double phibar = beta;
      double rhobar = alpha;
      while (rep.iterations < options.max_iter) {
        ++rep.iterations;
        // u <- S v - alpha u
        op.apply(v, sv_top, sv_bot);
        simd::axpby(1.0, sv_top, -alpha, u_top);
        simd::axpby(1.0, sv_bot, -alpha, u_bot);
        beta = std::sqrt(simd::sum_sq(u_top) + simd::sum_sq(u_bot));
        if (beta > 0.0) {
          simd::scale(1.0 / beta, u_top);
          simd::scale(1.0 / beta, u_bot);
          // v <- S^T u - beta v
          op.apply_transpose(u_top, u_bot, tmp);
          simd::axpby(1.0, tmp, -beta, v);
          alpha = norm2(v);
          if (alpha > 0.0) simd::scale(1.0 / alpha, v);
        } else {
          alpha = 0.0;
        }
        // Plane rotation eliminating the subdiagonal beta.
        const double rho = std::hypot(rhobar, beta);
        const double c = rhobar / rho;
        const double s = beta / rho;
        const double theta = s * alpha;
        rhobar = -c * alpha;
        const double phi = c * phibar;
        phibar = s * phibar;
        simd::axpy(phi / rho, w, d);
        simd::axpby(1.0, v, -theta / rho, w);
        rep.residual_norms.push_back(phibar);
        if (phibar * alpha * std::fabs(c) <= target) break;
      }
      simd::axpy(1.0, d, y);
    }
    rep.relative_residual = normal_residual(op, y, top_rhs, bottom_rhs) / denom;
    rep.converged = rep.relative_residual <= options.tol;
    // The recurrence estimate can drift from the true residual; restart
    // from the current iterate if they disagree and budget remains.
    if (rep.converged || rep.iterations >= options.max_iter || beta == 0.0 || alpha == 0.0) break;
  }
  for (double yi : y)
    if (!std::isfinite(yi)) throw NumericError("lsqr_solve: non-finite iterate");
  return result;
}

}  // namespace graphdeblur
