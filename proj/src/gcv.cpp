#include "graphdeblur/gcv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/tv.hpp"

namespace graphdeblur {

GcvTerms gcv_terms(const Spectrum& sigma, const Spectrum& lx, const Spectrum& ly,
                   std::span<const Complex> b_hat, double mu) {
  if (!(mu > 0.0)) throw ConfigError("gcv: mu must be positive");
  if (lx.size() != sigma.size() || ly.size() != sigma.size() || b_hat.size() != sigma.size())
    throw ConfigError("gcv: inconsistent spectrum sizes");
  // 1 - |s|^2 / (|s|^2 + mu l) is evaluated as mu l / (|s|^2 + mu l) so that
  // small mu does not cancel to zero.
  double r_sq = 0.0;
  double t = 0.0;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const double reg = mu * (std::norm(lx[k]) + std::norm(ly[k]));
    const double den = std::norm(sigma[k]) + reg;
    if (!(den > 0.0)) throw SingularityError("gcv: zero filter denominator");
    const double f = reg / den;
    r_sq += f * f * std::norm(b_hat[k]);
    t += f;
  }
  // F is unnormalised, so ||F v||^2 = N ||v||^2.
  r_sq /= static_cast<double>(sigma.size());
  if (!(t > std::numeric_limits<double>::epsilon())) {
    std::ostringstream os;
    os << "gcv: trace term vanished at mu=" << mu;
    throw DegenerateGcvError(os.str());
  }
  return GcvTerms{std::sqrt(r_sq), t};
}

double gcv_value(const Spectrum& sigma, const Spectrum& lx, const Spectrum& ly,
                 std::span<const Complex> b_hat, double mu) {
  return gcv_terms(sigma, lx, ly, b_hat, mu).value();
}

GcvResult gcv_minimize(const Spectrum& sigma, const Spectrum& lx, const Spectrum& ly,
                       std::span<const Complex> b_hat, const GcvSearch& search) {
  if (!(search.mu_min > 0.0) || !(search.mu_max > search.mu_min) || search.points_per_decade < 1 ||
      !(search.relative_width > 0.0))
    throw ConfigError("gcv_minimize: invalid search settings");

  GcvResult result;
  auto probe = [&](double log_mu) {
    const double mu = std::pow(10.0, log_mu);
    double g = std::numeric_limits<double>::quiet_NaN();
    try {
      g = gcv_value(sigma, lx, ly, b_hat, mu);
    } catch (const DegenerateGcvError&) {
    }
    result.evaluations.emplace_back(mu, g);
    return g;
  };

  const double lo = std::log10(search.mu_min);
  const double hi = std::log10(search.mu_max);
  const int steps = static_cast<int>(std::lround((hi - lo) * search.points_per_decade));
  std::vector<double> grid_log(steps + 1);
  std::vector<double> grid_g(steps + 1);
  int best = -1;
  for (int i = 0; i <= steps; ++i) {
    grid_log[i] = i == steps ? hi : lo + static_cast<double>(i) / search.points_per_decade;
    grid_g[i] = probe(grid_log[i]);
    if (std::isfinite(grid_g[i]) && (best < 0 || grid_g[i] < grid_g[best])) best = i;
  }
  if (best < 0) throw NumericError("gcv_minimize: G(mu) is non-finite on the entire grid");

  if (best == 0 || best == steps) {
    result.boundary_minimizer = true;
    std::ostringstream os;
    os.precision(3);
    os << "GCV minimiser on the search boundary (mu=" << std::pow(10.0, grid_log[best]) << ")";
    result.warnings.push_back(os.str());
  } else {
    // Golden section on log10(mu) over the two grid cells around the best point.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = grid_log[best - 1];
    double b = grid_log[best + 1];
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = probe(c);
    double gd = probe(d);
    auto width_ok = [&] {
      const double ma = std::pow(10.0, a);
      const double mb = std::pow(10.0, b);
      return (mb - ma) <= search.relative_width * 0.5 * (ma + mb);
    };
    while (!width_ok()) {
      // NaN compares false, which moves toward d; acceptable since the
      // bracket center was finite.
      if (gc < gd) {
        b = d;
        d = c;
        gd = gc;
        c = b - inv_phi * (b - a);
        gc = probe(c);
      } else {
        a = c;
        c = d;
        gc = gd;
        d = a + inv_phi * (b - a);
        gd = probe(d);
      }
    }
  }

  // Best probe overall, so g_value bounds every recorded evaluation.
  const auto it = std::min_element(result.evaluations.begin(), result.evaluations.end(),
                                   [](const auto& p, const auto& q) {
                                     if (!std::isfinite(p.second)) return false;
                                     if (!std::isfinite(q.second)) return true;
                                     return p.second < q.second;
                                   });
  result.mu_gcv = it->first;
  result.g_value = it->second;
  return result;
}

GcvResult compute_reference(const Spectrum& sigma, const Image& b_delta, const GcvSearch& search) {
  if (sigma.side() != b_delta.side()) throw ConfigError("compute_reference: PSF spectrum and image sizes differ");
  const TvOperator tv = build_tv(b_delta.side());
  const ComplexVector b_hat = fft2::forward(b_delta.values(), b_delta.side());
  GcvResult result = gcv_minimize(sigma, tv.lambda_x, tv.lambda_y, b_hat, search);
  result.x_star = bccb_solve_filtered(sigma, tv.lambda_x, tv.lambda_y, result.mu_gcv, b_hat);
  return result;
}

GcvResult compute_reference(const Psf& psf, const Image& b_delta, const GcvSearch& search) {
  return compute_reference(psf_to_spectrum(psf, b_delta.side()), b_delta, search);
}

std::string gcv_probes_csv(const GcvResult& result) {
  std::string out = "mu,g\n";
  char buf[64];
  for (const auto& [mu, g] : result.evaluations) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", mu, g);
    out += buf;
  }
  return out;
}

}  // namespace graphdeblur
