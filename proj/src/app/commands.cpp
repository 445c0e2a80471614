#include "graphdeblur/app/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "graphdeblur/errors.hpp"
#include "graphdeblur/image_io.hpp"
#include "graphdeblur/matrix_market.hpp"
#include "graphdeblur/noise.hpp"
#include "graphdeblur/parallel.hpp"
#include "graphdeblur/simd/kernels.hpp"
#include "graphdeblur/spectral.hpp"
#include "graphdeblur/tv.hpp"

namespace graphdeblur::app {
namespace fs = std::filesystem;
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
}

void require_path(const std::string& path, const char* flag) {
  if (path.empty()) throw ConfigError(std::string("missing required input ") + flag);
}

Psf load_psf_for(const ExperimentConfig& cfg, std::size_t n) {
  Psf psf = resolve_psf(cfg.psf);
  if (psf.rows() > n || psf.cols() > n) {
    throw ConfigError("PSF " + std::to_string(psf.rows()) + "x" + std::to_string(psf.cols()) +
                      " is larger than the " + std::to_string(n) + "x" + std::to_string(n) + " image");
  }
  return psf;
}

std::optional<Image> load_truth(const ExperimentConfig& cfg, const Image& data) {
  if (cfg.truth.empty()) return std::nullopt;
  Image t = io::read_image(cfg.truth);
  require_same_shape(t, data, "ground truth");
  return t;
}

void require_mu(const ExperimentConfig& cfg) {
  if (cfg.method != Method::tikhonov && !cfg.mu) {
    throw ConfigError("--mu is required for method " + std::string(method_name(cfg.method)));
  }
}

MethodInputs make_inputs(const ExperimentConfig& cfg, const Spectrum& sigma, const Image& data,
                         std::optional<Image> truth) {
  MethodInputs in{sigma, data, std::move(truth), {}, {}, {}, std::nullopt};
  in.graph = cfg.graph;
  in.admm = cfg.admm();
  if (!cfg.laplacian.empty()) {
    SparseMatrix lap = mtx::read_file(cfg.laplacian);
    if (lap.rows() != data.size() || lap.cols() != data.size())
      throw ConfigError(cfg.laplacian + ": Laplacian size does not match the image");
    in.laplacian = std::move(lap);
  }
  return in;
}

}  // namespace

PsfChoice parse_gaussian_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("--psf-gaussian expects STD:SIZE, got '" + spec + "'");
  PsfChoice c;
  c.kind = PsfChoice::Kind::gaussian;
  try {
    std::size_t used = 0;
    c.stddev = std::stod(spec.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("std");
    const std::string size = spec.substr(colon + 1);
    const long s = std::stol(size, &used);
    if (used != size.size() || s < 1) throw std::invalid_argument("size");
    c.size = static_cast<std::size_t>(s);
  } catch (const std::exception&) {
    throw ConfigError("--psf-gaussian expects STD:SIZE, got '" + spec + "'");
  }
  return c;
}

Psf resolve_psf(const PsfChoice& choice) {
  switch (choice.kind) {
    case PsfChoice::Kind::file:
      return io::read_psf(choice.path);
    case PsfChoice::Kind::gaussian:
      return Psf::gaussian(choice.stddev, choice.size);
    case PsfChoice::Kind::average:
      return Psf::average(choice.size);
    case PsfChoice::Kind::motion:
      return Psf::motion(choice.size);
    case PsfChoice::Kind::delta:
      return Psf::delta();
    case PsfChoice::Kind::none:
      break;
  }
  throw ConfigError("a PSF is required (--psf, --psf-gaussian, --psf-average or --psf-motion)");
}

AdmmConfig ExperimentConfig::admm() const {
  AdmmConfig a;
  a.rho = rho;
  a.tau = tau;
  a.max_iter = maxit;
  a.mu = mu.value_or(0.0);
  return a;
}

void ExperimentConfig::validate() const {
  if (!(noise >= 0.0) || !std::isfinite(noise)) throw ConfigError("--noise must be finite and nonnegative");
  if (graph.radius < 1) throw ConfigError("--R must be at least 1");
  if (!(graph.sigma > 0.0) || !std::isfinite(graph.sigma)) throw ConfigError("--sigma must be positive");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw ConfigError("--rho must be positive");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("--tau must be positive");
  if (maxit < 1) throw ConfigError("--maxit must be positive");
  if (mu && (!(*mu > 0.0) || !std::isfinite(*mu))) throw ConfigError("--mu must be positive");
  for (double m : mu_list)
    if (!(m > 0.0) || !std::isfinite(m)) throw ConfigError("mu list entries must be positive");
}

void merge_json(ExperimentConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "image") cfg.image = value.get<std::string>();
      else if (key == "psf") cfg.psf = PsfChoice{PsfChoice::Kind::file, value.get<std::string>()};
      else if (key == "psf_gaussian") cfg.psf = parse_gaussian_spec(value.get<std::string>());
      else if (key == "psf_average") cfg.psf = PsfChoice{PsfChoice::Kind::average, {}, 0.0, value.get<std::size_t>()};
      else if (key == "psf_motion") cfg.psf = PsfChoice{PsfChoice::Kind::motion, {}, 0.0, value.get<std::size_t>()};
      else if (key == "noise") cfg.noise = value.get<double>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "method") cfg.method = parse_method(value.get<std::string>());
      else if (key == "R") cfg.graph.radius = value.get<int>();
      else if (key == "sigma") cfg.graph.sigma = value.get<double>();
      else if (key == "rho") cfg.rho = value.get<double>();
      else if (key == "tau") cfg.tau = value.get<double>();
      else if (key == "maxit") cfg.maxit = value.get<int>();
      else if (key == "mu") cfg.mu = value.get<double>();
      else if (key == "mu_list") cfg.mu_list = value.get<std::vector<double>>();
      else if (key == "truth") cfg.truth = value.get<std::string>();
      else if (key == "from_image") cfg.from_image = value.get<std::string>();
      else if (key == "laplacian") cfg.laplacian = value.get<std::string>();
      else if (key == "out") cfg.out = value.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  ExperimentConfig cfg;
  merge_json(cfg, j);
  return cfg;
}

BlurReport cmd_blur(const ExperimentConfig& cfg) {
  cfg.validate();
  require_path(cfg.image, "--image");
  const Image x = io::read_image(cfg.image);
  const Psf psf = load_psf_for(cfg, x.side());
  ensure_dir(cfg.out);

  const Image b = bccb_apply(psf_to_spectrum(psf, x.side()), x);
  NoisyImage noisy = add_noise(b, cfg.noise, cfg.seed);
  const double b_norm = std::sqrt(simd::sum_sq(b.values()));

  BlurReport rep{std::move(noisy.image), noisy.noise_norm, join(cfg.out, "blurred.glf")};
  io::write_glf(rep.image_path, rep.b_delta);
  io::write_pgm(join(cfg.out, "blurred.pgm"), rep.b_delta);
  nlohmann::ordered_json side;
  side["n"] = x.side();
  side["psf"] = psf.descriptor();
  side["noise_level"] = cfg.noise;
  side["b_norm"] = b_norm;
  side["noise_norm"] = rep.noise_norm;
  side["delta"] = cfg.noise * b_norm;
  side["seed"] = cfg.seed;
  side["generator"] = std::string(kNoiseGenerator);
  io::write_text(join(cfg.out, "blurred.json"), side.dump(2) + "\n");
  return rep;
}

std::string metrics_csv_row(Method m, const MetricsReport& r) {
  return std::string(method_name(m)) + "," + fmt(r.rre) + "," + fmt(r.psnr) + "," + fmt(r.ssim) + "\n";
}

DeblurReport cmd_deblur(const ExperimentConfig& cfg) {
  cfg.validate();
  require_path(cfg.image, "--image");
  require_mu(cfg);
  const Image data = io::read_image(cfg.image);
  const Psf psf = load_psf_for(cfg, data.side());
  std::optional<Image> truth = load_truth(cfg, data);
  if (cfg.method == Method::graph_oracle && !truth) throw ConfigError("method graph_oracle requires --truth");
  ensure_dir(cfg.out);

  const MethodInputs in = make_inputs(cfg, psf_to_spectrum(psf, data.side()), data, truth);
  MethodOutput out = run_method(cfg.method, in);

  const std::string name(method_name(cfg.method));
  DeblurReport rep;
  rep.image_path = join(cfg.out, "x_" + name + ".glf");
  io::write_glf(rep.image_path, out.x);
  io::write_pgm(join(cfg.out, "x_" + name + ".pgm"), out.x);
  if (out.trace) io::write_text(join(cfg.out, "trace_" + name + ".csv"), trace_csv(*out.trace));
  if (out.reference) io::write_text(join(cfg.out, "gcv_probes.csv"), gcv_probes_csv(*out.reference));
  if (truth) {
    rep.metrics = compute_metrics(out.x, *truth);
    const std::string path = join(cfg.out, "metrics.csv");
    const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
    std::ofstream os(path, std::ios::app | std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    if (fresh) os << "method,rre,psnr,ssim\n";
    os << metrics_csv_row(cfg.method, *rep.metrics);
  }
  rep.x = std::move(out.x);
  rep.reference = std::move(out.reference);
  rep.trace = std::move(out.trace);
  return rep;
}

GraphReport cmd_graph(const ExperimentConfig& cfg) {
  cfg.validate();
  cfg.graph.validate();
  GraphReport rep;
  if (!cfg.from_image.empty()) {
    const Image ref = io::read_image(cfg.from_image);
    ensure_dir(cfg.out);
    rep.laplacian = build_graph_laplacian(ref, cfg.graph);
  } else {
    require_path(cfg.image, "--image (or --from-image)");
    const Image data = io::read_image(cfg.image);
    const Psf psf = load_psf_for(cfg, data.side());
    ensure_dir(cfg.out);
    GcvResult ref = compute_reference(psf, data);
    rep.laplacian = build_graph_laplacian(ref.x_star, cfg.graph);
    io::write_glf(join(cfg.out, "x_star.glf"), ref.x_star);
    io::write_text(join(cfg.out, "gcv_probes.csv"), gcv_probes_csv(ref));
    nlohmann::ordered_json j;
    j["mu_gcv"] = ref.mu_gcv;
    j["g_value"] = ref.g_value;
    j["evaluations"] = ref.evaluations.size();
    j["boundary_minimizer"] = ref.boundary_minimizer;
    j["warnings"] = ref.warnings;
    io::write_text(join(cfg.out, "gcv.json"), j.dump(2) + "\n");
    rep.reference = std::move(ref);
  }
  rep.matrix_path = join(cfg.out, "laplacian.mtx");
  mtx::write_file(rep.matrix_path, rep.laplacian);
  return rep;
}

std::string sweep_csv(const SweepReport& report) {
  std::string out = "mu,rre,psnr,ssim,best\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    out += fmt(r.mu) + "," + fmt(r.metrics.rre) + "," + fmt(r.metrics.psnr) + "," + fmt(r.metrics.ssim) + "," +
           (i == report.best ? "1" : "0") + "\n";
  }
  return out;
}

SweepReport cmd_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  require_path(cfg.image, "--image");
  require_path(cfg.truth, "--truth");
  if (cfg.mu_list.empty()) throw ConfigError("sweep-mu needs a non-empty mu list");
  const Image data = io::read_image(cfg.image);
  const Psf psf = load_psf_for(cfg, data.side());
  const Image truth = *load_truth(cfg, data);
  ensure_dir(cfg.out);

  const Spectrum sigma = psf_to_spectrum(psf, data.side());
  const MethodInputs base = make_inputs(cfg, sigma, data, truth);
  std::optional<PreparedOperator> op;
  std::optional<TvOperator> tv;
  ComplexVector b_hat;
  if (cfg.method == Method::tikhonov) {
    tv = build_tv(data.side());
    b_hat = fft2::forward(data.values(), data.side());
  } else {
    op = prepare_operator(cfg.method, base);
  }

  SweepReport rep;
  rep.rows.resize(cfg.mu_list.size());
  parallel_chunks(
      cfg.mu_list.size(),
      [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          const double mu = cfg.mu_list[i];
          Image x;
          if (tv) {
            x = bccb_solve_filtered(sigma, tv->lambda_x, tv->lambda_y, mu, b_hat);
          } else {
            MethodInputs in = base;
            in.admm.mu = mu;
            x = solve_prepared(*op, in).x;
          }
          rep.rows[i] = SweepRow{mu, compute_metrics(x, truth)};
        }
      },
      cfg.mu_list.size());
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].metrics.rre < rep.rows[rep.best].metrics.rre) rep.best = i;
  rep.csv_path = join(cfg.out, "sweep_" + std::string(method_name(cfg.method)) + ".csv");
  io::write_text(rep.csv_path, sweep_csv(rep));
  return rep;
}

}  // namespace graphdeblur::app
