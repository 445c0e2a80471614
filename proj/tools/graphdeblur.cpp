// Command-line front end: blur, deblur, graph, sweep-mu, phantom.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphdeblur/app/commands.hpp"
#include "graphdeblur/errors.hpp"
#include "graphdeblur/image_io.hpp"
#include "graphdeblur/phantom.hpp"
#include "graphdeblur/simd/kernels.hpp"

namespace gd = graphdeblur;

namespace {

struct Flags {
  std::optional<std::string> config, image, psf, psf_gaussian, method, truth, from_image, laplacian, out;
  std::optional<std::size_t> psf_average, psf_motion;
  std::optional<double> noise, sigma, rho, tau, mu;
  std::optional<std::uint64_t> seed;
  std::optional<int> radius, maxit;
  std::vector<double> mu_list;
  bool psf_delta = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file; flags override its values");
  cmd->add_option("--image", f.image, "Input image (PGM or GLF1)");
  cmd->add_option("--psf", f.psf, "PSF image file");
  cmd->add_option("--psf-gaussian", f.psf_gaussian, "Gaussian PSF as STD:SIZE");
  cmd->add_option("--psf-average", f.psf_average, "SIZE x SIZE average PSF");
  cmd->add_option("--psf-motion", f.psf_motion, "Horizontal motion PSF of given length");
  cmd->add_flag("--psf-delta", f.psf_delta, "Identity PSF");
  cmd->add_option("--out", f.out, "Output directory");
}

void add_solver(CLI::App* cmd, Flags& f) {
  cmd->add_option("--method", f.method, "tikhonov, tv_l1, graph or graph_oracle");
  cmd->add_option("--R", f.radius, "Graph neighbourhood radius");
  cmd->add_option("--sigma", f.sigma, "Graph weight scale");
  cmd->add_option("--rho", f.rho, "ADMM augmentation parameter");
  cmd->add_option("--tau", f.tau, "ADMM stopping tolerance");
  cmd->add_option("--maxit", f.maxit, "ADMM iteration cap");
  cmd->add_option("--truth", f.truth, "Ground-truth image for metrics and graph_oracle");
  cmd->add_option("--laplacian", f.laplacian, "Precomputed Laplacian (Matrix Market)");
}

gd::app::ExperimentConfig resolve(const Flags& f) {
  gd::app::ExperimentConfig cfg = f.config ? gd::app::load_config_file(*f.config) : gd::app::ExperimentConfig{};
  using Kind = gd::app::PsfChoice::Kind;
  if (f.image) cfg.image = *f.image;
  if (f.psf) cfg.psf = {Kind::file, *f.psf};
  if (f.psf_gaussian) cfg.psf = gd::app::parse_gaussian_spec(*f.psf_gaussian);
  if (f.psf_average) cfg.psf = {Kind::average, {}, 0.0, *f.psf_average};
  if (f.psf_motion) cfg.psf = {Kind::motion, {}, 0.0, *f.psf_motion};
  if (f.psf_delta) cfg.psf = {Kind::delta, {}, 0.0, 0};
  if (f.noise) cfg.noise = *f.noise;
  if (f.seed) cfg.seed = *f.seed;
  if (f.method) cfg.method = gd::parse_method(*f.method);
  if (f.radius) cfg.graph.radius = *f.radius;
  if (f.sigma) cfg.graph.sigma = *f.sigma;
  if (f.rho) cfg.rho = *f.rho;
  if (f.tau) cfg.tau = *f.tau;
  if (f.maxit) cfg.maxit = *f.maxit;
  if (f.mu) cfg.mu = *f.mu;
  if (!f.mu_list.empty()) cfg.mu_list = f.mu_list;
  if (f.truth) cfg.truth = *f.truth;
  if (f.from_image) cfg.from_image = *f.from_image;
  if (f.laplacian) cfg.laplacian = *f.laplacian;
  if (f.out) cfg.out = *f.out;
  return cfg;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-Laplacian image deblurring"};
  app.require_subcommand(1);
  Flags f;

  auto* blur = app.add_subcommand("blur", "Blur an image and add seeded Gaussian noise");
  add_common(blur, f);
  blur->add_option("--noise", f.noise, "Noise norm as a fraction of ||b||");
  blur->add_option("--seed", f.seed, "Noise seed");

  auto* deblur = app.add_subcommand("deblur", "Reconstruct an image with one method");
  add_common(deblur, f);
  add_solver(deblur, f);
  deblur->add_option("--mu", f.mu, "Regularisation parameter (l1 methods)");

  auto* graph = app.add_subcommand("graph", "Build the graph Laplacian and report the GCV parameter");
  add_common(graph, f);
  graph->add_option("--R", f.radius, "Graph neighbourhood radius");
  graph->add_option("--sigma", f.sigma, "Graph weight scale");
  graph->add_option("--from-image", f.from_image, "Build the Laplacian directly from this image");

  auto* sweep = app.add_subcommand("sweep-mu", "Tabulate RRE/PSNR/SSIM over a list of mu values");
  add_common(sweep, f);
  add_solver(sweep, f);
  sweep->add_option("--mu", f.mu_list, "mu values")->delimiter(',');

  std::size_t phantom_n = 64;
  auto* phantom = app.add_subcommand("phantom", "Write the piecewise-constant test scene");
  phantom->add_option("--n", phantom_n, "Image side")->check(CLI::PositiveNumber);
  phantom->add_option("--out", f.out, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    gd::app::ExperimentConfig cfg = resolve(f);
    if (*blur) {
      const auto rep = gd::app::cmd_blur(cfg);
      std::printf("wrote %s noise_norm=%.17g\n", rep.image_path.c_str(), rep.noise_norm);
    } else if (*deblur) {
      std::fprintf(stderr, "simd: %s\n", std::string(gd::simd::isa_name(gd::simd::active().isa)).c_str());
      const auto rep = gd::app::cmd_deblur(cfg);
      if (rep.reference) print_warnings(rep.reference->warnings);
      if (rep.trace) print_warnings(rep.trace->warnings);
      std::printf("wrote %s", rep.image_path.c_str());
      if (rep.trace) std::printf(" iterations=%zu", rep.trace->records.size());
      if (rep.metrics) std::printf(" rre=%.6g psnr=%.6g ssim=%.6g", rep.metrics->rre, rep.metrics->psnr, rep.metrics->ssim);
      std::printf("\n");
    } else if (*graph) {
      const auto rep = gd::app::cmd_graph(cfg);
      if (rep.reference) {
        print_warnings(rep.reference->warnings);
        std::printf("mu_gcv=%.17g\n", rep.reference->mu_gcv);
      }
      std::printf("wrote %s nnz=%zu\n", rep.matrix_path.c_str(), rep.laplacian.nnz());
    } else if (*sweep) {
      const auto rep = gd::app::cmd_sweep(cfg);
      const auto& best = rep.rows[rep.best];
      std::printf("wrote %s best mu=%.6g rre=%.6g\n", rep.csv_path.c_str(), best.mu, best.metrics.rre);
    } else if (*phantom) {
      const std::string dir = f.out.value_or(".");
      const auto img = gd::piecewise_constant_phantom(phantom_n);
      std::filesystem::create_directories(dir);
      gd::io::write_glf((std::filesystem::path(dir) / "phantom.glf").string(), img);
      gd::io::write_pgm((std::filesystem::path(dir) / "phantom.pgm").string(), img);
    }
  } catch (const gd::DivergenceError& e) {
    std::fprintf(stderr, "error: %s (iteration %ld)\n", e.what(), e.iteration());
    return 4;
  } catch (const gd::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const gd::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
