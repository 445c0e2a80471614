#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphdeblur/admm.hpp"
#include "graphdeblur/core.hpp"
#include "graphdeblur/gcv.hpp"
#include "graphdeblur/graph.hpp"
#include "graphdeblur/methods.hpp"
#include "graphdeblur/metrics.hpp"
#include "graphdeblur/psf.hpp"
#include "graphdeblur/sparse.hpp"

namespace graphdeblur::app {

struct PsfChoice {
  enum class Kind { none, file, gaussian, average, motion, delta };
  Kind kind = Kind::none;
  std::string path;
  double stddev = 0.0;
  std::size_t size = 0;
};

// "STD:SIZE", e.g. "1.5:9".
PsfChoice parse_gaussian_spec(const std::string& spec);
Psf resolve_psf(const PsfChoice& choice);

struct ExperimentConfig {
  std::string image;       // blur: clean image; other commands: observed data
  PsfChoice psf;
  double noise = 0.0;      // delta as a fraction of ||b||
  std::uint64_t seed = 0;
  Method method = Method::graph;
  GraphConfig graph{};
  double rho = 1e-1;
  double tau = 1e-4;
  int maxit = 3000;
  std::optional<double> mu;
  std::vector<double> mu_list;
  std::string truth;
  std::string from_image;
  std::string laplacian;   // precomputed L for graph methods
  std::string out = ".";

  AdmmConfig admm() const;
  // Parameter checks that need no file access.
  void validate() const;
};

// Overlays keys present in j onto cfg. Unknown keys are a ConfigError.
void merge_json(ExperimentConfig& cfg, const nlohmann::json& j);
ExperimentConfig load_config_file(const std::string& path);

struct BlurReport {
  Image b_delta;
  double noise_norm = 0.0;
  std::string image_path;
};

// Writes blurred.glf, blurred.pgm and the blurred.json sidecar.
BlurReport cmd_blur(const ExperimentConfig& cfg);

struct DeblurReport {
  Image x;
  std::optional<MetricsReport> metrics;
  std::optional<GcvResult> reference;
  std::optional<AdmmTrace> trace;
  std::string image_path;
};

// Writes x_<method>.glf/.pgm, trace_<method>.csv for the l1 methods, and
// appends a row to metrics.csv when ground truth is given.
DeblurReport cmd_deblur(const ExperimentConfig& cfg);

struct GraphReport {
  SparseMatrix laplacian;
  std::optional<GcvResult> reference;  // absent with --from-image
  std::string matrix_path;
};

// Writes laplacian.mtx; from data also x_star.glf, gcv_probes.csv, gcv.json.
GraphReport cmd_graph(const ExperimentConfig& cfg);

struct SweepRow {
  double mu = 0.0;
  MetricsReport metrics;
};

struct SweepReport {
  std::vector<SweepRow> rows;  // in input order
  std::size_t best = 0;        // argmin RRE
  std::string csv_path;
};

// Runs the configured method once per mu in cfg.mu_list. For tikhonov the
// Tikhonov solution at that mu replaces the GCV choice. Writes
// sweep_<method>.csv with header mu,rre,psnr,ssim,best.
SweepReport cmd_sweep(const ExperimentConfig& cfg);

std::string metrics_csv_row(Method m, const MetricsReport& r);
std::string sweep_csv(const SweepReport& report);

}  // namespace graphdeblur::app
