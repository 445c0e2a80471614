#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "graphdeblur/admm.hpp"
#include "graphdeblur/core.hpp"
#include "graphdeblur/gcv.hpp"
#include "graphdeblur/graph.hpp"
#include "graphdeblur/psf.hpp"
#include "graphdeblur/sparse.hpp"
#include "graphdeblur/spectral.hpp"

namespace graphdeblur {

enum class Method { tikhonov, tv_l1, graph, graph_oracle };

std::string_view method_name(Method m);
// Throws ConfigError on an unknown name.
Method parse_method(std::string_view name);

struct MethodInputs {
  Spectrum sigma;                  // blur spectrum
  Image b_delta;
  std::optional<Image> x_true;     // required by graph_oracle
  GraphConfig graph{};
  AdmmConfig admm{};
  GcvSearch gcv{};
  // Reuse a previously built L for graph / graph_oracle.
  std::optional<SparseMatrix> laplacian;
};

// Regulariser chosen by a method, plus the reference solve it came from.
struct PreparedOperator {
  Method method = Method::tikhonov;
  std::optional<GcvResult> reference;  // Tikhonov/GCV solve (tikhonov, graph)
  std::optional<SparseMatrix> reg;     // L for the l1 methods
};

PreparedOperator prepare_operator(Method method, const MethodInputs& in);

struct MethodOutput {
  Image x;
  std::optional<GcvResult> reference;
  std::optional<AdmmTrace> trace;
};

MethodOutput solve_prepared(const PreparedOperator& op, const MethodInputs& in);

// tikhonov: x* from the GCV reference solve.
// tv_l1, graph, graph_oracle: ADMM with L_TV, L_omega(x*), L_omega(x_true).
MethodOutput run_method(Method method, const MethodInputs& in);

}  // namespace graphdeblur
