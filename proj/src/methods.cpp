#include "graphdeblur/methods.hpp"

#include "graphdeblur/errors.hpp"
#include "graphdeblur/tv.hpp"

namespace graphdeblur {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::tikhonov:
      return "tikhonov";
    case Method::tv_l1:
      return "tv_l1";
    case Method::graph:
      return "graph";
    case Method::graph_oracle:
      return "graph_oracle";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "tikhonov") return Method::tikhonov;
  if (name == "tv_l1") return Method::tv_l1;
  if (name == "graph") return Method::graph;
  if (name == "graph_oracle") return Method::graph_oracle;
  throw ConfigError("unknown method '" + std::string(name) + "' (expected tikhonov, tv_l1, graph, graph_oracle)");
}

PreparedOperator prepare_operator(Method method, const MethodInputs& in) {
  if (in.sigma.side() != in.b_delta.side()) throw ConfigError("blur spectrum and data sizes differ");
  PreparedOperator op;
  op.method = method;
  switch (method) {
    case Method::tikhonov:
      op.reference = compute_reference(in.sigma, in.b_delta, in.gcv);
      break;
    case Method::tv_l1:
      op.reg = tv_matrix(in.b_delta.side());
      break;
    case Method::graph:
      if (in.laplacian) {
        op.reg = *in.laplacian;
      } else {
        op.reference = compute_reference(in.sigma, in.b_delta, in.gcv);
        op.reg = build_graph_laplacian(op.reference->x_star, in.graph);
      }
      break;
    case Method::graph_oracle:
      if (!in.x_true) throw ConfigError("method graph_oracle requires the ground-truth image");
      require_same_shape(*in.x_true, in.b_delta, "graph_oracle");
      op.reg = in.laplacian ? *in.laplacian : build_oracle_laplacian(*in.x_true, in.graph);
      break;
  }
  if (op.reg && op.reg->cols() != in.b_delta.size())
    throw ConfigError("regularisation operator does not match the image size");
  return op;
}

MethodOutput solve_prepared(const PreparedOperator& op, const MethodInputs& in) {
  MethodOutput out;
  out.reference = op.reference;
  if (op.method == Method::tikhonov) {
    out.x = op.reference->x_star;
    return out;
  }
  AdmmResult res = admm_deblur(in.sigma, *op.reg, in.b_delta, in.admm);
  out.x = std::move(res.x);
  out.trace = std::move(res.trace);
  return out;
}

MethodOutput run_method(Method method, const MethodInputs& in) {
  return solve_prepared(prepare_operator(method, in), in);
}

}  // namespace graphdeblur
