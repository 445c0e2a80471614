#include <cstdio>
#include <cstdlib>
#include <string_view>

#include "graphdeblur/simd/kernels.hpp"

namespace graphdeblur::simd {
namespace {

const KernelTable& select() {
  const KernelTable* avx2 = cpu_has_avx2() ? avx2_kernels() : nullptr;
  if (const char* env = std::getenv("GRAPHDEBLUR_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return scalar_kernels();
    if (want == "avx2") {
      if (avx2) return *avx2;
      std::fprintf(stderr, "graphdeblur: GRAPHDEBLUR_SIMD=avx2 requested but unsupported; using scalar\n");
      return scalar_kernels();
    }
    std::fprintf(stderr, "graphdeblur: ignoring unknown GRAPHDEBLUR_SIMD=%s\n", env);
  }
  return avx2 ? *avx2 : scalar_kernels();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace graphdeblur::simd
