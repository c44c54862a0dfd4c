#include <cstdlib>
#include <string_view>

#include "qts/simd/residue_kernels.hpp"

namespace qts::simd {

const ResidueKernels* avx2_kernels_compiled();

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

const ResidueKernels* avx2_kernels() {
  static const ResidueKernels* table = cpu_has_avx2() ? avx2_kernels_compiled() : nullptr;
  return table;
}

const ResidueKernels& active_kernels() {
  const char* env = std::getenv("QTS_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
  if (const auto* avx2 = avx2_kernels()) return *avx2;
  return scalar_kernels();
}

}  // namespace qts::simd
