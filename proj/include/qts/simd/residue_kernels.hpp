#pragma once

// Residue-number-system passes used by the modular ladder.
//
// A coefficient array is stored row-major: row i holds `lanes` residues of
// coefficient i, lane l taken modulo primes[l]. Every prime is below 2^31, so
// a sum of two residues fits in 32 bits. `lanes` must be a multiple of
// kLaneBlock.
//
// Variants: a portable scalar reference and an AVX2 version, selected at
// runtime. The environment variable QTS_SIMD=scalar forces the reference.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qts::simd {

inline constexpr std::size_t kLaneBlock = 8;

struct ResidueKernels {
  std::string_view name;
  // Multiply by (1 - q^shift): row[i] -= row[i - shift] for i = len-1 down to shift.
  void (*sub_shifted)(std::uint32_t* rows, std::size_t len, std::size_t shift,
                      const std::uint32_t* primes, std::size_t lanes);
  // Divide by (1 - q^shift): row[i] += row[i - shift] for i = shift up to len-1.
  void (*add_shifted)(std::uint32_t* rows, std::size_t len, std::size_t shift,
                      const std::uint32_t* primes, std::size_t lanes);
};

const ResidueKernels& scalar_kernels();
// nullptr when the build or the CPU lacks AVX2.
const ResidueKernels* avx2_kernels();
// Best available variant, honoring QTS_SIMD.
const ResidueKernels& active_kernels();

}  // namespace qts::simd
