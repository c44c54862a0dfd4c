#include "qts/simd/residue_kernels.hpp"

namespace qts::simd {

namespace {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}

void sub_shifted_scalar(std::uint32_t* rows, std::size_t len, std::size_t shift,
                        const std::uint32_t* primes, std::size_t lanes) {
  for (std::size_t i = len; i-- > shift;) {
    std::uint32_t* dst = rows + i * lanes;
    const std::uint32_t* src = rows + (i - shift) * lanes;
    for (std::size_t l = 0; l < lanes; ++l) dst[l] = sub_mod(dst[l], src[l], primes[l]);
  }
}

void add_shifted_scalar(std::uint32_t* rows, std::size_t len, std::size_t shift,
                        const std::uint32_t* primes, std::size_t lanes) {
  for (std::size_t i = shift; i < len; ++i) {
    std::uint32_t* dst = rows + i * lanes;
    const std::uint32_t* src = rows + (i - shift) * lanes;
    for (std::size_t l = 0; l < lanes; ++l) dst[l] = add_mod(dst[l], src[l], primes[l]);
  }
}

constexpr ResidueKernels kScalar{"scalar", sub_shifted_scalar, add_shifted_scalar};

}  // namespace

const ResidueKernels& scalar_kernels() { return kScalar; }

}  // namespace qts::simd
