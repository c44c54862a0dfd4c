#include "qts/simd/residue_kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace qts::simd {

#if defined(__AVX2__)

namespace {

// s = a + b < 2^32; min(s, s - p) picks s - p exactly when s >= p because
// otherwise s - p wraps above 2^31.
inline __m256i add_mod(__m256i a, __m256i b, __m256i p) {
  const __m256i s = _mm256_add_epi32(a, b);
  return _mm256_min_epu32(s, _mm256_sub_epi32(s, p));
}

// d = a - b wraps when a < b; then d + p is the reduced value and smaller.
inline __m256i sub_mod(__m256i a, __m256i b, __m256i p) {
  const __m256i d = _mm256_sub_epi32(a, b);
  return _mm256_min_epu32(d, _mm256_add_epi32(d, p));
}

void sub_shifted_avx2(std::uint32_t* rows, std::size_t len, std::size_t shift,
                      const std::uint32_t* primes, std::size_t lanes) {
  for (std::size_t i = len; i-- > shift;) {
    std::uint32_t* dst = rows + i * lanes;
    const std::uint32_t* src = rows + (i - shift) * lanes;
    for (std::size_t l = 0; l < lanes; l += kLaneBlock) {
      const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(primes + l));
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + l));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + l));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + l), sub_mod(a, b, p));
    }
  }
}

void add_shifted_avx2(std::uint32_t* rows, std::size_t len, std::size_t shift,
                      const std::uint32_t* primes, std::size_t lanes) {
  for (std::size_t i = shift; i < len; ++i) {
    std::uint32_t* dst = rows + i * lanes;
    const std::uint32_t* src = rows + (i - shift) * lanes;
    for (std::size_t l = 0; l < lanes; l += kLaneBlock) {
      const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(primes + l));
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + l));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + l));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + l), add_mod(a, b, p));
    }
  }
}

constexpr ResidueKernels kAvx2{"avx2", sub_shifted_avx2, add_shifted_avx2};

}  // namespace

const ResidueKernels* avx2_kernels_compiled() { return &kAvx2; }

#else

const ResidueKernels* avx2_kernels_compiled() { return nullptr; }

#endif

}  // namespace qts::simd
