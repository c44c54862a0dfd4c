#pragma once

// Alternative q-binomial algorithms for the benchmark harness. Each must
// agree bitwise with qbinom_coeffs.

#include <cstdint>
#include <string>
#include <vector>

#include "qts/exactseq.hpp"
#include "qts/simd/residue_kernels.hpp"

namespace qts {

// [n choose k] = [n-1 choose k-1] + q^k [n-1 choose k], one row at a time.
CoeffSeq qbinom_pascal(const BoxParams& p);

// q-Vandermonde: sum_k q^{k^2} [a choose k]_q [b choose k]_q, with the
// partial q-binomials from Pascal rows and schoolbook products. Quadratic in
// the degree; meant for small inputs.
CoeffSeq qbinom_convolution(const BoxParams& p);

// The multiply/divide ladder run modulo word-size primes with the residue
// kernels, then lifted by CRT. The prime count is sized from the q = 1 mass.
CoeffSeq qbinom_modular(const BoxParams& p, const simd::ResidueKernels& kernels);
CoeffSeq qmultinom_modular(const Composition& c, const simd::ResidueKernels& kernels);

// Largest `count` primes below 2^31, descending.
std::vector<std::uint32_t> ladder_primes(std::size_t count);

// Rough bytes held by a dense big-integer coefficient array.
std::size_t memory_estimate_bytes(const std::vector<Int>& coeffs);

}  // namespace qts
