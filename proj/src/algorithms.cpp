#include "qts/algorithms.hpp"

#include <algorithm>

namespace qts {

CoeffSeq qbinom_pascal(const BoxParams& p) {
  // row[k] holds [n choose k]_q for the current n, restricted to the
  // columns n - b <= k <= a that can still reach [a+b choose a].
  const long a = p.a;
  const long b = p.b;
  std::vector<std::vector<Int>> row(static_cast<std::size_t>(a) + 1);
  row[0] = {Int(1)};
  for (long n = 1; n <= a + b; ++n) {
    const long k_hi = std::min(n, a);
    const long k_lo = std::max(0L, n - b);
    for (long k = k_hi; k >= std::max(1L, k_lo); --k) {
      // New row[k] = old row[k-1] + q^k * old row[k]; old row[k] is empty
      // when k == n (first time the column appears).
      auto& cur = row[static_cast<std::size_t>(k)];
      const auto& left = row[static_cast<std::size_t>(k - 1)];
      const std::size_t deg = static_cast<std::size_t>(k * (n - k));
      std::vector<Int> next(deg + 1, Int(0));
      for (std::size_t i = 0; i < left.size(); ++i) next[i] += left[i];
      for (std::size_t i = 0; i < cur.size(); ++i) next[i + static_cast<std::size_t>(k)] += cur[i];
      cur = std::move(next);
    }
    // Column 0 stays [n choose 0] = 1 while reachable.
    if (k_lo > 0) row[static_cast<std::size_t>(k_lo - 1)].clear();
  }
  if (a == 0) return CoeffSeq(p, {Int(1)});
  return CoeffSeq(p, std::move(row[static_cast<std::size_t>(a)]));
}

namespace {

// All [n choose k]_q for k = 0..n.
std::vector<std::vector<Int>> pascal_row(long n) {
  std::vector<std::vector<Int>> row{{Int(1)}};
  for (long m = 1; m <= n; ++m) {
    std::vector<std::vector<Int>> next(static_cast<std::size_t>(m) + 1);
    next[0] = {Int(1)};
    next[static_cast<std::size_t>(m)] = {Int(1)};
    for (long k = 1; k < m; ++k) {
      const auto& left = row[static_cast<std::size_t>(k - 1)];
      const auto& up = row[static_cast<std::size_t>(k)];
      std::vector<Int> v(static_cast<std::size_t>(k * (m - k)) + 1, Int(0));
      for (std::size_t i = 0; i < left.size(); ++i) v[i] += left[i];
      for (std::size_t i = 0; i < up.size(); ++i) v[i + static_cast<std::size_t>(k)] += up[i];
      next[static_cast<std::size_t>(k)] = std::move(v);
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

CoeffSeq qbinom_convolution(const BoxParams& p) {
  const auto ra = pascal_row(p.a);
  const auto rb = pascal_row(p.b);
  std::vector<Int> out(static_cast<std::size_t>(p.degree()) + 1, Int(0));
  for (long k = 0; k <= std::min(p.a, p.b); ++k) {
    const auto& x = ra[static_cast<std::size_t>(k)];
    const auto& y = rb[static_cast<std::size_t>(k)];
    const std::size_t shift = static_cast<std::size_t>(k * k);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) {
        mpz_addmul(out[shift + i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
      }
    }
  }
  return CoeffSeq(p, std::move(out));
}

std::vector<std::uint32_t> ladder_primes(std::size_t count) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t candidate = (1u << 31) - 1; primes.size() < count; candidate -= 2) {
    bool prime = true;
    for (std::uint32_t f = 3; static_cast<std::uint64_t>(f) * f <= candidate; f += 2) {
      if (candidate % f == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

namespace {

struct ResidueLadder {
  std::vector<std::uint32_t> primes;
  std::vector<std::uint32_t> rows;
  std::size_t lanes = 0;
  long deg = 0;
  const simd::ResidueKernels* kernels = nullptr;

  ResidueLadder(const Int& mass, long final_degree, long extra, const simd::ResidueKernels& k)
      : kernels(&k) {
    // Coefficients are nonnegative and bounded by the mass; each prime
    // contributes at least 30 bits.
    const std::size_t need = (bit_length(mass) + 1 + 29) / 30;
    lanes = std::max<std::size_t>(simd::kLaneBlock,
                                  (need + simd::kLaneBlock - 1) / simd::kLaneBlock * simd::kLaneBlock);
    primes = ladder_primes(lanes);
    rows.assign(static_cast<std::size_t>(final_degree + extra + 1) * lanes, 0u);
    for (std::size_t l = 0; l < lanes; ++l) rows[l] = 1u;
  }

  void multiply(long k) {
    deg += k;
    kernels->sub_shifted(rows.data(), static_cast<std::size_t>(deg) + 1, static_cast<std::size_t>(k),
                         primes.data(), lanes);
  }

  void divide(long k) {
    kernels->add_shifted(rows.data(), static_cast<std::size_t>(deg) + 1, static_cast<std::size_t>(k),
                         primes.data(), lanes);
    for (long i = std::max(0L, deg - k + 1); i <= deg; ++i) {
      for (std::size_t l = 0; l < lanes; ++l) {
        if (rows[static_cast<std::size_t>(i) * lanes + l] != 0u) {
          throw InternalInconsistencyError("modular division by (1 - q^" + std::to_string(k) +
                                           ") left a nonzero remainder");
        }
      }
    }
    deg -= k;
  }

  std::vector<Int> lift() const {
    Int modulus = 1;
    for (auto p : primes) modulus *= p;
    // CRT basis e_l = (M/p_l) * ((M/p_l)^{-1} mod p_l).
    std::vector<Int> basis(lanes);
    for (std::size_t l = 0; l < lanes; ++l) {
      const Int cofactor = modulus / primes[l];
      Int inv;
      const Int p = primes[l];
      mpz_invert(inv.get_mpz_t(), Int(cofactor % p).get_mpz_t(), p.get_mpz_t());
      basis[l] = cofactor * inv;
    }
    std::vector<Int> out(static_cast<std::size_t>(deg) + 1);
    for (long i = 0; i <= deg; ++i) {
      Int acc = 0;
      const std::uint32_t* r = rows.data() + static_cast<std::size_t>(i) * lanes;
      for (std::size_t l = 0; l < lanes; ++l) mpz_addmul_ui(acc.get_mpz_t(), basis[l].get_mpz_t(), r[l]);
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
      out[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return out;
  }
};

}  // namespace

CoeffSeq qbinom_modular(const BoxParams& p, const simd::ResidueKernels& kernels) {
  ResidueLadder ladder(q_one_mass(p), p.degree(), p.a + p.b, kernels);
  for (long i = 1; i <= p.a; ++i) {
    ladder.multiply(p.b + i);
    ladder.divide(i);
  }
  return CoeffSeq(p, ladder.lift());
}

CoeffSeq qmultinom_modular(const Composition& c, const simd::ResidueKernels& kernels) {
  ResidueLadder ladder(q_one_mass(c), c.degree(), c.size(), kernels);
  long prefix = c.parts.front();
  for (std::size_t i = 1; i < c.parts.size(); ++i) {
    for (long t = 1; t <= c.parts[i]; ++t) {
      ladder.multiply(prefix + t);
      ladder.divide(t);
    }
    prefix += c.parts[i];
  }
  return CoeffSeq(c, ladder.lift());
}

std::size_t memory_estimate_bytes(const std::vector<Int>& coeffs) {
  std::size_t bytes = coeffs.capacity() * sizeof(Int);
  for (const auto& c : coeffs) bytes += mpz_size(c.get_mpz_t()) * sizeof(mp_limb_t);
  return bytes;
}

}  // namespace qts
