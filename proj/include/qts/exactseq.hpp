#pragma once

// Exact coefficient sequences of Gaussian (q-binomial) and q-multinomial
// coefficients.

#include <string>
#include <variant>
#include <vector>

#include "qts/numeric.hpp"

namespace qts {

// The a x b box; the q-binomial [a+b choose a]_q has degree a*b.
struct BoxParams {
  long a = 0;
  long b = 0;

  BoxParams() = default;
  BoxParams(long a_, long b_);

  long degree() const { return a * b; }
  long size() const { return a + b; }
  friend bool operator==(const BoxParams&, const BoxParams&) = default;
};

// Parts (n_1, ..., n_r) of a q-multinomial; r >= 2 and every part >= 1.
struct Composition {
  std::vector<long> parts;

  Composition() = default;
  explicit Composition(std::vector<long> parts_);

  long degree() const;  // sum_{i<j} n_i n_j
  long size() const;    // sum n_i
  friend bool operator==(const Composition&, const Composition&) = default;
};

using Params = std::variant<BoxParams, Composition>;

long degree_of(const Params& p);
long size_of(const Params& p);
std::string describe(const Params& p);
const char* kind_name(const Params& p);  // "qbinom" | "qmultinom"

// Coefficients of a q-binomial or q-multinomial, index 0..degree.
// Immutable after construction.
class CoeffSeq {
 public:
  CoeffSeq(Params params, std::vector<Int> coeffs);

  const Params& params() const { return params_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const Int& operator[](long k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  // 0 outside [0, degree].
  Int at_or_zero(long k) const;
  // Value at q = 1.
  Int total() const;

  friend bool operator==(const CoeffSeq& lhs, const CoeffSeq& rhs) {
    return lhs.params_ == rhs.params_ && lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  Params params_;
  std::vector<Int> coeffs_;
};

// Multiply/divide ladder: for i = 1..a, multiply by (1 - q^{b+i}) then divide
// exactly by (1 - q^i). Throws InternalInconsistencyError if a division
// leaves a remainder.
CoeffSeq qbinom_coeffs(const BoxParams& p);

// Ladder over partial sums s_i = n_1 + ... + n_i: for each i >= 2 and
// t = 1..n_i multiply by (1 - q^{s_{i-1}+t}) and divide by (1 - q^t).
CoeffSeq qmultinom_coeffs(const Composition& c);

CoeffSeq generate(const Params& p);

// Number of partitions of k with at most a parts, each part at most b,
// counted by a bounded-part knapsack over part sizes. Shares nothing with
// the ladder. Throws RangeError for k outside [0, a*b].
Int partition_count_oracle(const BoxParams& p, long k);

// Ordinary multinomial coefficient n! / (n_1! ... n_r!).
Int multinomial(const std::vector<long>& parts);

// Binomial (resp. multinomial) coefficient: the q = 1 mass of the sequence.
Int q_one_mass(const Params& p);

namespace detail {
// In-place ladder steps on a dense coefficient array holding a polynomial of
// degree `deg`. Exposed for tests and alternative algorithms.
void multiply_one_minus_qk(std::vector<Int>& c, long& deg, long k);
void divide_one_minus_qk(std::vector<Int>& c, long& deg, long k);
}  // namespace detail

}  // namespace qts
