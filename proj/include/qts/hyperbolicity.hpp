#pragma once

// Exact real-rootedness via Sturm sequences, numeric roots for reporting, and
// the windowed Jensen hyperbolicity scan.

#include <cstdint>
#include <vector>

#include "qts/exactseq.hpp"
#include "qts/moments.hpp"
#include "qts/poly.hpp"

namespace qts {

struct ZeroPolynomialError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SturmChain {
  RationalPoly squarefree_part;
  // squarefree_part, its derivative, then negated remainders. Each entry is
  // scaled by a positive constant so its leading coefficient is +-1.
  std::vector<RationalPoly> polys;

  int variations_at_plus_infinity() const;
  int variations_at_minus_infinity() const;
  // Number of distinct real roots.
  int distinct_real_roots() const;
};

SturmChain sturm_chain(const RationalPoly& p);

// All complex roots real, counted with multiplicity. Degree <= 2 uses the
// discriminant. Nonzero constants are hyperbolic (no roots).
bool is_hyperbolic(const RationalPoly& p);
// Sturm path only; exposed to cross-check the discriminant path.
bool is_hyperbolic_sturm(const RationalPoly& p);

// Distinct real roots.
int real_root_count(const RationalPoly& p);
// Real roots counted with multiplicity (Yun square-free factorization).
int real_root_count_with_multiplicity(const RationalPoly& p);

struct ComplexRoot {
  Real re;
  Real im;
};

struct RootOptions {
  int max_iterations = 2000;
};

// All roots of p (degree <= 64) by Aberth-Ehrlich iteration at the
// polynomial's precision. Roots with |Im| <= real_tolerance(p) are returned
// with im == 0; nonreal roots come in adjacent conjugate pairs. Sorted by
// real part, then imaginary part. Throws NonConvergenceError.
std::vector<ComplexRoot> numeric_roots(const FloatPoly& p, const RootOptions& opts = {});

// 2^{-(precision_bits / 2)}, the classification threshold for "real".
Real real_tolerance(const FloatPoly& p);

struct HyperbolicityEntry {
  long m = 0;
  bool is_hyperbolic = false;
  int real_root_count = 0;  // distinct
};

struct HyperbolicityReport {
  Params params;
  Window window;
  int d = 0;
  std::vector<HyperbolicityEntry> per_m;
  bool all_hyperbolic = true;
};

// Exact verdicts on the unnormalized J^{d,m}(X; c) for each m in the window.
HyperbolicityReport jensen_hyperbolicity_scan(const CoeffSeq& seq, int d, const Window& w,
                                              unsigned threads = 1);

struct ImplicationDetail {
  int r = 0;
  bool antecedent = false;  // every J^{j,m}, j <= r+1, [m, m+j] in range, real-rooted
  bool consequent = true;   // (L^r u)_k >= 0 on [lo + r, hi - r]
};

// Checks, for each 1 <= r <= d, that hyperbolicity of all Jensen polynomials
// of degree <= r+1 supported in [lo, hi] implies (L^r u)_k >= 0 on the
// range's interior. Returns true iff no r has antecedent && !consequent.
bool hyperbolic_implies_turan_check(const std::vector<Int>& u, int d, long lo, long hi,
                                    std::vector<ImplicationDetail>* details = nullptr);
bool hyperbolic_implies_turan_check(const CoeffSeq& seq, int d, const Window& w,
                                    std::vector<ImplicationDetail>* details = nullptr);

struct ImplicationSweep {
  int samples = 0;
  int nonvacuous = 0;  // samples where some r had a true antecedent
  int failures = 0;
  std::vector<std::vector<Int>> failing_sequences;
};

// Seeded random nonnegative integer sequences: length uniform in [3, max_len],
// entries uniform in [0, max_value], d uniform in [1, max_d]; each checked on
// its full index range.
ImplicationSweep implication_property_sweep(std::uint64_t seed, int samples, int max_len = 10,
                                            int max_d = 3, long max_value = 20);

}  // namespace qts
