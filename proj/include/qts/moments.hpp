#pragma once

// Moments, cumulants, normalized weights and central windows of the random
// index K with Pr[K = k] proportional to the k-th coefficient.

#include <vector>

#include "qts/exactseq.hpp"
#include "qts/numeric.hpp"

namespace qts {

struct MomentProfile {
  Params params;
  long degree = 0;
  Rational mu;        // degree / 2
  // Normalization scale: ab(a+b+1)/12 for a box, (1/12) sum_{i<j} n_i n_j (n_i+n_j+1)
  // for a composition. sigma and delta are derived from it.
  Rational sigma_sq;
  // Var(K). Equal to sigma_sq for boxes; differs for compositions with r >= 3.
  Rational variance;
  Rational kappa4;
  Real sigma;
  Real delta;  // 1 / (sqrt(2) sigma)
  long precision_bits = kDefaultPrecisionBits;
};

// Closed forms. Throws DegenerateInputError when degree == 0, InvalidInputError
// when precision_bits < 64.
MomentProfile profile(const Params& params, long precision_bits = kDefaultPrecisionBits);

// Closed-form pieces for a box, exposed for tests.
Rational box_variance(long a, long b);
Rational box_kappa4(long a, long b);

// Exact cumulants of K computed from the coefficients themselves:
// result[r] = kappa_r for r = 1..max_order (result[0] = 0). max_order <= 4.
std::vector<Rational> cumulants_from_coeffs(const CoeffSeq& seq, int max_order = 4);
std::vector<Rational> cumulants_from_coeffs(const std::vector<Int>& coeffs, int max_order = 4);

struct WeightVector {
  std::vector<Rational> values;
  Rational total;  // always exactly 1
};

WeightVector weights(const CoeffSeq& seq);
WeightVector weights(const std::vector<Int>& coeffs);

// Integer indices m with |m - mu| <= C sigma, clamped to [0, degree]. Empty
// (lo > hi) when no integer qualifies.
struct Window {
  double C = 0.0;
  long lo = 0;
  long hi = -1;

  bool empty() const { return lo > hi; }
  long count() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(long m) const { return lo <= m && m <= hi; }
};

Window central_window(const MomentProfile& prof, double C, long degree);

// Smallest integer m >= mu.
long center_index(const MomentProfile& prof);

struct LogRatioFit {
  long m = 0;
  Real A;
  std::vector<Real> residuals;  // j = 0..d
  std::vector<Real> log_ratios;  // l(j) = log(p(m+j) / p(m))
};

// Least-squares A for l(j) + delta^2 j^2 ~ A j (the model has no intercept),
// residuals R(j) = l(j) - A j + delta^2 j^2. Diagnostic only.
LogRatioFit log_ratio_fit(const WeightVector& w, const MomentProfile& prof, long m, long d);

}  // namespace qts
