#pragma once

// Jensen polynomials, their normalized form, Hermite polynomials and the
// coefficientwise deviation between the two.

#include <functional>
#include <optional>
#include <vector>

#include "qts/exactseq.hpp"
#include "qts/moments.hpp"
#include "qts/poly.hpp"

namespace qts {

// sum_{j=0}^{d} C(d,j) u_{m+j} X^j; entries outside the sequence are 0.
RationalPoly jensen_poly(const std::vector<Rational>& u, long d, long m);
RationalPoly jensen_poly(const WeightVector& u, long d, long m);
RationalPoly jensen_poly(const CoeffSeq& u, long d, long m);

// H_d for the generating function exp(-t^2 + X t).
struct HermitePoly {
  long d = 0;
  std::vector<Int> coeffs;  // ascending, length d + 1
};

HermitePoly hermite(long d);

// (delta^{-d} / p(m)) J^{d,m}(delta X - 1; p). The ratios c(m+j)/c(m) stay
// exact until a single rounding per coefficient.
FloatPoly normalized_jensen(const CoeffSeq& seq, const MomentProfile& prof, long d, long m);

// max_s |coeff_s(j) - coeff_s(H_d)|. Throws InvalidInputError when the
// degree of j is not d.
double hermite_deviation(const FloatPoly& j, long d);

struct ConvergenceRow {
  long size = 0;               // a + b, or sum of parts
  Window window;
  double max_deviation = 0.0;  // over every m in the window
  long argmax_m = 0;
  long center_m = 0;           // ceil(mu)
  double center_deviation = 0.0;
};

struct ConvergenceTable {
  long d = 0;
  double C = 0.0;
  std::vector<ConvergenceRow> rows;
  // Least-squares slope of log(deviation) vs log(size); empty for fewer than
  // two rows or any zero deviation.
  std::optional<double> fitted_slope;
  std::optional<double> center_slope;
};

using SeqProvider = std::function<CoeffSeq(const Params&)>;

// Throws InvalidInputError unless sizes are strictly increasing.
ConvergenceTable convergence_study(const std::vector<Params>& family, long d, double C,
                                   long precision_bits = kDefaultPrecisionBits, unsigned threads = 1,
                                   const SeqProvider& provider = {});

// Ordinary least-squares slope of y against x.
std::optional<double> ols_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qts
