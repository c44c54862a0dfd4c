#include "qts/jensen_hermite.hpp"

#include <cmath>
#include <limits>

#include "qts/parallel.hpp"

namespace qts {

RationalPoly jensen_poly(const std::vector<Rational>& u, long d, long m) {
  if (d < 0) throw InvalidInputError("Jensen degree must be nonnegative");
  const long n = static_cast<long>(u.size());
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
  for (long j = 0; j <= d; ++j) {
    const long k = m + j;
    if (k < 0 || k >= n) continue;
    out[static_cast<std::size_t>(j)] = Rational(binomial(d, j)) * u[static_cast<std::size_t>(k)];
  }
  return RationalPoly(std::move(out));
}

RationalPoly jensen_poly(const WeightVector& u, long d, long m) { return jensen_poly(u.values, d, m); }

RationalPoly jensen_poly(const CoeffSeq& u, long d, long m) {
  if (d < 0) throw InvalidInputError("Jensen degree must be nonnegative");
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
  for (long j = 0; j <= d; ++j) out[static_cast<std::size_t>(j)] = binomial(d, j) * u.at_or_zero(m + j);
  return RationalPoly(std::move(out));
}

HermitePoly hermite(long d) {
  if (d < 0) throw InvalidInputError("Hermite degree must be nonnegative");
  std::vector<Int> prev{1};
  if (d == 0) return {0, prev};
  std::vector<Int> cur{0, 1};
  for (long k = 1; k < d; ++k) {
    // H_{k+1} = X H_k - 2k H_{k-1}
    std::vector<Int> next(static_cast<std::size_t>(k) + 2, Int(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {d, cur};
}

FloatPoly normalized_jensen(const CoeffSeq& seq, const MomentProfile& prof, long d, long m) {
  if (d < 0) throw InvalidInputError("Jensen degree must be nonnegative");
  if (m < 0 || m > seq.degree()) {
    throw RangeError("m = " + std::to_string(m) + " outside [0, " + std::to_string(seq.degree()) + "]");
  }
  const long bits = prof.precision_bits;
  const Int& base = seq[m];

  std::vector<Rational> ratio(static_cast<std::size_t>(d) + 1);
  for (long j = 0; j <= d; ++j) {
    ratio[static_cast<std::size_t>(j)] = Rational(seq.at_or_zero(m + j), base);
    ratio[static_cast<std::size_t>(j)].canonicalize();
  }

  // delta^{-2} = 2 sigma^2 is exact, so only odd powers of delta^{-1} round.
  const Rational inv_delta_sq = 2 * prof.sigma_sq;
  const Real inv_delta = sqrt(Real(inv_delta_sq, bits));

  FloatPoly out;
  out.precision_bits = bits;
  out.coeffs.reserve(static_cast<std::size_t>(d) + 1);
  for (long s = 0; s <= d; ++s) {
    Rational sum = 0;
    for (long j = s; j <= d; ++j) {
      Rational term = Rational(binomial(d, j) * binomial(j, s)) * ratio[static_cast<std::size_t>(j)];
      if ((j - s) % 2 == 1) term = -term;
      sum += term;
    }
    const long e = d - s;
    Rational scale = 1;
    for (long i = 0; i < e / 2; ++i) scale *= inv_delta_sq;
    Real coeff(Rational(sum * scale), bits);
    if (e % 2 == 1) coeff *= inv_delta;
    out.coeffs.push_back(std::move(coeff));
  }

  const double log2_inv_delta = 0.5 * std::log2(inv_delta_sq.get_d());
  out.precision_warning = static_cast<double>(d) * log2_inv_delta > static_cast<double>(bits - 64);
  return out;
}

double hermite_deviation(const FloatPoly& j, long d) {
  if (j.degree() != d) {
    throw InvalidInputError("degree mismatch: polynomial has degree " + std::to_string(j.degree()) +
                            ", expected " + std::to_string(d));
  }
  const HermitePoly h = hermite(d);
  Real worst(0L, j.precision_bits);
  for (long s = 0; s <= d; ++s) {
    const Real diff = abs(j.coeffs[static_cast<std::size_t>(s)] -
                          Real(h.coeffs[static_cast<std::size_t>(s)], j.precision_bits));
    worst = max(worst, diff);
  }
  return worst.to_double();
}

std::optional<double> ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

namespace {

std::optional<double> log_log_slope(const std::vector<ConvergenceRow>& rows,
                                    double ConvergenceRow::*field) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& row : rows) {
    if (!(row.*field > 0.0)) return std::nullopt;
    x.push_back(std::log(static_cast<double>(row.size)));
    y.push_back(std::log(row.*field));
  }
  return ols_slope(x, y);
}

}  // namespace

ConvergenceTable convergence_study(const std::vector<Params>& family, long d, double C,
                                   long precision_bits, unsigned threads,
                                   const SeqProvider& provider) {
  for (std::size_t i = 1; i < family.size(); ++i) {
    if (size_of(family[i]) <= size_of(family[i - 1])) {
      throw InvalidInputError("family sizes must be strictly increasing");
    }
  }
  ConvergenceTable table;
  table.d = d;
  table.C = C;
  for (const auto& params : family) {
    const CoeffSeq seq = provider ? provider(params) : generate(params);
    const MomentProfile prof = profile(params, precision_bits);
    ConvergenceRow row;
    row.size = size_of(params);
    row.window = central_window(prof, C, seq.degree());

    struct Best {
      double dev = -1.0;
      long m = 0;
    };
    std::vector<Best> best(std::max(1u, threads));
    parallel_for(row.window.lo, row.window.hi + 1, threads, [&](long lo, long hi, unsigned w) {
      Best local;
      for (long m = lo; m < hi; ++m) {
        const double dev = hermite_deviation(normalized_jensen(seq, prof, d, m), d);
        if (dev > local.dev) local = {dev, m};
      }
      best[w] = local;
    });
    // Chunks are ordered by m, so strict > keeps the smallest argmax.
    Best overall;
    for (const auto& b : best) {
      if (b.dev > overall.dev) overall = b;
    }
    row.max_deviation = std::max(0.0, overall.dev);
    row.argmax_m = overall.m;
    row.center_m = center_index(prof);
    row.center_deviation = hermite_deviation(normalized_jensen(seq, prof, d, row.center_m), d);
    table.rows.push_back(row);
  }
  table.fitted_slope = log_log_slope(table.rows, &ConvergenceRow::max_deviation);
  table.center_slope = log_log_slope(table.rows, &ConvergenceRow::center_deviation);
  return table;
}

}  // namespace qts
