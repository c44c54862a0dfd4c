#include "qts/moments.hpp"

#include <array>

namespace qts {

Rational box_variance(long a, long b) {
  Rational v(Int(a) * b * (a + b + 1), 12);
  v.canonicalize();
  return v;
}

Rational box_kappa4(long a, long b) {
  const Int A = a;
  const Int B = b;
  Rational k(-(A * B * (A + B + 1) * (A * A + B * B + A * B + A + B)), 120);
  k.canonicalize();
  return k;
}

MomentProfile profile(const Params& params, long precision_bits) {
  if (precision_bits < 64) throw InvalidInputError("precision_bits must be at least 64");
  const long degree = degree_of(params);
  if (degree == 0) throw DegenerateInputError("degree 0 has no spread; profile undefined");

  MomentProfile out{.params = params,
                    .degree = degree,
                    .mu = Rational(degree, 2),
                    .sigma_sq = 0,
                    .variance = 0,
                    .kappa4 = 0,
                    .sigma = Real(precision_bits),
                    .delta = Real(precision_bits),
                    .precision_bits = precision_bits};
  out.mu.canonicalize();

  if (const auto* box = std::get_if<BoxParams>(&params)) {
    out.sigma_sq = box_variance(box->a, box->b);
    out.variance = out.sigma_sq;
    out.kappa4 = box_kappa4(box->a, box->b);
  } else {
    const auto& parts = std::get<Composition>(params).parts;
    Rational pair_sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        pair_sum += Int(parts[i]) * parts[j] * (parts[i] + parts[j] + 1);
      }
    }
    out.sigma_sq = pair_sum / 12;
    // The q-multinomial is the product of [s_i choose n_i]_q, so K is a sum
    // of independent q-binomial indices and cumulants add stage by stage.
    long prefix = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      out.variance += box_variance(prefix, parts[i]);
      out.kappa4 += box_kappa4(prefix, parts[i]);
      prefix += parts[i];
    }
  }

  out.sigma = sqrt(Real(out.sigma_sq, precision_bits));
  out.delta = Real(1L, precision_bits) / sqrt(Real(2 * out.sigma_sq, precision_bits));
  return out;
}

std::vector<Rational> cumulants_from_coeffs(const std::vector<Int>& coeffs, int max_order) {
  if (coeffs.empty()) throw InvalidInputError("empty coefficient sequence");
  if (max_order < 1 || max_order > 4) throw InvalidInputError("max_order must be in 1..4");

  // Raw power sums S_j = sum k^j c_k, then central moments by expansion.
  std::array<Int, 5> S{};
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Int kj = 1;
    for (int j = 0; j <= 4; ++j) {
      S[j] += kj * coeffs[k];
      kj *= static_cast<long>(k);
    }
  }
  std::array<Rational, 5> raw{};
  for (int j = 0; j <= 4; ++j) {
    raw[j] = Rational(S[j], S[0]);
    raw[j].canonicalize();
  }
  const Rational m = raw[1];
  const Rational m2 = raw[2] - m * m;
  const Rational m3 = raw[3] - 3 * m * raw[2] + 2 * m * m * m;
  const Rational m4 = raw[4] - 4 * m * raw[3] + 6 * m * m * raw[2] - 3 * m * m * m * m;

  std::vector<Rational> kappa(static_cast<std::size_t>(max_order) + 1, Rational(0));
  kappa[1] = m;
  if (max_order >= 2) kappa[2] = m2;
  if (max_order >= 3) kappa[3] = m3;
  if (max_order >= 4) kappa[4] = m4 - 3 * m2 * m2;
  return kappa;
}

std::vector<Rational> cumulants_from_coeffs(const CoeffSeq& seq, int max_order) {
  return cumulants_from_coeffs(seq.coeffs(), max_order);
}

WeightVector weights(const std::vector<Int>& coeffs) {
  Int total = 0;
  for (const auto& c : coeffs) total += c;
  if (sgn(total) == 0) throw DegenerateInputError("coefficients sum to zero");
  WeightVector w;
  w.values.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Rational p(c, total);
    p.canonicalize();
    w.values.push_back(std::move(p));
  }
  w.total = 1;
  return w;
}

WeightVector weights(const CoeffSeq& seq) { return weights(seq.coeffs()); }

Window central_window(const MomentProfile& prof, double C, long degree) {
  if (!(C >= 0.0)) throw InvalidInputError("window constant C must be nonnegative");
  const long bits = prof.precision_bits;
  const Real mu(prof.mu, bits);
  const Real spread = Real(C, bits) * prof.sigma;
  Window w;
  w.C = C;
  // mu lies in [0, degree], so only the outer sides need clamping.
  const Real lo = mu - spread;
  const Real hi = mu + spread;
  w.lo = (lo.sign() <= 0) ? 0 : lo.ceil_long();
  w.hi = (hi >= Real(degree, bits)) ? degree : hi.floor_long();
  return w;
}

long center_index(const MomentProfile& prof) {
  Int num = prof.mu.get_num();
  Int den = prof.mu.get_den();
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q.get_si();
}

LogRatioFit log_ratio_fit(const WeightVector& w, const MomentProfile& prof, long m, long d) {
  const long degree = static_cast<long>(w.values.size()) - 1;
  if (m < 0 || d < 0 || m + d > degree) {
    throw RangeError("log-ratio window [m, m+d] must lie inside [0, degree]");
  }
  const long bits = prof.precision_bits;
  const Real delta_sq = prof.delta * prof.delta;

  LogRatioFit fit;
  fit.m = m;
  fit.A = Real(bits);
  const Rational& base = w.values[static_cast<std::size_t>(m)];
  for (long j = 0; j <= d; ++j) {
    if (j == 0) {
      fit.log_ratios.emplace_back(0L, bits);
      continue;
    }
    const Rational ratio = w.values[static_cast<std::size_t>(m + j)] / base;
    fit.log_ratios.push_back(log(Real(ratio, bits)));
  }

  Real num(0L, bits);
  Real den(0L, bits);
  for (long j = 1; j <= d; ++j) {
    const Real jj(j, bits);
    num += jj * (fit.log_ratios[static_cast<std::size_t>(j)] + delta_sq * jj * jj);
    den += jj * jj;
  }
  if (d > 0) fit.A = num / den;

  for (long j = 0; j <= d; ++j) {
    if (j == 0) {
      fit.residuals.emplace_back(0L, bits);
      continue;
    }
    const Real jj(j, bits);
    fit.residuals.push_back(fit.log_ratios[static_cast<std::size_t>(j)] - fit.A * jj +
                            delta_sq * jj * jj);
  }
  return fit;
}

}  // namespace qts
