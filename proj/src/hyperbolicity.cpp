#include "qts/hyperbolicity.hpp"

#include <map>
#include <random>

#include "qts/jensen_hermite.hpp"
#include "qts/parallel.hpp"
#include "qts/turan.hpp"

namespace qts {

namespace {

RationalPoly scaled_unit(const RationalPoly& p) {
  if (p.is_zero()) return p;
  Rational s = abs(p.leading());
  return Rational(1 / s) * p;
}

int sign_of(const Rational& q) { return sgn(q) > 0 ? 1 : (sgn(q) < 0 ? -1 : 0); }

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RationalPoly squarefree(const RationalPoly& p) {
  if (p.degree() <= 0) return p;
  const RationalPoly g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

void require_nonzero(const RationalPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("the zero polynomial has no finite root set");
}

}  // namespace

int SturmChain::variations_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& p : polys) signs.push_back(sign_of(p.leading()));
  return count_variations(signs);
}

int SturmChain::variations_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& p : polys) {
    const int s = sign_of(p.leading());
    signs.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

int SturmChain::distinct_real_roots() const {
  return variations_at_minus_infinity() - variations_at_plus_infinity();
}

SturmChain sturm_chain(const RationalPoly& p) {
  require_nonzero(p);
  SturmChain chain;
  chain.squarefree_part = squarefree(p);
  chain.polys.push_back(scaled_unit(chain.squarefree_part));
  if (chain.squarefree_part.degree() == 0) return chain;
  chain.polys.push_back(scaled_unit(chain.squarefree_part.derivative()));
  while (true) {
    const auto& prev = chain.polys[chain.polys.size() - 2];
    const auto& cur = chain.polys.back();
    RationalPoly rem = divmod(prev, cur).second;
    if (rem.is_zero()) break;
    chain.polys.push_back(scaled_unit(Rational(-1) * rem));
  }
  return chain;
}

bool is_hyperbolic_sturm(const RationalPoly& p) {
  const SturmChain chain = sturm_chain(p);
  return chain.distinct_real_roots() == chain.squarefree_part.degree();
}

bool is_hyperbolic(const RationalPoly& p) {
  require_nonzero(p);
  if (p.degree() <= 1) return true;
  if (p.degree() == 2) {
    const auto& c = p.coeffs();
    return sgn(c[1] * c[1] - 4 * c[0] * c[2]) >= 0;
  }
  return is_hyperbolic_sturm(p);
}

int real_root_count(const RationalPoly& p) { return sturm_chain(p).distinct_real_roots(); }

int real_root_count_with_multiplicity(const RationalPoly& p) {
  require_nonzero(p);
  if (p.degree() <= 0) return 0;
  // Yun: f = prod a_i^i with a_i squarefree and pairwise coprime.
  const RationalPoly fp = p.derivative();
  const RationalPoly a0 = gcd(p, fp);
  RationalPoly b = divmod(p, a0).first;
  RationalPoly c = divmod(fp, a0).first;
  RationalPoly d = c - b.derivative();
  int total = 0;
  for (int i = 1; b.degree() > 0; ++i) {
    const RationalPoly a = gcd(b, d);
    if (a.degree() > 0) total += i * sturm_chain(a).distinct_real_roots();
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return total;
}

HyperbolicityReport jensen_hyperbolicity_scan(const CoeffSeq& seq, int d, const Window& w,
                                              unsigned threads) {
  if (d < 1) throw InvalidInputError("Jensen degree d must be at least 1");
  HyperbolicityReport report;
  report.params = seq.params();
  report.window = w;
  report.d = d;
  report.per_m.resize(static_cast<std::size_t>(w.count()));
  parallel_for(w.lo, w.hi + 1, threads, [&](long lo, long hi, unsigned) {
    for (long m = lo; m < hi; ++m) {
      const RationalPoly j = jensen_poly(seq, d, m);
      auto& entry = report.per_m[static_cast<std::size_t>(m - w.lo)];
      entry.m = m;
      entry.is_hyperbolic = is_hyperbolic(j);
      entry.real_root_count = real_root_count(j);
    }
  });
  for (const auto& e : report.per_m) report.all_hyperbolic = report.all_hyperbolic && e.is_hyperbolic;
  return report;
}

bool hyperbolic_implies_turan_check(const std::vector<Int>& u, int d, long lo, long hi,
                                    std::vector<ImplicationDetail>* details) {
  if (d < 1) throw InvalidInputError("degree d must be at least 1");
  const long n = static_cast<long>(u.size());
  lo = std::max(0L, lo);
  hi = std::min(n - 1, hi);
  std::vector<Rational> q(u.begin(), u.end());

  // hyper[j] holds the verdicts for J^{j,m}, m = lo..hi-j.
  std::map<int, bool> all_real_by_degree;
  auto all_real = [&](int j) {
    auto it = all_real_by_degree.find(j);
    if (it != all_real_by_degree.end()) return it->second;
    bool ok = true;
    for (long m = lo; ok && m + j <= hi; ++m) {
      const RationalPoly poly = jensen_poly(q, j, m);
      // An identically zero Jensen polynomial has no nonreal zero.
      ok = poly.is_zero() || is_hyperbolic(poly);
    }
    all_real_by_degree[j] = ok;
    return ok;
  };

  bool holds = true;
  if (details) details->clear();
  for (int r = 1; r <= d; ++r) {
    ImplicationDetail detail;
    detail.r = r;
    detail.antecedent = true;
    for (int j = 1; j <= r + 1 && detail.antecedent; ++j) detail.antecedent = all_real(j);
    if (detail.antecedent) {
      for (const auto& v : L_power_on_range(u, r, lo + r, hi - r)) {
        if (sgn(v) < 0) {
          detail.consequent = false;
          break;
        }
      }
    }
    if (detail.antecedent && !detail.consequent) holds = false;
    if (details) details->push_back(detail);
  }
  return holds;
}

bool hyperbolic_implies_turan_check(const CoeffSeq& seq, int d, const Window& w,
                                    std::vector<ImplicationDetail>* details) {
  return hyperbolic_implies_turan_check(seq.coeffs(), d, w.lo, w.hi, details);
}

ImplicationSweep implication_property_sweep(std::uint64_t seed, int samples, int max_len, int max_d,
                                            long max_value) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(3, std::max(3, max_len));
  std::uniform_int_distribution<int> d_dist(1, std::max(1, max_d));
  std::uniform_int_distribution<long> value_dist(0, max_value);
  ImplicationSweep sweep;
  for (int i = 0; i < samples; ++i) {
    const int len = len_dist(rng);
    const int d = d_dist(rng);
    std::vector<Int> u;
    u.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) u.emplace_back(value_dist(rng));
    std::vector<ImplicationDetail> details;
    const bool ok = hyperbolic_implies_turan_check(u, d, 0, len - 1, &details);
    ++sweep.samples;
    for (const auto& det : details) {
      if (det.antecedent) {
        ++sweep.nonvacuous;
        break;
      }
    }
    if (!ok) {
      ++sweep.failures;
      sweep.failing_sequences.push_back(u);
    }
  }
  return sweep;
}

}  // namespace qts
