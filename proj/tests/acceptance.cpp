// Acceptance suite: one PASS/FAIL line per criterion. `--only N` runs a
// single criterion; the exit status is nonzero if any selected one fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qts/algorithms.hpp"
#include "qts/cli/commands.hpp"
#include "qts/exactseq.hpp"
#include "qts/hyperbolicity.hpp"
#include "qts/jensen_hermite.hpp"
#include "qts/moments.hpp"
#include "qts/turan.hpp"
#include "random_poly.hpp"

using namespace qts;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct CliResult {
  int code;
  json report;
};

CliResult cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  json report;
  try {
    report = json::parse(out.str());
  } catch (const json::exception&) {
  }
  return {code, report};
}

// ---------------------------------------------------------------------------

Verdict c1_reference_rows() {
  Verdict v;
  const auto t0 = Clock::now();
  v.require(qbinom_coeffs({1, 3}).coeffs() == ints({1, 1, 1, 1}), "[4 over 1]");
  v.require(qbinom_coeffs({2, 2}).coeffs() == ints({1, 1, 2, 1, 1}), "[4 over 2]");
  v.require(qbinom_coeffs({2, 3}).coeffs() == ints({1, 1, 2, 2, 2, 1, 1}), "[5 over 2]");
  v.require(qbinom_coeffs({3, 3}).coeffs() == ints({1, 1, 2, 3, 3, 3, 3, 2, 1, 1}), "[6 over 3]");
  const CoeffSeq big = qbinom_coeffs({50, 50});
  const auto head = ints({1, 1, 2, 3, 5, 7});
  const auto tail = ints({7, 5, 3, 2, 1, 1});
  bool ends = big.degree() == 2500;
  for (long i = 0; ends && i < 6; ++i) {
    ends = big[i] == head[static_cast<std::size_t>(i)] && big[2495 + i] == tail[static_cast<std::size_t>(i)];
  }
  v.require(ends, "[100 over 50] first/last six");
  const double t = seconds_since(t0);
  v.require(t < 5.0, "runtime < 5 s");
  v.note("runtime " + fmt(t, 3) + " s");
  return v;
}

Verdict c2_oracles() {
  Verdict v;
  const auto t0 = Clock::now();
  long checks = 0;
  bool partitions = true;
  for (long a = 0; a <= 8; ++a) {
    for (long b = 0; b <= 8; ++b) {
      const BoxParams p(a, b);
      const CoeffSeq s = qbinom_coeffs(p);
      for (long k = 0; k <= p.degree(); ++k, ++checks) partitions = partitions && s[k] == partition_count_oracle(p, k);
    }
  }
  v.require(partitions, "ladder == partition oracle for a,b <= 8");
  v.note(std::to_string(checks) + " partition counts");

  bool boxes = true;
  for (long a = 0; a <= 12; ++a) {
    for (long b = 0; b <= 12; ++b) {
      const auto k = cumulants_from_coeffs(qbinom_coeffs({a, b}), 4);
      bool ok = k[1] == q(a * b, 2) && k[2] == box_variance(a, b) && k[4] == box_kappa4(a, b);
      if (a * b > 0) {
        const MomentProfile p = profile(BoxParams(a, b));
        ok = ok && p.mu == k[1] && p.sigma_sq == k[2] && p.variance == k[2] && p.kappa4 == k[4];
      }
      boxes = boxes && ok;
    }
  }
  v.require(boxes, "box closed forms == cumulants for a,b <= 12");
  v.require(box_kappa4(1, 1) == q(-1, 8), "(1,1) kappa4 = -1/8");
  v.require(box_kappa4(2, 2) == q(-8, 3), "(2,2) kappa4 = -8/3");

  long comps = 0;
  bool compositions = true;
  std::function<void(std::vector<long>&, long, std::size_t)> rec = [&](std::vector<long>& parts, long used,
                                                                      std::size_t r) {
    if (parts.size() == r) {
      const Composition c(parts);
      const MomentProfile p = profile(c);
      const auto k = cumulants_from_coeffs(qmultinom_coeffs(c), 4);
      compositions = compositions && k[1] == p.mu && k[2] == p.variance && k[4] == p.kappa4;
      ++comps;
      return;
    }
    const long slots = static_cast<long>(r - parts.size() - 1);
    for (long x = 1; used + x + slots <= 16; ++x) {
      parts.push_back(x);
      rec(parts, used + x, r);
      parts.pop_back();
    }
  };
  for (std::size_t r = 2; r <= 4; ++r) {
    std::vector<long> parts;
    rec(parts, 0, r);
  }
  v.require(compositions, "composition closed forms == cumulants (n <= 16, r <= 4)");
  v.note(std::to_string(comps) + " compositions");
  const double t = seconds_since(t0);
  v.require(t < 60.0, "runtime < 60 s");
  v.note("runtime " + fmt(t, 3) + " s");
  return v;
}

Verdict c3_reference_statistics() {
  Verdict v;
  const MomentProfile p = profile(BoxParams(50, 50));
  const MomentProfile m = profile(Composition({90, 90, 90}));
  auto field = [&](const std::string& name, const Real& x, const std::string& expected) {
    const std::string got = x.to_fixed(static_cast<int>(expected.size() - expected.find('.') - 1));
    v.require(got == expected, name + ": rounded " + got + " vs expected " + expected);
    if (got == expected) v.note(name + " " + got);
  };
  field("sigma(50,50)", p.sigma, "145.057459");
  field("delta(50,50)", p.delta, "0.004874");
  v.require(m.sigma_sq == 366525, "sigma^2(90,90,90) = 366525");
  field("sigma(90,90,90)", m.sigma, "605.413082");
  field("delta(90,90,90)", m.delta, "0.001168");
  return v;
}

Verdict c4_reference_jensen() {
  Verdict v;
  const auto t0 = Clock::now();
  struct Line {
    const char* name;
    long d;
    std::vector<double> expected;  // ascending
  };
  auto check = [&](const CoeffSeq& s, long m, const std::vector<Line>& lines) {
    const MomentProfile prof = profile(s.params());
    for (const auto& line : lines) {
      const FloatPoly j = normalized_jensen(s, prof, line.d, m);
      double worst = 0.0;
      for (long i = 0; i <= line.d; ++i) {
        const double got = j.coeffs[static_cast<std::size_t>(i)].to_double();
        const double err = std::abs(got - line.expected[static_cast<std::size_t>(i)]);
        worst = std::max(worst, err);
        if (err > 1e-6) {
          v.require(false, std::string(line.name) + " X^" + std::to_string(i) + ": computed " + fmt(got, 10) +
                               " vs expected " + fmt(line.expected[static_cast<std::size_t>(i)], 10));
        }
      }
      v.note(std::string(line.name) + " max err " + fmt(worst, 3));
    }
  };
  check(qbinom_coeffs({50, 50}), 1250,
        {{"(50,50) d=1", 1, {0.004787, 0.999977}},
         {"(50,50) d=2", 2, {-1.963914, 0.028721, 0.999907}},
         {"(50,50) d=3", 3, {-0.083596, -5.890518, 0.071796, 0.999790}}});
  check(qmultinom_coeffs(Composition({90, 90, 90})), 12150,
        {{"(90,90,90) d=1", 1, {0.000873, 0.999998}},
         {"(90,90,90) d=2", 2, {-1.494557, 0.005237, 0.999995}},
         {"(90,90,90) d=3", 3, {-0.011740, -4.483363, 0.013092, 0.999991}}});
  const double t = seconds_since(t0);
  v.require(t < 120.0, "runtime < 120 s");
  v.note("runtime " + fmt(t, 3) + " s (cold)");
  return v;
}

Verdict c5_hermite() {
  Verdict v;
  v.require(hermite(2).coeffs == ints({-2, 0, 1}), "H2 = X^2 - 2");
  v.require(hermite(3).coeffs == ints({0, -6, 0, 1}), "H3 = X^3 - 6X");
  bool rec = true, parity = true, genfun = true;
  for (long d = 0; d <= 10; ++d) {
    const auto h = hermite(d).coeffs;
    if (static_cast<long>(h.size()) != d + 1 || h.back() != 1) rec = false;
    for (long i = 0; i <= d; ++i) {
      if ((d - i) % 2 != 0 && h[static_cast<std::size_t>(i)] != 0) parity = false;
    }
    if (d >= 1 && d < 10) {
      const auto prev = hermite(d - 1).coeffs;
      const auto next = hermite(d + 1).coeffs;
      for (long i = 0; i <= d + 1; ++i) {
        Int expect = i >= 1 ? h[static_cast<std::size_t>(i - 1)] : Int(0);
        if (i <= d - 1) expect -= 2 * d * prev[static_cast<std::size_t>(i)];
        if (next[static_cast<std::size_t>(i)] != expect) rec = false;
      }
    }
    // [t^d] exp(-t^2 + X t) = sum over n + k = d of C(n,k) (-1)^k X^(n-k) / n!
    for (long e = 0; e <= d; ++e) {
      Rational coeff = 0;
      if ((d - e) % 2 == 0) {
        const long n = (d + e) / 2;
        const long k = (d - e) / 2;
        Int nfact = 1;
        for (long i = 2; i <= n; ++i) nfact *= i;
        coeff = Rational(binomial(n, k) * (k % 2 == 0 ? 1 : -1), nfact);
        coeff.canonicalize();
      }
      Int dfact = 1;
      for (long i = 2; i <= d; ++i) dfact *= i;
      if (Rational(dfact) * coeff != Rational(h[static_cast<std::size_t>(e)])) genfun = false;
    }
  }
  v.require(rec, "recurrence H_{k+1} = X H_k - 2k H_{k-1}, d <= 10");
  v.require(parity, "parity");
  v.require(genfun, "generating function through t^10");
  return v;
}

Verdict c6_windowed_checks() {
  Verdict v;
  const CliResult big = cli_run({"scan", "--a", "50", "--b", "50", "--d", "2", "--C", "1.5", "--checks",
                                 "turan,hyperbolic", "--strict", "--no-cache"});
  v.require(big.code == 0, "(50,50) d=2 C=1.5 exit 0 (got " + std::to_string(big.code) + ")");
  if (big.code == 0) {
    const json& r = big.report["result"];
    v.require(r["turan"]["all_pass"] == true && r["hyperbolic"]["all_hyperbolic"] == true, "both checks pass");
    v.note("window [" + std::to_string(r["window"]["lo"].get<long>()) + ", " +
           std::to_string(r["window"]["hi"].get<long>()) + "]");
  }
  const CliResult small =
      cli_run({"scan", "--a", "2", "--b", "2", "--d", "1", "--C", "1e9", "--checks", "turan", "--strict", "--no-cache"});
  v.require(small.code == 1, "(2,2) d=1 exit 1 under --strict");
  const json fv = small.report.value("/result/turan/first_violation"_json_pointer, json());
  v.require(fv.is_object() && fv["r"] == 1 && fv["k"] == 1, "(2,2) violation at (r=1, k=1)");
  return v;
}

Verdict c7_implication() {
  Verdict v;
  const CoeffSeq s = qbinom_coeffs({3, 3});
  v.require(hyperbolic_implies_turan_check(s, 2, Window{1e9, 0, s.degree()}), "(3,3) full range, d = 2");
  const ImplicationSweep sweep = implication_property_sweep(0, 1000);
  v.note(std::to_string(sweep.samples) + " random sequences (seed 0), " + std::to_string(sweep.nonvacuous) +
         " with a true antecedent");
  v.require(sweep.failures == 0, std::to_string(sweep.failures) + " random sequences return false");
  if (!sweep.failing_sequences.empty()) {
    std::string u;
    for (const auto& x : sweep.failing_sequences.front()) u += (u.empty() ? "" : ",") + x.get_str();
    v.note("first counterexample u = (" + u + ")");
  }
  return v;
}

Verdict c8_convergence() {
  Verdict v;
  const auto t0 = Clock::now();
  const std::vector<Params> family{BoxParams(25, 25), BoxParams(50, 50), BoxParams(100, 100), BoxParams(200, 200)};
  for (long d : {1L, 2L}) {
    const ConvergenceTable t = convergence_study(family, d, 1.0);
    std::string maxes, centers;
    bool decreasing = true;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      maxes += (i ? ", " : "") + fmt(t.rows[i].max_deviation, 5);
      centers += (i ? ", " : "") + fmt(t.rows[i].center_deviation, 4);
      if (i > 0 && !(t.rows[i].max_deviation < t.rows[i - 1].max_deviation)) decreasing = false;
    }
    v.require(decreasing, "d=" + std::to_string(d) + " max-over-window strictly decreasing: " + maxes);
    if (decreasing) v.note("d=" + std::to_string(d) + " max " + maxes);
    const bool slope_ok = t.center_slope && *t.center_slope <= -0.4;
    v.require(slope_ok, "d=" + std::to_string(d) + " center slope <= -0.4");
    v.note("d=" + std::to_string(d) + " center " + centers + ", slope " +
           (t.center_slope ? fmt(*t.center_slope, 4) : std::string("undefined")));
  }
  const double t = seconds_since(t0);
  v.require(t < 600.0, "runtime < 10 min");
  v.note("runtime " + fmt(t, 3) + " s");
  return v;
}

Verdict c9_roots() {
  Verdict v;
  std::mt19937_64 rng(20240901);
  int disagreements = 0;
  const int samples = 500;
  for (int i = 0; i < samples; ++i) {
    const RationalPoly p = testing::random_poly(rng);
    int numeric = 0;
    for (const auto& r : numeric_roots(to_float(p, 256))) numeric += r.im.is_zero() ? 1 : 0;
    if (numeric != real_root_count(p)) ++disagreements;
  }
  v.require(disagreements == 0, std::to_string(disagreements) + " Sturm/numeric disagreements");
  v.note(std::to_string(samples) + " polynomials, " + std::to_string(disagreements) + " disagreements");

  const double r6 = std::sqrt(6.0);
  const std::vector<double> target{-r6, 0.0, r6};
  double prev = INFINITY;
  bool decreasing = true, real = true;
  std::string dists;
  for (long a : {25L, 50L, 100L, 200L}) {
    const CoeffSeq s = qbinom_coeffs({a, a});
    const MomentProfile prof = profile(s.params());
    const auto roots = numeric_roots(normalized_jensen(s, prof, 3, center_index(prof)));
    double dist = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      real = real && roots[i].im.is_zero();
      dist = std::max(dist, std::abs(roots[i].re.to_double() - target[i]));
    }
    dists += (dists.empty() ? "" : ", ") + fmt(dist, 4);
    decreasing = decreasing && dist < prev;
    prev = dist;
  }
  v.require(real, "J^{3,mu} roots real");
  v.require(decreasing, "distance to {0, +-sqrt 6} strictly decreasing");
  v.note("root distances " + dists);
  return v;
}

Verdict c10_bench() {
  Verdict v;
  const CliResult bench = cli_run({"bench", "--a", "100", "--b", "100", "--algos", "ladder,pascal", "--no-cache"});
  v.require(bench.code == 0 && bench.report["result"]["identical"] == true, "(100,100) ladder == pascal");
  if (bench.code == 0) {
    for (const auto& row : bench.report["result"]["algos"]) {
      v.note(row["algo"].get<std::string>() + " " + fmt(row["ms"].get<double>(), 4) + " ms");
    }
    v.note("kernels " + bench.report["result"]["kernels"].get<std::string>());
  }
  const auto t0 = Clock::now();
  const CliResult expand = cli_run({"expand", "--a", "200", "--b", "200", "--no-cache"});
  const CliResult scan = cli_run({"scan", "--a", "200", "--b", "200", "--d", "2", "--C", "1", "--no-cache"});
  const double t = seconds_since(t0);
  v.require(expand.code == 0 && scan.code == 0, "(200,200) expand + scan succeed");
  v.require(t < 60.0, "(200,200) expand + scan < 60 s");
  v.note("(200,200) expand + d=2 scan " + fmt(t, 3) + " s");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: qts_acceptance [--only N]\n";
      return 2;
    }
  }
  const std::vector<std::pair<const char*, Verdict (*)()>> criteria{
      {"reference coefficient rows", c1_reference_rows},
      {"oracle equivalence", c2_oracles},
      {"reference statistics", c3_reference_statistics},
      {"reference Jensen polynomials", c4_reference_jensen},
      {"Hermite suite", c5_hermite},
      {"windowed Turan and hyperbolicity", c6_windowed_checks},
      {"implication property", c7_implication},
      {"convergence rate", c8_convergence},
      {"root agreement", c9_roots},
      {"benchmark integrity", c10_bench},
  };
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.notes.push_back(std::string("exception: ") + e.what());
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << ")";
    for (const auto& n : v.notes) std::cout << "; " << n;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
