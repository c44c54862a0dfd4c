#include "qts/cli/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qts/algorithms.hpp"
#include "qts/cli/cache.hpp"
#include "qts/cli/report.hpp"
#include "qts/hyperbolicity.hpp"
#include "qts/jensen_hermite.hpp"
#include "qts/moments.hpp"
#include "qts/simd/residue_kernels.hpp"
#include "qts/turan.hpp"

namespace qts::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  long precision = kDefaultPrecisionBits;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
  bool strict = false;
  unsigned threads = 1;
  bool no_cache = false;
};

struct ParamOptions {
  std::optional<long> a;
  std::optional<long> b;
  std::string parts;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw UsageError("expected an integer list, got '" + text + "'");
    }
    if (used != item.size()) throw UsageError("expected an integer list, got '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

Params resolve(const ParamOptions& p) {
  const bool box = p.a.has_value() || p.b.has_value();
  if (box && !p.parts.empty()) throw UsageError("give either --a/--b or --parts, not both");
  if (!p.parts.empty()) return Composition(parse_longs(p.parts));
  if (!p.a || !p.b) throw UsageError("both --a and --b are required (or --parts)");
  return BoxParams(*p.a, *p.b);
}

void add_param_options(CLI::App* sub, ParamOptions& p) {
  sub->add_option("--a", p.a, "box height a");
  sub->add_option("--b", p.b, "box width b");
  sub->add_option("--parts", p.parts, "composition n1,n2,...,nr");
}

class Context {
 public:
  Context(const GlobalOptions& g, std::ostream& out, std::ostream& err)
      : g_(g), out_(out), err_(err), start_(Clock::now()) {
    if (!g.no_cache) cache_.emplace(CoeffCache::default_dir());
  }

  const GlobalOptions& globals() const { return g_; }
  std::ostream& err() { return err_; }
  unsigned threads() const {
    if (g_.threads != 0) return g_.threads;
    return std::max(1u, std::thread::hardware_concurrency());
  }

  CoeffSeq obtain(const Params& p) {
    if (cache_) {
      if (auto hit = cache_->load(p)) {
        ++cache_hits_;
        return *hit;
      }
    }
    CoeffSeq seq = generate(p);
    if (cache_) {
      try {
        cache_->store(seq);
      } catch (const std::exception& e) {
        err_ << "warning: cache write failed: " << e.what() << "\n";
      }
    }
    return seq;
  }

  SeqProvider provider() {
    return [this](const Params& p) { return obtain(p); };
  }

  json base_params() const {
    return json{{"format", g_.format}, {"seed", g_.seed}, {"strict", g_.strict},
                {"threads", g_.threads}, {"no_cache", g_.no_cache}};
  }

  void emit(const std::string& command, json params, json result, const std::string& csv) {
    RunManifest m;
    m.command = command;
    m.params = std::move(params);
    m.precision_bits = g_.precision;
    m.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    m.cache_hits = cache_hits_;
    std::string text;
    if (g_.format == "csv") {
      text = "# manifest " + to_json(m).dump() + "\n" + csv;
    } else {
      text = make_report(m, std::move(result)).dump(2) + "\n";
    }
    if (g_.out.empty()) {
      out_ << text;
      out_.flush();
      return;
    }
    std::ofstream file(g_.out, std::ios::trunc);
    if (!file || !(file << text)) throw std::runtime_error("cannot write " + g_.out);
  }

 private:
  GlobalOptions g_;
  std::ostream& out_;
  std::ostream& err_;
  Clock::time_point start_;
  std::optional<CoeffCache> cache_;
  long cache_hits_ = 0;
};

json with(json base, const json& extra) {
  for (const auto& [k, v] : extra.items()) base[k] = v;
  return base;
}

json params_echo(const Params& p) {
  json j = params_json(p);
  j["kind"] = kind_name(p);
  return j;
}

// ---- expand ----------------------------------------------------------------

void cmd_expand(Context& ctx, const ParamOptions& po) {
  const Params p = resolve(po);
  const CoeffSeq seq = ctx.obtain(p);
  std::ostringstream csv;
  csv << "k,coeff\n";
  for (long k = 0; k <= seq.degree(); ++k) csv << k << "," << to_string(seq[k]) << "\n";
  ctx.emit("expand", with(ctx.base_params(), {{"params", params_echo(p)}}), coeffseq_json(seq),
           csv.str());
}

// ---- stats -----------------------------------------------------------------

void cmd_stats(Context& ctx, const ParamOptions& po, int decimals) {
  if (decimals < 0 || decimals > 200) throw UsageError("--decimals must be in [0, 200]");
  const Params p = resolve(po);
  const MomentProfile prof = profile(p, ctx.globals().precision);
  const json result = profile_json(prof, decimals);
  std::ostringstream csv;
  csv << "field,exact,value\n";
  for (const char* f : {"mu", "sigma_sq", "variance", "kappa4"}) {
    csv << f << "," << result[f]["exact"].get<std::string>() << "," << result[f]["value"].dump() << "\n";
  }
  csv << "sigma,," << prof.sigma.to_fixed(decimals) << "\n";
  csv << "delta,," << prof.delta.to_fixed(decimals) << "\n";
  ctx.emit("stats", with(ctx.base_params(), {{"params", params_echo(p)}, {"decimals", decimals}}), result,
           csv.str());
}

// ---- jensen ----------------------------------------------------------------

void cmd_jensen(Context& ctx, const ParamOptions& po, long d, std::optional<long> m_opt, bool compare) {
  if (d < 0) throw UsageError("--d must be nonnegative");
  const Params p = resolve(po);
  const CoeffSeq seq = ctx.obtain(p);
  const MomentProfile prof = profile(p, ctx.globals().precision);
  const long m = m_opt ? *m_opt : center_index(prof);
  const FloatPoly poly = normalized_jensen(seq, prof, d, m);
  if (poly.precision_warning) {
    ctx.err() << "warning: --precision " << ctx.globals().precision
              << " may be too small for d=" << d << "; raise it\n";
  }
  json result{{"params", params_json(p)}, {"d", d}, {"m", m}, {"poly", floatpoly_json(poly)}};
  std::vector<Int> herm;
  if (compare) {
    herm = hermite(d).coeffs;
    json hc = json::array();
    for (const auto& c : herm) hc.push_back(to_string(c));
    result["hermite"] = json{{"d", d}, {"coeffs", hc}};
    result["deviation"] = float_json(hermite_deviation(poly, d));
  }
  std::ostringstream csv;
  csv << (compare ? "s,coeff,hermite\n" : "s,coeff\n");
  for (long s = 0; s <= d; ++s) {
    csv << s << "," << poly.coeffs[static_cast<std::size_t>(s)].to_significant(12);
    if (compare) csv << "," << to_string(herm[static_cast<std::size_t>(s)]);
    csv << "\n";
  }
  json echo{{"params", params_echo(p)}, {"d", d}, {"m", m}, {"compare", compare}};
  ctx.emit("jensen", with(ctx.base_params(), echo), std::move(result), csv.str());
}

// ---- scan ------------------------------------------------------------------

bool cmd_scan(Context& ctx, const ParamOptions& po, long d, double C, const std::string& checks_text) {
  if (d < 1) throw UsageError("--d must be at least 1");
  bool want_turan = false, want_hyper = false, want_impl = false;
  for (const auto& c : split(checks_text, ',')) {
    if (c == "turan") want_turan = true;
    else if (c == "hyperbolic") want_hyper = true;
    else if (c == "implication") want_impl = true;
    else throw UsageError("unknown check '" + c + "' (turan, hyperbolic, implication)");
  }
  if (!want_turan && !want_hyper && !want_impl) throw UsageError("--checks is empty");

  const Params p = resolve(po);
  const CoeffSeq seq = ctx.obtain(p);
  const MomentProfile prof = profile(p, ctx.globals().precision);
  const Window w = central_window(prof, C, seq.degree());

  json result{{"params", params_json(p)}, {"d", d}, {"window", window_json(w)}};
  std::ostringstream csv;
  csv << "check,index,position,value\n";
  bool all_pass = true;
  if (want_turan) {
    const TuranReport rep = window_turan_scan(seq, static_cast<int>(d), w);
    result["turan"] = turan_json(rep);
    all_pass = all_pass && rep.all_pass;
    for (std::size_t r = 0; r < rep.signs.size(); ++r) {
      for (std::size_t i = 0; i < rep.signs[r].size(); ++i) {
        csv << "turan," << r + 1 << "," << w.lo + static_cast<long>(i) << "," << rep.signs[r][i] << "\n";
      }
    }
  }
  if (want_hyper) {
    const HyperbolicityReport rep = jensen_hyperbolicity_scan(seq, static_cast<int>(d), w, ctx.threads());
    result["hyperbolic"] = hyperbolicity_json(rep);
    all_pass = all_pass && rep.all_hyperbolic;
    for (const auto& e : rep.per_m) csv << "hyperbolic," << d << "," << e.m << "," << e.is_hyperbolic << "\n";
  }
  if (want_impl) {
    std::vector<ImplicationDetail> details;
    const bool holds = hyperbolic_implies_turan_check(seq, static_cast<int>(d), w, &details);
    json rows = json::array();
    for (const auto& det : details) {
      rows.push_back(json{{"r", det.r}, {"antecedent", det.antecedent}, {"consequent", det.consequent}});
      csv << "implication," << det.r << "," << det.antecedent << "," << det.consequent << "\n";
    }
    result["implication"] = json{{"holds", holds}, {"details", rows}};
    all_pass = all_pass && holds;
  }
  result["all_pass"] = all_pass;
  json echo{{"params", params_echo(p)}, {"d", d}, {"C", float_json(C)}, {"checks", checks_text}};
  ctx.emit("scan", with(ctx.base_params(), echo), std::move(result), csv.str());
  return all_pass;
}

// ---- convergence -----------------------------------------------------------

void write_tsv(const fs::path& path, const std::string& ycol, const ConvergenceTable& t, bool center) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << "size\t" << ycol << "\n";
  for (const auto& row : t.rows) {
    f << row.size << "\t" << significant12(center ? row.center_deviation : row.max_deviation) << "\n";
  }
}

void cmd_convergence(Context& ctx, const std::string& square, const std::string& parts_family, long d,
                     double C, const std::string& tsv) {
  if (square.empty() == parts_family.empty()) {
    throw UsageError("give exactly one of --square or --parts-family");
  }
  std::vector<Params> family;
  if (!square.empty()) {
    for (long a : parse_longs(square)) family.emplace_back(BoxParams(a, a));
  } else {
    for (const auto& item : split(parts_family, ';')) family.emplace_back(Composition(parse_longs(item)));
  }
  const ConvergenceTable table =
      convergence_study(family, d, C, ctx.globals().precision, ctx.threads(), ctx.provider());
  if (!tsv.empty()) {
    const fs::path main(tsv);
    fs::path center = main;
    center.replace_filename(main.stem().string() + "_center" + main.extension().string());
    write_tsv(main, "max_deviation", table, false);
    write_tsv(center, "center_deviation", table, true);
  }
  std::ostringstream csv;
  csv << "size,max_deviation,argmax_m,center_m,center_deviation\n";
  for (const auto& row : table.rows) {
    csv << row.size << "," << significant12(row.max_deviation) << "," << row.argmax_m << "," << row.center_m
        << "," << significant12(row.center_deviation) << "\n";
  }
  json fam = json::array();
  for (const auto& p : family) fam.push_back(params_echo(p));
  json echo{{"family", fam}, {"d", d}, {"C", float_json(C)}, {"tsv", tsv}};
  ctx.emit("convergence", with(ctx.base_params(), echo), convergence_json(table, family), csv.str());
}

// ---- oracle ----------------------------------------------------------------

struct OracleLimits {
  long max_box = 8;
  bool cumulants = false;
  long max_n = 0;
  long max_r = 4;
  int implication_samples = 0;
};

void for_each_composition(long r, long max_n, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> parts(static_cast<std::size_t>(r), 1);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long used) {
    if (i == parts.size()) {
      fn(parts);
      return;
    }
    const long remaining_slots = static_cast<long>(parts.size() - i - 1);
    for (long v = 1; used + v + remaining_slots <= max_n; ++v) {
      parts[i] = v;
      rec(i + 1, used + v);
    }
  };
  rec(0, 0);
}

bool cmd_oracle(Context& ctx, const OracleLimits& lim) {
  if (lim.max_box < 0 || lim.max_n < 0 || lim.max_r < 2 || lim.implication_samples < 0) {
    throw UsageError("oracle limits must be nonnegative (and --max-r >= 2)");
  }
  long partition_checks = 0;
  json partition_failures = json::array();
  long cumulant_checks = 0;
  json cumulant_failures = json::array();
  for (long a = 0; a <= lim.max_box; ++a) {
    for (long b = 0; b <= lim.max_box; ++b) {
      const BoxParams box(a, b);
      const CoeffSeq seq = qbinom_coeffs(box);
      for (long k = 0; k <= box.degree(); ++k) {
        ++partition_checks;
        if (seq[k] != partition_count_oracle(box, k)) {
          partition_failures.push_back(json{{"a", a}, {"b", b}, {"k", k}});
        }
      }
      if (lim.cumulants) {
        const auto kappa = cumulants_from_coeffs(seq, 4);
        Rational mu(a * b, 2);
        mu.canonicalize();
        ++cumulant_checks;
        if (kappa[1] != mu || kappa[2] != box_variance(a, b) || kappa[4] != box_kappa4(a, b)) {
          cumulant_failures.push_back(json{{"a", a}, {"b", b}});
        }
      }
    }
  }
  long composition_checks = 0;
  json composition_failures = json::array();
  for (long r = 2; lim.max_n > 0 && r <= lim.max_r; ++r) {
    for_each_composition(r, lim.max_n, [&](const std::vector<long>& parts) {
      const Composition c(parts);
      const MomentProfile prof = profile(c, ctx.globals().precision);
      const auto kappa = cumulants_from_coeffs(qmultinom_coeffs(c), 4);
      ++composition_checks;
      if (kappa[1] != prof.mu || kappa[2] != prof.variance || kappa[4] != prof.kappa4) {
        composition_failures.push_back(json{{"parts", parts}});
      }
    });
  }
  json result{{"partition_checks", partition_checks},
              {"partition_failures", partition_failures},
              {"cumulant_checks", cumulant_checks},
              {"cumulant_failures", cumulant_failures},
              {"composition_checks", composition_checks},
              {"composition_failures", composition_failures}};
  bool all_pass = partition_failures.empty() && cumulant_failures.empty() && composition_failures.empty();
  if (lim.implication_samples > 0) {
    const ImplicationSweep sweep = implication_property_sweep(ctx.globals().seed, lim.implication_samples);
    json failing = json::array();
    for (const auto& u : sweep.failing_sequences) {
      json row = json::array();
      for (const auto& v : u) row.push_back(to_string(v));
      failing.push_back(row);
    }
    result["implication"] = json{{"samples", sweep.samples},
                                 {"nonvacuous", sweep.nonvacuous},
                                 {"failures", sweep.failures},
                                 {"failing_sequences", failing}};
    all_pass = all_pass && sweep.failures == 0;
  }
  result["all_pass"] = all_pass;

  std::ostringstream csv;
  csv << "check,count,failures\n";
  csv << "partition," << partition_checks << "," << partition_failures.size() << "\n";
  csv << "cumulant," << cumulant_checks << "," << cumulant_failures.size() << "\n";
  csv << "composition," << composition_checks << "," << composition_failures.size() << "\n";
  if (result.contains("implication")) {
    csv << "implication," << result["implication"]["samples"] << "," << result["implication"]["failures"] << "\n";
  }
  json echo{{"max_box", lim.max_box}, {"cumulants", lim.cumulants}, {"max_n", lim.max_n},
            {"max_r", lim.max_r}, {"implication_samples", lim.implication_samples}};
  ctx.emit("oracle", with(ctx.base_params(), echo), std::move(result), csv.str());
  return all_pass;
}

// ---- bench -----------------------------------------------------------------

void cmd_bench(Context& ctx, const ParamOptions& po, const std::string& algos_text, int repeat) {
  if (repeat < 1) throw UsageError("--repeat must be at least 1");
  const Params p = resolve(po);
  const auto* box = std::get_if<BoxParams>(&p);
  const auto& kernels = simd::active_kernels();

  std::vector<std::pair<std::string, std::function<CoeffSeq()>>> algos;
  for (const auto& name : split(algos_text, ',')) {
    if (name == "ladder") {
      algos.emplace_back(name, [&] { return generate(p); });
    } else if (name == "modular") {
      algos.emplace_back(name, [&]() -> CoeffSeq {
        if (box) return qbinom_modular(*box, kernels);
        return qmultinom_modular(std::get<Composition>(p), kernels);
      });
    } else if (name == "pascal" || name == "conv") {
      if (!box) throw UsageError("algorithm '" + name + "' needs --a/--b");
      if (name == "pascal") algos.emplace_back(name, [&] { return qbinom_pascal(*box); });
      else algos.emplace_back(name, [&] { return qbinom_convolution(*box); });
    } else {
      throw UsageError("unknown algorithm '" + name + "' (ladder, pascal, conv, modular)");
    }
  }
  if (algos.empty()) throw UsageError("--algos is empty");

  std::optional<CoeffSeq> reference;
  bool identical = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "algo,ms,memory_bytes,identical\n";
  for (const auto& [name, fn] : algos) {
    double best = 0.0;
    std::optional<CoeffSeq> out;
    for (int i = 0; i < repeat; ++i) {
      const auto t0 = Clock::now();
      CoeffSeq seq = fn();
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      best = i == 0 ? ms : std::min(best, ms);
      out.emplace(std::move(seq));
    }
    if (!reference) reference = out;
    const bool same = *out == *reference;
    identical = identical && same;
    const std::size_t mem = memory_estimate_bytes(out->coeffs());
    rows.push_back(json{{"algo", name}, {"ms", best}, {"memory_bytes", mem}, {"identical", same}});
    csv << name << "," << significant12(best) << "," << mem << "," << same << "\n";
  }
  std::vector<std::string> decimals;
  for (const auto& c : reference->coeffs()) decimals.push_back(to_string(c));
  json result{{"params", params_json(p)},
              {"degree", reference->degree()},
              {"kernels", std::string(kernels.name)},
              {"repeat", repeat},
              {"algos", rows},
              {"identical", identical},
              {"checksum", coeff_checksum(decimals)}};
  if (reference->degree() <= 64) result["coeffs"] = decimals;
  json echo{{"params", params_echo(p)}, {"algos", algos_text}, {"repeat", repeat}};
  ctx.emit("bench", with(ctx.base_params(), echo), std::move(result), csv.str());
  if (!identical) throw InternalInconsistencyError("bench algorithms disagree");
}

// ---- cache -----------------------------------------------------------------

void cmd_cache_list(Context& ctx) {
  const CoeffCache cache(CoeffCache::default_dir());
  json entries = json::array();
  std::ostringstream csv;
  csv << "file,kind,degree,bytes\n";
  for (const auto& e : cache.list()) {
    entries.push_back(json{{"file", e.file.filename().string()},
                           {"kind", e.kind},
                           {"params", e.params},
                           {"degree", e.degree},
                           {"bytes", e.bytes}});
    csv << e.file.filename().string() << "," << e.kind << "," << e.degree << "," << e.bytes << "\n";
  }
  json result{{"dir", cache.dir().string()}, {"entries", entries}};
  ctx.emit("cache list", ctx.base_params(), std::move(result), csv.str());
}

void cmd_cache_clear(Context& ctx) {
  const CoeffCache cache(CoeffCache::default_dir());
  const std::size_t removed = cache.clear();
  json result{{"dir", cache.dir().string()}, {"removed", removed}};
  ctx.emit("cache clear", ctx.base_params(), std::move(result),
           "dir,removed\n" + cache.dir().string() + "," + std::to_string(removed) + "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian and q-multinomial coefficient sequences, Jensen polynomials and Turan checks", "qts"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--precision", g.precision, "working precision in bits")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write the report to PATH instead of stdout");
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
  app.add_flag("--strict", g.strict, "exit 1 when a check finds a violation");
  app.add_option("--threads", g.threads, "worker threads (0: all cores)")->capture_default_str();
  app.add_flag("--no-cache", g.no_cache, "bypass the coefficient cache");

  ParamOptions po;
  long d = 1;
  std::optional<long> m;
  bool compare = false;
  double C = 1.0;
  int decimals = 6;
  std::string checks = "turan,hyperbolic";
  std::string square, parts_family, tsv;
  OracleLimits lim;
  std::string algos = "ladder,pascal";
  int repeat = 1;

  auto* expand = app.add_subcommand("expand", "coefficient sequence");
  add_param_options(expand, po);

  auto* stats = app.add_subcommand("stats", "mean, variance, cumulants and scale");
  add_param_options(stats, po);
  stats->add_option("--decimals", decimals, "fixed decimals for sigma and delta")->capture_default_str();

  auto* jensen = app.add_subcommand("jensen", "normalized Jensen polynomial at m");
  add_param_options(jensen, po);
  jensen->add_option("--d", d, "degree")->required();
  jensen->add_option("--m", m, "shift (default: ceil of the mean)");
  jensen->add_flag("--compare", compare, "compare against the Hermite polynomial");

  auto* scan = app.add_subcommand("scan", "window checks");
  add_param_options(scan, po);
  scan->add_option("--d", d, "degree")->capture_default_str();
  scan->add_option("--C", C, "window half-width in standard deviations")->capture_default_str();
  scan->add_option("--checks", checks, "subset of turan,hyperbolic,implication")->capture_default_str();

  auto* conv = app.add_subcommand("convergence", "Hermite deviation over a family");
  conv->add_option("--square", square, "a values for (a,a) boxes, comma separated");
  conv->add_option("--parts-family", parts_family, "compositions separated by ';'");
  conv->add_option("--d", d, "degree")->capture_default_str();
  conv->add_option("--C", C, "window half-width in standard deviations")->capture_default_str();
  conv->add_option("--tsv", tsv, "plot data path; a _center file is written beside it");

  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->add_option("--max-box", lim.max_box, "check all a, b <= N")->capture_default_str();
  oracle->add_flag("--cumulants", lim.cumulants, "compare closed-form cumulants");
  oracle->add_option("--max-n", lim.max_n, "compositions with total <= N (0: skip)")->capture_default_str();
  oracle->add_option("--max-r", lim.max_r, "compositions with at most R parts")->capture_default_str();
  oracle->add_option("--implication-samples", lim.implication_samples,
                     "random sequences for the implication check")
      ->capture_default_str();

  auto* bench = app.add_subcommand("bench", "compare generation algorithms");
  add_param_options(bench, po);
  bench->add_option("--algos", algos, "subset of ladder,pascal,conv,modular")->capture_default_str();
  bench->add_option("--repeat", repeat, "runs per algorithm; the minimum is reported")->capture_default_str();

  auto* cache = app.add_subcommand("cache", "manage the coefficient cache");
  cache->require_subcommand(1);
  auto* cache_list = cache->add_subcommand("list", "list cached sequences");
  auto* cache_clear = cache->add_subcommand("clear", "remove cached sequences");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g.precision < 64) throw UsageError("--precision must be at least 64");
    Context ctx(g, out, err);
    bool pass = true;
    if (*expand) cmd_expand(ctx, po);
    else if (*stats) cmd_stats(ctx, po, decimals);
    else if (*jensen) cmd_jensen(ctx, po, d, m, compare);
    else if (*scan) pass = cmd_scan(ctx, po, d, C, checks);
    else if (*conv) cmd_convergence(ctx, square, parts_family, d, C, tsv);
    else if (*oracle) pass = cmd_oracle(ctx, lim);
    else if (*bench) cmd_bench(ctx, po, algos, repeat);
    else if (*cache_list) cmd_cache_list(ctx);
    else if (*cache_clear) cmd_cache_clear(ctx);
    return (!pass && g.strict) ? kExitViolation : kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ChecksumError& e) {
    err << "checksum error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const CacheFormatError& e) {
    err << "cache error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InternalInconsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateInputError& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    err << "out of memory\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace qts::cli
