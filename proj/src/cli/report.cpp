#include "qts/cli/report.hpp"

#include <cstdio>

namespace qts::cli {

std::string to_string(const Int& z) { return z.get_str(10); }
std::string to_string(const Rational& q) { return q.get_str(10); }

std::string significant12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

std::string hex_of(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

json number_from(const std::string& text) {
  try {
    return json(std::stod(text));
  } catch (const std::exception&) {
    return json(text);  // inf / nan stay strings
  }
}

}  // namespace

json float_json(const Real& x, int fixed_decimals) {
  json j{{"value", number_from(x.to_significant(12))}, {"hex", x.to_hex()}};
  if (fixed_decimals >= 0) j["fixed"] = x.to_fixed(fixed_decimals);
  return j;
}

json float_json(double x) {
  return json{{"value", number_from(significant12(x))}, {"hex", hex_of(x)}};
}

json rational_json(const Rational& q, long precision_bits) {
  return json{{"exact", to_string(q)},
              {"value", number_from(Real(q, precision_bits).to_significant(12))}};
}

json params_json(const Params& p) {
  if (const auto* box = std::get_if<BoxParams>(&p)) return json{{"a", box->a}, {"b", box->b}};
  return json{{"parts", std::get<Composition>(p).parts}};
}

json coeffseq_json(const CoeffSeq& seq) {
  json coeffs = json::array();
  for (const auto& c : seq.coeffs()) coeffs.push_back(to_string(c));
  return json{{"kind", kind_name(seq.params())},
              {"params", params_json(seq.params())},
              {"degree", seq.degree()},
              {"coeffs", std::move(coeffs)}};
}

json window_json(const Window& w) {
  return json{{"C", float_json(w.C)}, {"lo", w.lo}, {"hi", w.hi}, {"count", w.count()}};
}

json profile_json(const MomentProfile& prof, int decimals) {
  const long bits = prof.precision_bits;
  return json{{"params", params_json(prof.params)},
              {"degree", prof.degree},
              {"mu", rational_json(prof.mu, bits)},
              {"sigma_sq", rational_json(prof.sigma_sq, bits)},
              {"variance", rational_json(prof.variance, bits)},
              {"kappa4", rational_json(prof.kappa4, bits)},
              {"sigma", float_json(prof.sigma, decimals)},
              {"delta", float_json(prof.delta, decimals)},
              {"precision_bits", bits}};
}

json floatpoly_json(const FloatPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(float_json(c, 6));
  return json{{"degree", p.degree()},
              {"coeffs", std::move(coeffs)},
              {"precision_bits", p.precision_bits},
              {"precision_warning", p.precision_warning}};
}

json turan_json(const TuranReport& r) {
  json signs = json::array();
  for (const auto& row : r.signs) {
    std::string s;
    s.reserve(row.size());
    for (int v : row) s.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
    signs.push_back(std::move(s));
  }
  json out{{"params", params_json(r.params)},
           {"window", window_json(r.window)},
           {"d", r.d},
           {"signs", std::move(signs)},
           {"all_pass", r.all_pass},
           {"first_violation", nullptr}};
  if (r.first_violation) {
    out["first_violation"] = json{{"r", r.first_violation->first}, {"k", r.first_violation->second}};
  }
  return out;
}

json hyperbolicity_json(const HyperbolicityReport& r) {
  json per_m = json::array();
  json failing = json::array();
  for (const auto& e : r.per_m) {
    per_m.push_back(json{{"m", e.m}, {"hyperbolic", e.is_hyperbolic}, {"real_roots", e.real_root_count}});
    if (!e.is_hyperbolic) failing.push_back(e.m);
  }
  return json{{"params", params_json(r.params)},
              {"window", window_json(r.window)},
              {"d", r.d},
              {"per_m", std::move(per_m)},
              {"non_hyperbolic_m", std::move(failing)},
              {"all_hyperbolic", r.all_hyperbolic}};
}

json convergence_json(const ConvergenceTable& t, const std::vector<Params>& family) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    rows.push_back(json{{"params", params_json(family[i])},
                        {"size", row.size},
                        {"window", window_json(row.window)},
                        {"max_deviation", float_json(row.max_deviation)},
                        {"argmax_m", row.argmax_m},
                        {"center_m", row.center_m},
                        {"center_deviation", float_json(row.center_deviation)}});
  }
  auto slope = [](const std::optional<double>& s) { return s ? float_json(*s) : json(nullptr); };
  return json{{"d", t.d},
              {"C", float_json(t.C)},
              {"rows", std::move(rows)},
              {"fitted_slope", slope(t.fitted_slope)},
              {"fitted_slope_defined", t.fitted_slope.has_value()},
              {"center_slope", slope(t.center_slope)},
              {"center_slope_defined", t.center_slope.has_value()}};
}

json log_ratio_json(const LogRatioFit& fit) {
  json logs = json::array();
  json residuals = json::array();
  for (const auto& v : fit.log_ratios) logs.push_back(float_json(v));
  for (const auto& v : fit.residuals) residuals.push_back(float_json(v));
  return json{{"m", fit.m}, {"A", float_json(fit.A)}, {"log_ratios", logs}, {"residuals", residuals}};
}

json to_json(const RunManifest& m) {
  return json{{"command", m.command},
              {"params", m.params},
              {"precision_bits", m.precision_bits},
              {"tool_version", m.tool_version},
              {"wall_time_ms", m.wall_time_ms},
              {"cache_hits", m.cache_hits}};
}

json make_report(const RunManifest& m, json result) {
  return json{{"manifest", to_json(m)}, {"result", std::move(result)}};
}

}  // namespace qts::cli
