#pragma once

// JSON and CSV serialization of the library's result types. Big integers are
// decimal strings; floats are {value: 12 significant digits, hex: exact}.

#include <chrono>
#include <string>

#include "json.hpp"
#include "qts/exactseq.hpp"
#include "qts/hyperbolicity.hpp"
#include "qts/jensen_hermite.hpp"
#include "qts/moments.hpp"
#include "qts/turan.hpp"

namespace qts::cli {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

struct RunManifest {
  std::string command;
  json params = json::object();
  long precision_bits = kDefaultPrecisionBits;
  std::string tool_version = kToolVersion;
  double wall_time_ms = 0.0;
  long cache_hits = 0;
};

json to_json(const RunManifest& m);
json make_report(const RunManifest& m, json result);

json float_json(const Real& x, int fixed_decimals = -1);
json float_json(double x);
json rational_json(const Rational& q, long precision_bits);
json params_json(const Params& p);
json coeffseq_json(const CoeffSeq& seq);
json window_json(const Window& w);
json profile_json(const MomentProfile& prof, int decimals);
json floatpoly_json(const FloatPoly& p);
json turan_json(const TuranReport& r);
json hyperbolicity_json(const HyperbolicityReport& r);
json convergence_json(const ConvergenceTable& t, const std::vector<Params>& family);
json log_ratio_json(const LogRatioFit& fit);

std::string to_string(const Int& z);
std::string to_string(const Rational& q);

// "%.12g" of a double.
std::string significant12(double x);

}  // namespace qts::cli
