#include "qts/cli/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include "qts/cli/report.hpp"

namespace qts::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string coeff_checksum(const std::vector<std::string>& decimal_coeffs) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 unavailable");
  }
  for (const auto& s : decimal_coeffs) {
    EVP_DigestUpdate(ctx.get(), s.data(), s.size());
    EVP_DigestUpdate(ctx.get(), "\n", 1);
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

json to_cache_json(const CoeffSeq& seq) {
  std::vector<std::string> coeffs;
  coeffs.reserve(seq.size());
  for (const auto& c : seq.coeffs()) coeffs.push_back(to_string(c));
  const std::string checksum = coeff_checksum(coeffs);
  return json{{"schema_version", "1"},
              {"kind", kind_name(seq.params())},
              {"params", params_json(seq.params())},
              {"coeffs", std::move(coeffs)},
              {"checksum", checksum}};
}

CoeffSeq from_cache_json(const json& j) {
  try {
    if (j.at("schema_version").get<std::string>() != "1") {
      throw CacheFormatError("unsupported cache schema version");
    }
    const auto kind = j.at("kind").get<std::string>();
    Params params;
    if (kind == "qbinom") {
      params = BoxParams(j.at("params").at("a").get<long>(), j.at("params").at("b").get<long>());
    } else if (kind == "qmultinom") {
      params = Composition(j.at("params").at("parts").get<std::vector<long>>());
    } else {
      throw CacheFormatError("unknown cache kind '" + kind + "'");
    }
    const auto decimals = j.at("coeffs").get<std::vector<std::string>>();
    if (coeff_checksum(decimals) != j.at("checksum").get<std::string>()) {
      throw ChecksumError("cache checksum mismatch");
    }
    std::vector<Int> coeffs;
    coeffs.reserve(decimals.size());
    for (const auto& s : decimals) coeffs.emplace_back(s, 10);
    return CoeffSeq(std::move(params), std::move(coeffs));
  } catch (const json::exception& e) {
    throw CacheFormatError(std::string("malformed cache entry: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CacheFormatError(std::string("malformed cache entry: ") + e.what());
  }
}

CoeffCache::CoeffCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path CoeffCache::default_dir() {
  if (const char* env = std::getenv("QTS_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "qts";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "qts";
  return fs::temp_directory_path() / "qts-cache";
}

fs::path CoeffCache::path_for(const Params& p) const {
  std::ostringstream name;
  if (const auto* box = std::get_if<BoxParams>(&p)) {
    name << "qbinom_" << box->a << "_" << box->b;
  } else {
    name << "qmultinom";
    for (long n : std::get<Composition>(p).parts) name << "_" << n;
  }
  name << ".json";
  return dir_ / name.str();
}

std::optional<CoeffSeq> CoeffCache::load(const Params& p) const {
  const fs::path file = path_for(p);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw CacheFormatError("unreadable cache file " + file.string() + ": " + e.what());
  }
  CoeffSeq seq = from_cache_json(j);
  if (!(seq.params() == p)) throw CacheFormatError("cache file " + file.string() + " holds other params");
  return seq;
}

void CoeffCache::store(const CoeffSeq& seq) const {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(dir_);
  const fs::path target = path_for(seq.params());
  const fs::path tmp = dir_ / (target.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
                               std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << to_cache_json(seq).dump();
    if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::vector<CacheListing> CoeffCache::list() const {
  std::vector<CacheListing> out;
  if (!fs::is_directory(dir_)) return out;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    CacheListing item;
    item.file = entry.path();
    item.bytes = entry.file_size();
    try {
      std::ifstream in(entry.path());
      json j;
      in >> j;
      item.kind = j.value("kind", "");
      item.params = j.value("params", json::object());
      item.degree = static_cast<long>(j.value("coeffs", json::array()).size()) - 1;
    } catch (const json::exception&) {
      item.kind = "unreadable";
    }
    out.push_back(std::move(item));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.file < y.file; });
  return out;
}

std::size_t CoeffCache::clear() const {
  std::size_t removed = 0;
  if (!fs::is_directory(dir_)) return 0;
  std::vector<fs::path> victims;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && (entry.path().extension() == ".json" || name.find(".tmp.") != std::string::npos)) {
      victims.push_back(entry.path());
    }
  }
  for (const auto& v : victims) removed += fs::remove(v) ? 1 : 0;
  return removed;
}

}  // namespace qts::cli
