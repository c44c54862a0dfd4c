#pragma once

// On-disk coefficient cache. One JSON file per parameter set:
//
//   {"schema_version": "1", "kind": "qbinom"|"qmultinom", "params": {...},
//    "coeffs": ["1", "1", ...], "checksum": "<sha256 hex>"}
//
// The checksum is SHA-256 over the decimal strings in index order, each
// followed by '\n'. Writes go to a temporary file that is then renamed.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qts/exactseq.hpp"

namespace qts::cli {

struct ChecksumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CacheFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string coeff_checksum(const std::vector<std::string>& decimal_coeffs);

nlohmann::json to_cache_json(const CoeffSeq& seq);
// Verifies schema, params and checksum.
CoeffSeq from_cache_json(const nlohmann::json& j);

struct CacheListing {
  std::filesystem::path file;
  std::string kind;
  nlohmann::json params;
  long degree = 0;
  std::uintmax_t bytes = 0;
};

class CoeffCache {
 public:
  explicit CoeffCache(std::filesystem::path dir);

  // QTS_CACHE_DIR, else $XDG_CACHE_HOME/qts, else $HOME/.cache/qts, else a
  // directory under the system temp path.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const Params& p) const;

  // nullopt on a miss. Throws ChecksumError on a corrupt entry.
  std::optional<CoeffSeq> load(const Params& p) const;
  void store(const CoeffSeq& seq) const;

  std::vector<CacheListing> list() const;
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace qts::cli
