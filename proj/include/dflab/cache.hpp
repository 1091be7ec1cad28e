#pragma once

// On-disk cache of counting fits. Entries are keyed by an FNV-1a hash of the
// canonical JSON of (variety, flag ideal, r, K range, fit settings, version);
// the cache only saves work, results are identical without it.

#include <filesystem>
#include <optional>
#include <string>

#include "dflab/job.hpp"
#include "dflab/weights.hpp"

namespace dflab {

inline constexpr const char* kCacheVersion = "dflab-1";

std::string cache_key(const Json& variety, const FlagIdeal& J, Int r, const FitOptions& fit);

class FitCache {
 public:
  explicit FitCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::optional<CountingFit> load(const std::string& key) const;
  void store(const std::string& key, const CountingFit& fit) const;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

Json counting_fit_to_json(const CountingFit& fit);
CountingFit counting_fit_from_json(const Json& j);

}  // namespace dflab
