#include "dflab/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dflab {

namespace {

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string cache_key(const Json& variety, const FlagIdeal& J, Int r, const FitOptions& fit) {
  Json doc = {{"version", kCacheVersion},
              {"variety", variety},
              {"flag_ideal", J.canonical_key()},
              {"r", r},
              {"K_range", {fit.k_first, fit.k_last}},
              {"guard", fit.guard},
              {"K_cap", fit.k_cap}};
  return fnv1a_hex(doc.dump());
}

Json counting_fit_to_json(const CountingFit& fit) {
  return {{"version", kCacheVersion},
          {"A", polynomial_to_json(fit.A)},
          {"h", polynomial_to_json(fit.h)},
          {"k_first", fit.k_first},
          {"weights", fit.weights},
          {"hilbert", fit.hilbert}};
}

CountingFit counting_fit_from_json(const Json& j) {
  CountingFit fit;
  fit.A = polynomial_from_json(j.at("A"));
  fit.h = polynomial_from_json(j.at("h"));
  fit.k_first = j.at("k_first").get<Int>();
  fit.weights = j.at("weights").get<std::vector<Int>>();
  fit.hilbert = j.at("hilbert").get<std::vector<Int>>();
  return fit;
}

std::filesystem::path FitCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<CountingFit> FitCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  // Unreadable entries are treated as misses; verify catches wrong-but-parsable ones.
  try {
    Json j = Json::parse(in);
    if (j.at("version") != kCacheVersion) return std::nullopt;
    return counting_fit_from_json(j);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void FitCache::store(const std::string& key, const CountingFit& fit) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << counting_fit_to_json(fit).dump() << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace dflab
