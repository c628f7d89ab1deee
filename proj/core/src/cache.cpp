#include "polyzeta/cache.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polyzeta {

namespace {
// FNV-1a over the canonical serialized entry list.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}
}  // namespace

MzvCache& MzvCache::instance() {
  static MzvCache c;
  return c;
}

std::optional<NumValue> MzvCache::get(const std::string& key) {
  std::shared_lock lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void MzvCache::put(const std::string& key, const NumValue& v) {
  std::unique_lock lock(mu_);
  map_[key] = v;
}

void MzvCache::clear() {
  std::unique_lock lock(mu_);
  map_.clear();
  hits_ = misses_ = 0;
}

CacheStats MzvCache::stats() const {
  std::shared_lock lock(mu_);
  return CacheStats{hits_, misses_, map_.size()};
}

void MzvCache::save(const std::string& path) const {
  nlohmann::json entries = nlohmann::json::array();
  {
    std::shared_lock lock(mu_);
    for (const auto& [k, v] : map_) {
      char vb[40], eb[40];
      std::snprintf(vb, sizeof vb, "%.17g", v.value);
      std::snprintf(eb, sizeof eb, "%.17g", v.err);
      entries.push_back({{"key", k}, {"value", std::string(vb)}, {"err", std::string(eb)}});
    }
  }
  std::string body = entries.dump();
  nlohmann::json j;
  j["schema_version"] = 1;
  j["entries"] = entries;
  char hb[32];
  std::snprintf(hb, sizeof hb, "%016" PRIx64, fnv1a(body));
  j["integrity"] = std::string(hb);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("MzvCache::save: cannot open " + path);
  out << j.dump(1) << "\n";
}

void MzvCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("MzvCache::load: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("MzvCache::load: malformed JSON: ") + e.what());
  }
  if (!j.contains("entries") || !j.contains("integrity"))
    throw std::runtime_error("MzvCache::load: missing fields");
  std::string body = j["entries"].dump();
  char hb[32];
  std::snprintf(hb, sizeof hb, "%016" PRIx64, fnv1a(body));
  if (j["integrity"].get<std::string>() != hb)
    throw std::runtime_error("MzvCache::load: integrity hash mismatch");
  std::unique_lock lock(mu_);
  for (const auto& e : j["entries"]) {
    NumValue v;
    v.value = std::stod(e["value"].get<std::string>());
    v.err = std::stod(e["err"].get<std::string>());
    map_[e["key"].get<std::string>()] = v;
  }
}

std::string MzvCache::make_key(const std::string& kind, const std::vector<int>& index,
                               double eps) {
  std::ostringstream os;
  os << kind << ":";
  for (std::size_t i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
  char eb[40];
  std::snprintf(eb, sizeof eb, "%.3e", eps);
  os << "@" << eb;
  return os.str();
}

}  // namespace polyzeta
