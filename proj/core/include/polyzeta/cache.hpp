#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "polyzeta/numvalue.hpp"

namespace polyzeta {

struct CacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::size_t entries = 0;
};

// Process-wide cache for multiple-zeta evaluations, keyed by a textual key
// (index plus target accuracy).  Thread-safe.  Can be persisted to disk as
// JSON with an integrity hash; a stale or tampered file is rejected.
class MzvCache {
 public:
  static MzvCache& instance();

  std::optional<NumValue> get(const std::string& key);
  void put(const std::string& key, const NumValue& v);
  void clear();
  CacheStats stats() const;

  // Disk persistence.  Throws std::runtime_error on malformed/tampered files.
  void save(const std::string& path) const;
  void load(const std::string& path);

  static std::string make_key(const std::string& kind, const std::vector<int>& index, double eps);

 private:
  MzvCache() = default;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, NumValue> map_;
  mutable std::uint64_t hits_ = 0, misses_ = 0;
};

}  // namespace polyzeta
