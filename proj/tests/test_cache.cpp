#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "polyzeta/cache.hpp"
#include "polyzeta/index.hpp"
#include "polyzeta/zeta.hpp"

using namespace polyzeta;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("cache") {

TEST_CASE("keys separate kind, index and accuracy") {
  std::string a = MzvCache::make_key("mzv", {1, 2}, 1e-13);
  CHECK(a != MzvCache::make_key("mzv-star", {1, 2}, 1e-13));
  CHECK(a != MzvCache::make_key("mzv", {1, 2}, 1e-8));
  CHECK(a != MzvCache::make_key("mzv", {12}, 1e-13));
  CHECK(a == MzvCache::make_key("mzv", {1, 2}, 1e-13));
}

TEST_CASE("write, read, clear and statistics") {
  MzvCache& c = MzvCache::instance();
  c.clear();
  CHECK(c.stats().entries == 0);
  CHECK(!c.get("nope").has_value());
  c.put("k1", NumValue{1.5, 1e-10});
  auto v = c.get("k1");
  REQUIRE(v.has_value());
  CHECK(v->value == 1.5);
  CHECK(v->err == 1e-10);
  CacheStats st = c.stats();
  CHECK(st.entries == 1);
  CHECK(st.hits >= 1);
  CHECK(st.misses >= 1);
  c.clear();
  CHECK(c.stats().entries == 0);
}

TEST_CASE("zeta evaluations populate and reuse the cache") {
  MzvCache& c = MzvCache::instance();
  c.clear();
  (void)mzv(Index{1, 2}, 1e-10);
  CacheStats first = c.stats();
  CHECK(first.entries >= 1);
  (void)mzv(Index{1, 2}, 1e-10);
  CacheStats second = c.stats();
  CHECK(second.hits > first.hits);
  CHECK(second.entries == first.entries);
  c.clear();
}

TEST_CASE("disk persistence round trip with integrity protection") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "polyzeta_cache_roundtrip.json";
  MzvCache& c = MzvCache::instance();
  c.clear();
  c.put("alpha", NumValue{0.25, 1e-12});
  c.put("beta", NumValue{-3.5, 2e-11});
  c.save(path.string());
  c.clear();
  CHECK(c.stats().entries == 0);
  c.load(path.string());
  auto v = c.get("alpha");
  REQUIRE(v.has_value());
  CHECK(v->value == 0.25);
  CHECK(c.stats().entries == 2);

  // tampering with a stored value must be rejected by the integrity hash
  nlohmann::json j = nlohmann::json::parse(slurp(path));
  REQUIRE(j.contains("entries"));
  REQUIRE(j.contains("integrity"));
  j["entries"].begin().value()["value"] = 123456.0;
  {
    std::ofstream out(path);
    out << j.dump();
  }
  CHECK_THROWS_AS(c.load(path.string()), std::runtime_error);

  // malformed JSON must be rejected
  {
    std::string body = slurp(path);
    std::ofstream out(path);
    out << body.substr(0, body.size() / 2);
  }
  CHECK_THROWS_AS(c.load(path.string()), std::runtime_error);

  CHECK_THROWS_AS(c.load("/nonexistent/polyzeta-cache.json"), std::runtime_error);
  fs::remove(path);
  c.clear();
}

}  // TEST_SUITE("cache")
