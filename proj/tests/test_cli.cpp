#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "polyzeta/index.hpp"
#include "polyzeta/polybern.hpp"

using namespace polyzeta;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
  std::string cmd = env_prefix + "'" + POLYZETA_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  for (;;) {
    std::size_t n = fread(buf, 1, sizeof buf, p);
    if (n == 0) break;
    out.append(buf, n);
  }
  int st = pclose(p);
  CliResult r;
  r.out = std::move(out);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and unknown commands") {
  CliResult help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("compute") != std::string::npos);
  CHECK(help.out.find("verify") != std::string::npos);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("compute bernoulli --index 1,,2").code == 2);
  CHECK(run_cli("verify duality --suite nope").code == 2);
}

TEST_CASE("computed table matches the library exactly") {
  CliResult r = run_cli("compute bernoulli --kind B --index -2 --n 0..4 --output json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["cases"].size() == 5);
  for (unsigned n = 0; n <= 4; ++n) {
    std::string got = j["cases"][n]["lhs"].get<std::string>();
    CHECK(got == poly_bernoulli(BernKind::B, Index{-2}, n).str());
  }
}

TEST_CASE("verification suite output: json, csv and determinism") {
  CliResult a = run_cli("verify duality --suite B-neg --max 4 --output json");
  REQUIRE(a.code == 0);
  json j = json::parse(a.out);
  CHECK(j["schema_version"].get<int>() == 1);
  CHECK(j["summary"]["all_pass"].get<bool>());
  CHECK(j["cases"].size() == 25);

  CliResult b = run_cli("verify duality --suite B-neg --max 4 --output json");
  CHECK(a.out == b.out);  // byte-for-byte reproducible

  CliResult c = run_cli("verify duality --suite B-neg --max 4 --output csv");
  REQUIRE(c.code == 0);
  std::size_t rows = 0;
  for (char ch : c.out)
    if (ch == '\n') ++rows;
  CHECK(rows == j["cases"].size() + 1);  // header + one line per case
}

TEST_CASE("numeric evaluation through the command line") {
  CliResult r = run_cli("compute mzv --index 1,2 --eps 1e-10 --output json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  double v = std::stod(j["cases"][0]["lhs"].get<std::string>());
  CHECK(std::fabs(v - 1.2020569031595942854) <= 1e-8);

  CliResult q = run_cli("quad eta --index -1 --s 2 --output json");
  REQUIRE(q.code == 0);
  json qj = json::parse(q.out);
  CHECK(qj["schema_version"].get<int>() == 1);
  CHECK(std::fabs(qj["value"].get<double>() - 0.25) <= 1e-8);
  CHECK(qj.contains("err"));
  CHECK(qj.contains("head"));
  CHECK(qj.contains("tail_bound"));
  CHECK(qj["evaluations"].get<long>() > 0);
}

TEST_CASE("experiment status is visible in reports") {
  CliResult r = run_cli("verify eta-dual --output json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["status"].get<std::string>() == "experiment");
  CHECK(j["summary"]["all_pass"].get<bool>());
}

TEST_CASE("cache file lifecycle through the environment variable") {
  namespace fs = std::filesystem;
  fs::path cache = fs::temp_directory_path() / "polyzeta_cli_cache_test.json";
  fs::remove(cache);
  std::string envp = "POLYZETA_CACHE_FILE='" + cache.string() + "' ";

  CliResult c1 = run_cli("compute mzv --index 1,3 --output json", envp);
  REQUIRE(c1.code == 0);
  CHECK(fs::exists(cache));

  CliResult st = run_cli("cache stats --output json", envp);
  REQUIRE(st.code == 0);
  json stats = json::parse(st.out);
  CHECK(stats["entries"].get<long>() >= 1);

  CliResult cl = run_cli("cache clear", envp);
  CHECK(cl.code == 0);
  CHECK(!fs::exists(cache));
}

}  // TEST_SUITE("cli")
