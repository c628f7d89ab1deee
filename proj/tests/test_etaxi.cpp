#include <cmath>
#include <filesystem>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "polyzeta/etaxi.hpp"
#include "polyzeta/index.hpp"
#include "polyzeta/numvalue.hpp"
#include "polyzeta/zeta.hpp"

using namespace polyzeta;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942854;
}  // namespace

TEST_SUITE("etaxi") {

TEST_CASE("closed-formula values at depth one") {
  for (long m = 1; m <= 6; ++m) {
    NumValue xi1m = theorem_value(EtaXiTarget::Xi, Index{1}, m);
    NumValue target = nv_scale(static_cast<double>(m), zeta_r(m + 1.0, 1e-13));
    CHECK(nv_consistent(xi1m, target, 1e-10));
    CHECK(nv_deviation(xi1m, target) <= 1e-8);
  }
  NumValue xi22 = theorem_value(EtaXiTarget::Xi, Index{2}, 2);
  CHECK(std::fabs(xi22.value - kPi * kPi * kPi * kPi / 72.0) <= xi22.err + 1e-10);
  NumValue eta21 = theorem_value(EtaXiTarget::Eta, Index{2}, 1);
  CHECK(std::fabs(eta21.value - 2.0 * kZeta3) <= eta21.err + 1e-10);
  CHECK_THROWS_AS(theorem_value(EtaXiTarget::Eta, Index{2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(theorem_value(EtaXiTarget::Xi, Index{0, 1}, 1), std::invalid_argument);
}

TEST_CASE("value at m = 1 collapses to a single zeta value") {
  for (int w = 1; w <= 6; ++w)
    for (const Index& k : compositions(w)) {
      NumValue tv = theorem_value(EtaXiTarget::Xi, k, 1);
      NumValue mz = mzv(adjust_last(k, +1), 1e-12);
      CHECK(nv_consistent(tv, mz, 1e-10));
      CHECK(nv_deviation(tv, mz) <= 1e-8);
    }
}

TEST_CASE("independent depth-one expansion agrees with the closed formula") {
  for (int k = 1; k <= 7; ++k)
    for (long m = 1; k + m <= 8; ++m) {
      NumValue a = eta_single_direct(k, m);
      NumValue b = theorem_value(EtaXiTarget::Eta, Index{k}, m);
      CHECK(nv_consistent(a, b, 1e-10));
      CHECK(nv_deviation(a, b) <= 1e-8);
    }
}

TEST_CASE("refinement relations between the two function families") {
  Report single = refinement_relation_check(Index{2, 1}, 2);
  CHECK(single.all_pass());
  CHECK(!single.cases.empty());
  Report sweep = refinement_sweep(5, 3);
  CHECK(sweep.all_pass());
  CHECK(sweep.cases.size() >= 90);
  CHECK(sweep.max_deviation() <= 1e-8);
}

TEST_CASE("Landen-type evaluations over refinements") {
  Report single = landen_check(Index{2}, 0.5);
  CHECK(single.all_pass());
  Report sweep = landen_sweep(4, {0.2, 0.3, 0.5});
  CHECK(sweep.all_pass());
  CHECK(sweep.cases.size() == 45);  // 15 indices of weight <= 4, three points
  CHECK(sweep.max_deviation() <= 1e-8);
}

TEST_CASE("shipped Euler-connection table") {
  Report rep = euler_connection_suite({0.3, 0.5, 0.7}, 1e-8);
  CHECK(rep.all_pass());
  CHECK(rep.cases.size() == 33);  // 11 identities at three points
  CHECK(rep.max_deviation() <= 1e-8);
}

TEST_CASE("shipped zeta-expression table") {
  Report rep = xi_by_zeta_suite({2, 3});
  CHECK(rep.all_pass());
  CHECK(rep.cases.size() == 28);
  CHECK(rep.max_deviation() <= 1e-6);
}

TEST_CASE("weighted-sum and alternating-sum identities") {
  Report ohno = ohno_check(7);
  CHECK(ohno.all_pass());
  CHECK(ohno.cases.size() == 21);  // k >= 1, m >= 1, k + m <= 7
  Report lm = le_murakami_check(7);
  CHECK(lm.all_pass());
  CHECK(lm.cases.size() == 6);  // k = 2..7
  CHECK(lm.max_deviation() <= 1e-6);
}

TEST_CASE("argument-exchange symmetry is flagged as an experiment") {
  Report rep = eta_symmetry_experiment(8);
  CHECK(rep.status == "experiment");
  CHECK(rep.all_pass());
  CHECK(rep.cases.size() >= 10);
  CHECK(rep.max_deviation() <= 1e-6);
}

TEST_CASE("identity tables ship with the library") {
  std::filesystem::path dir(data_dir());
  CHECK(std::filesystem::exists(dir / "euler_connection_identities.json"));
  CHECK(std::filesystem::exists(dir / "xi_zeta_expressions.json"));
}

}  // TEST_SUITE("etaxi")
