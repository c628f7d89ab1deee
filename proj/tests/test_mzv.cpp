#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "polyzeta/index.hpp"
#include "polyzeta/numvalue.hpp"
#include "polyzeta/zeta.hpp"

using namespace polyzeta;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942854;

// |value - truth| <= err, with a tiny slack for the double truth itself
void check_encloses(const NumValue& v, double truth, double slack = 1e-14) {
  CHECK(std::fabs(v.value - truth) <= v.err + slack);
}

// truncated weak-inequality nested sum, an independent oracle for the
// star values (coarsening route); long double accumulation
long double star_direct(const Index& k, long M) {
  const int r = depth(k);
  std::vector<long double> layer(static_cast<std::size_t>(r), 0.0L);
  for (long n = 1; n <= M; ++n) {
    long double inv = 1.0L / static_cast<long double>(n);
    for (int j = 0; j < r; ++j) {
      long double p = 1.0L;
      for (int e = 0; e < k[j]; ++e) p *= inv;
      layer[j] += (j == 0 ? p : layer[j - 1] * p);
    }
  }
  return layer[static_cast<std::size_t>(r - 1)];
}

}  // namespace

TEST_SUITE("mzv") {

TEST_CASE("single zeta values with certified bounds") {
  NumValue z2 = zeta_r(2.0, 1e-13);
  check_encloses(z2, kPi * kPi / 6.0);
  CHECK(z2.err <= 1e-12);
  NumValue z4 = zeta_r(4.0, 1e-13);
  check_encloses(z4, kPi * kPi * kPi * kPi / 90.0);
  NumValue z15 = zeta_r(1.5, 1e-12);
  check_encloses(z15, 2.6123753486854883, 1e-12);
  CHECK_THROWS_AS(zeta_r(1.0), std::domain_error);
  CHECK_THROWS_AS(zeta_r(0.5), std::domain_error);
}

TEST_CASE("tail summation is honestly bounded") {
  // truth via a high cutoff in long double
  for (double a : {2.0, 3.5}) {
    NumValue tail = zeta_tail_gt(32, a);
    long double truth = 0.0L;
    for (long m = 2000000; m > 32; --m) truth += powl(static_cast<long double>(m), -a);
    // remaining tail beyond the brute cutoff: < integral bound
    long double rest = powl(2000000.0L, 1.0 - a) / (a - 1.0);
    CHECK(std::fabs(tail.value - static_cast<double>(truth)) <=
          tail.err + static_cast<double>(rest) + 1e-14);
  }
  CHECK_THROWS_AS(zeta_tail_gt(10, 1.0), std::domain_error);
}

TEST_CASE("multiple zeta values at known closed forms") {
  const double pi4 = kPi * kPi * kPi * kPi;
  NumValue a = mzv(Index{1, 2}, 1e-10);
  check_encloses(a, kZeta3);
  CHECK(std::fabs(a.value - kZeta3) <= 1e-8);
  NumValue b = mzv(Index{2, 2}, 1e-10);
  check_encloses(b, pi4 / 120.0);
  NumValue c = mzv(Index{1, 3}, 1e-10);
  check_encloses(c, pi4 / 360.0);
  NumValue d = mzv(Index{1, 1, 2}, 1e-10);
  check_encloses(d, pi4 / 90.0);
  NumValue e = mzv_star(Index{1, 2}, 1e-10);
  check_encloses(e, 2.0 * kZeta3);
  NumValue f = mzv_star(Index{1, 3}, 1e-10);
  check_encloses(f, pi4 / 72.0);
  // requested accuracy is respected by the claimed bound (small slack for
  // the floating accumulation terms added on top of the truncation bound)
  CHECK(a.err <= 5e-10);
  CHECK(f.err <= 5e-10);
  CHECK_THROWS_AS(mzv(Index{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(mzv_star(Index{2, 1}), std::invalid_argument);
}

TEST_CASE("dual indices give equal values") {
  for (int w = 2; w <= 7; ++w)
    for (const Index& k : compositions(w)) {
      if (!is_admissible(k)) continue;
      NumValue a = mzv(k, 1e-9);
      NumValue b = mzv(dual(k), 1e-9);
      CHECK(nv_consistent(a, b, 1e-12));
      CHECK(nv_deviation(a, b) <= 1e-6);
    }
}

TEST_CASE("star values agree with direct weak-inequality summation") {
  const long M = 1L << 22;
  for (int w = 2; w <= 5; ++w)
    for (const Index& k : compositions(w)) {
      if (!is_admissible(k)) continue;
      NumValue star = mzv_star(k, 1e-10);
      long double direct = star_direct(k, M);
      const int r = depth(k);
      const int kr = k[static_cast<std::size_t>(r - 1)];
      double tail_allow = 4.0 * std::pow(std::log(static_cast<double>(M)) + 1.0, r - 1) *
                          std::pow(static_cast<double>(M), 1.0 - kr) / (kr - 1.0);
      CHECK(std::fabs(star.value - static_cast<double>(direct)) <= star.err + tail_allow);
    }
}

TEST_CASE("real polylogarithm pins and bound honesty") {
  const double ln2 = std::log(2.0);
  check_encloses(li_real(Index{1}, 0.5, 1e-13), ln2);
  check_encloses(li_real(Index{1, 1}, 0.5, 1e-13), ln2 * ln2 / 2.0);
  check_encloses(li_real(Index{2}, 1.0, 1e-13), kPi * kPi / 6.0);
  check_encloses(li_real(Index{2}, -1.0, 1e-13), -kPi * kPi / 12.0, 1e-13);
  check_encloses(li_real(Index{1, 2}, 1.0, 1e-13), kZeta3);
  check_encloses(li_real(Index{-1}, 0.5, 1e-13), 2.0);
  // z(1+z)/(1-z)^3 at z = 1/3
  check_encloses(li_real(Index{-2}, 1.0 / 3.0, 1e-13), 1.5, 1e-13);
  // brute-force partial sum as an oracle at an interior point:
  // sum_{m1<m2<=400} m1^{-2} m2^{-3} 0.7^{m2} (geometric tail below 1e-31)
  {
    NumValue v = li_real(Index{2, 3}, 0.7, 1e-12);
    long double pref = 0.0L, direct = 0.0L;
    for (long m2 = 2; m2 <= 400; ++m2) {
      pref += 1.0L / (static_cast<long double>(m2 - 1) * (m2 - 1));
      direct += pref / (static_cast<long double>(m2) * m2 * m2) * powl(0.7L, m2);
    }
    CHECK(std::fabs(v.value - static_cast<double>(direct)) <= v.err + 1e-12);
  }
  CHECK_THROWS_AS(li_real(Index{1}, 1.0), std::domain_error);   // divergent endpoint
  CHECK_THROWS_AS(li_real(Index{2}, 1.5), std::domain_error);   // outside the disk
  CHECK_THROWS_AS(li_real(Index{}, 0.5), std::invalid_argument);
}

TEST_CASE("trailing-exponent zeta evaluation is consistent") {
  NumValue a = zeta_fn_int(Index{}, 2, 1e-12);
  check_encloses(a, kPi * kPi / 6.0);
  NumValue b = zeta_fn_int(Index{1}, 2, 1e-12);
  NumValue c = mzv(Index{1, 2}, 1e-12);
  CHECK(nv_consistent(b, c, 1e-12));
  NumValue d = zeta_fn_int(Index{2, 1}, 3, 1e-12);
  NumValue e = mzv(Index{2, 1, 3}, 1e-12);
  CHECK(nv_consistent(d, e, 1e-12));
  CHECK_THROWS_AS(zeta_fn_int(Index{1}, 1), std::domain_error);
}

}  // TEST_SUITE("mzv")
