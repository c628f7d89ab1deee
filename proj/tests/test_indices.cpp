#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "polyzeta/combinatorics.hpp"
#include "polyzeta/index.hpp"

using namespace polyzeta;

TEST_SUITE("indices") {

TEST_CASE("weight, depth, admissibility and parsing") {
  CHECK(weight(Index{1, 2, 3}) == 6);
  CHECK(depth(Index{1, 2, 3}) == 3);
  CHECK(is_admissible(Index{1, 2}));
  CHECK(!is_admissible(Index{2, 1}));
  CHECK(!is_admissible(Index{}));
  CHECK(is_positive(Index{1, 1}));
  CHECK(!is_positive(Index{0, 1}));
  CHECK(is_nonnegative(Index{0, 2}));
  CHECK(!is_nonnegative(Index{-1}));
  CHECK(parse_index("1, -2,3") == Index{1, -2, 3});
  CHECK_THROWS_AS(parse_index("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_index(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_index("1,x"), std::invalid_argument);
  CHECK(parse_index(index_to_string(Index{1, -2})) == Index{1, -2});
  CHECK(adjust_last(Index{1, 2}, 1) == Index{1, 3});
  CHECK(adjust_last(Index{3}, -2) == Index{1});
  IndexStats st = index_stats(Index{1, 2, 2});
  CHECK(st.weight == 5);
  CHECK(st.depth == 3);
  CHECK(st.admissible);
  CHECK(st.height == 2);
}

TEST_CASE("dual pins, involution, weight preservation and depth law") {
  CHECK(dual(Index{2}) == Index{2});
  CHECK(dual(Index{3}) == Index{1, 2});
  CHECK(dual(Index{1, 2}) == Index{3});
  CHECK(dual(Index{4}) == Index{1, 1, 2});
  CHECK(dual(Index{1, 3}) == Index{1, 3});
  CHECK(dual(Index{2, 2}) == Index{2, 2});
  CHECK(dual(Index{1, 2, 2}) == Index{2, 3});
  CHECK_THROWS_AS(dual(Index{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(dual(Index{1}), std::invalid_argument);
  int n_checked = 0;
  for (int w = 2; w <= 10; ++w)
    for (const Index& k : compositions(w)) {
      if (!is_admissible(k)) continue;
      Index d = dual(k);
      CHECK(is_admissible(d));
      CHECK(weight(d) == w);
      CHECK(depth(k) + depth(d) == w);
      CHECK(dual(d) == k);
      ++n_checked;
    }
  CHECK(n_checked == 511);  // sum of 2^{w-2} for w = 2..10
}

TEST_CASE("run-length form round trips and gives an independent dual") {
  RunLengthForm rl = to_run_length(Index{1, 1, 3});
  CHECK(rl.a == std::vector<long>{3});
  CHECK(rl.b == std::vector<long>{2});
  CHECK(from_run_length(rl) == Index{1, 1, 3});
  for (int w = 2; w <= 9; ++w)
    for (const Index& k : compositions(w)) {
      if (!is_admissible(k)) continue;
      RunLengthForm f = to_run_length(k);
      CHECK(from_run_length(f) == k);
      CHECK(from_run_length(dual_run_length(f)) == dual(k));
    }
  CHECK_THROWS_AS(to_run_length(Index{2, 1}), std::invalid_argument);
}

TEST_CASE("compositions are complete, distinct and deterministically ordered") {
  for (int n = 1; n <= 10; ++n) {
    std::vector<Index> cs = compositions(n);
    CHECK(cs.size() == (1u << (n - 1)));
    std::set<Index> uniq(cs.begin(), cs.end());
    CHECK(uniq.size() == cs.size());
    for (const Index& k : cs) CHECK(weight(k) == n);
  }
  // ordered by (depth, lexicographic)
  std::vector<Index> c3 = compositions(3);
  CHECK(c3 == std::vector<Index>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});
}

TEST_CASE("refinements and coarsenings counts and bidirectional consistency") {
  for (int w = 1; w <= 8; ++w)
    for (const Index& k : compositions(w)) {
      std::vector<Index> refs = refinements(k);
      unsigned long expect = 1;
      for (int e : k) expect <<= (e - 1);
      CHECK(refs.size() == expect);
      CHECK(refs.front() == k);
      std::vector<Index> coar = coarsenings(k, false);
      CHECK(coar.size() == (1u << (depth(k) - 1)));
      CHECK(coar.front() == k);
      // every refinement coarsens back to k
      for (const Index& kp : refs) {
        std::vector<Index> back = coarsenings(kp, false);
        CHECK(std::find(back.begin(), back.end(), k) != back.end());
      }
      // every coarsening refines back to k
      for (const Index& kc : coar) {
        std::vector<Index> fwd = refinements(kc);
        CHECK(std::find(fwd.begin(), fwd.end(), k) != fwd.end());
      }
    }
  // admissible_only filtering
  std::vector<Index> adm = coarsenings(Index{1, 2}, true);
  for (const Index& k : adm) CHECK(is_admissible(k));
  CHECK(adm.size() == 2);  // (1,2) and (3)
}

TEST_CASE("weak compositions count and ordering") {
  for (int total = 0; total <= 6; ++total)
    for (int parts = 1; parts <= 4; ++parts) {
      std::vector<std::vector<int>> ws = weak_compositions(total, parts);
      CHECK(ws.size() == binomial(static_cast<unsigned>(total + parts - 1),
                                  static_cast<unsigned>(parts - 1)));
      for (const auto& w : ws) {
        CHECK(static_cast<int>(w.size()) == parts);
        int s = 0;
        for (int x : w) {
          CHECK(x >= 0);
          s += x;
        }
        CHECK(s == total);
      }
      CHECK(std::is_sorted(ws.begin(), ws.end(), std::greater<std::vector<int>>()));
    }
}

TEST_CASE("product-of-binomials coefficient") {
  CHECK(b_coeff(Index{2, 3}, {1, 2}) == 12);  // C(2,1) * C(4,2)
  CHECK(b_coeff(Index{1, 1}, {0, 0}) == 1);
  CHECK(b_coeff(Index{5}, {3}) == 35);  // C(7,3)
  CHECK_THROWS_AS(b_coeff(Index{0, 1}, {1, 1}), std::invalid_argument);
}

}  // TEST_SUITE("indices")
