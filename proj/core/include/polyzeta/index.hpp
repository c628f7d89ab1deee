#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polyzeta {

// A (multi-)index is a nonempty tuple of integers.  Families of operations
// below state their own positivity/admissibility preconditions and throw
// std::invalid_argument when violated.
using Index = std::vector<int>;

struct IndexStats {
  long weight = 0;    // sum of entries
  int depth = 0;      // number of entries
  bool admissible = false;  // positive entries, last >= 2
  long height = 0;    // number of entries >= 2 (positive indices)
};

long weight(const Index& k);
int depth(const Index& k);
bool is_positive(const Index& k);       // nonempty, all entries >= 1
bool is_nonnegative(const Index& k);    // nonempty, all entries >= 0
bool is_admissible(const Index& k);     // positive and last entry >= 2
IndexStats index_stats(const Index& k); // requires positive

// "k1,k2,..." (spaces allowed); throws std::invalid_argument on junk.
Index parse_index(const std::string& s);
std::string index_to_string(const Index& k);

// Adds delta to the last entry.
Index adjust_last(const Index& k, int delta);

// Hoffman dual of an admissible index, computed through the binary-word
// involution.  An involution: dual(dual(k)) == k, weight is preserved, and
// depth(k) + depth(dual(k)) == weight(k).
Index dual(const Index& k);

// Run-length description of a positive index:
//   k = (1^{a_1 - 1}, b_1 + 1, ..., 1^{a_h - 1}, b_h + 1),  a_i, b_i >= 1.
// Exists iff the index is admissible.
struct RunLengthForm {
  std::vector<long> a, b;
};
RunLengthForm to_run_length(const Index& k);     // requires admissible
Index from_run_length(const RunLengthForm& rl);
RunLengthForm dual_run_length(const RunLengthForm& rl);

// All compositions of n >= 1, ordered by (depth, lexicographic).
std::vector<Index> compositions(int n);

// All refinements of a positive index: each entry independently replaced by
// one of its compositions and the pieces concatenated.  Ordered entry-wise by
// the compositions order.  k is always first.
std::vector<Index> refinements(const Index& k);

// All coarsenings: merge adjacent entries (2^{depth-1} of them, identity
// first).  With admissible_only, keeps only admissible results.
std::vector<Index> coarsenings(const Index& k, bool admissible_only);

// Weak compositions of total >= 0 into `parts` nonnegative entries,
// lexicographically decreasing.
std::vector<std::vector<int>> weak_compositions(int total, int parts);

// prod_i C(k_i + j_i - 1, j_i) for positive k and nonnegative j of equal depth.
mpz_class b_coeff(const Index& k, const std::vector<int>& j);

}  // namespace polyzeta
