#pragma once

#include <string>
#include <vector>

#include "polyzeta/dirichlet.hpp"
#include "polyzeta/index.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/report.hpp"
#include "polyzeta/series.hpp"

namespace polyzeta {

// Generating-function kind: which divisor is applied to Li_k(1 - e^{-t}).
//   B : 1 - e^{-t}
//   C : e^{t} - 1
//   BB: (1 - e^{-t})^{depth}   (the multiple-divisor family)
enum class BernKind { B, C, BB };

// Taylor coefficients of Li_k(z) = sum_{0<m_1<...<m_r} z^{m_r} / prod m_i^{k_i}
// through order n_max (exact; k entries may be any integers).
Series li_taylor(const Index& k, std::size_t n_max);

// n-th number of the chosen family with (multi-)index k, via the
// generating-series pipeline.
Rational poly_bernoulli(BernKind kind, const Index& k, unsigned n);

// Independent closed form for the depth-1 B-family:
//   B_n^{(k)} = sum_{m=0}^{n} (-1)^{m+n} m! S(n, m) (m+1)^{-k}.
Rational poly_bernoulli_closed(unsigned n, long k);

// Coefficient extraction from the multi-indexed generating function with d
// divisor factors (1 <= d <= depth): returns
//   prod_j m_j! * [x_1^{m_1}...x_r^{m_r}]  of the iterated-sum expansion.
// k entries may be any integers (the exponent vector), m_j >= 0.
Rational multi_indexed(const Index& k, const std::vector<unsigned>& m, unsigned d);

// The symbol-level Dirichlet polynomial D_k(s) (arity 1) attached to a
// nonnegative index k = (k_1,...,k_r):
//   D_k(s) = sum_{a=0}^{r-1} (-1)^a C(r-1, a) sum_{l} c(l;k) (l_1+...+l_r-a)^{-s},
// a finite sum.  D satisfies D_k(-m) = B_m^{(-k)} for the depth-1 case and
// generalizes it in depth.
DirichletPoly frak_b_symbolic(const Index& k_abs);
Rational frak_b_at(const Index& k_abs, long s);

// Arity-r Dirichlet polynomial representing the iterated-sum transform with
// all d = r divisors: evaluating at integer exponents s_j reproduces
// multi_indexed with the exponents negated.
DirichletPoly eta_neg_closed(const Index& k_abs);

// Closed Dirichlet form (arity 1) of the tilde-variant zeta interpolation at
// the nonpositive index -k_abs: obtained from the exact rational form of the
// negative-index polylog expanded around z = 1.  Throws std::domain_error for
// the all-zero index, where the underlying integral diverges.
DirichletPoly xi_tilde_closed(const Index& k_abs);

// Finite multiple harmonic sum mod p:
//   sum_{0<m_1<...<m_r<p} prod m_i^{-k_i}  (mod p), positive k, depth < p.
long finite_mzv(long p, const Index& k);

struct CongruenceResult {
  bool applicable = false;
  std::string reason;   // set when not applicable
  long lhs = 0, rhs = 0;
  bool pass = false;
};

// Checks  sum_{0<m_1<...<m_r<p} prod m_i^{-k_i}  ==  -C_{p-2}^{(k_1,...,k_r - 1)}
// (mod p) for prime p; reports inapplicable cases (depth >= p, or p divides
// the denominator of the C-number).
CongruenceResult congruence_check(long p, const Index& k);

// Sweep over all primes p <= p_max and positive indices of weight <= w_max,
// depth <= d_max.  Inapplicable cases are listed with their reason and do not
// count as failures.
Report congruence_suite(long p_max, long weight_max, int depth_max);

enum class DualityFamily { BNeg, CNeg, MultiBB, FrakB };

// Exact duality sweeps; ranges are inclusive upper bounds.
Report duality_suite(DualityFamily family, int max_a, int max_b);

// Checks the pair of sum formulas relating the depth-1 numbers to sums of the
// other family over all compositions of k.
Report sum_formula_check(unsigned m_max, unsigned k_max);

}  // namespace polyzeta
