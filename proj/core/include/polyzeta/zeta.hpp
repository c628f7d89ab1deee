#pragma once

#include <cstddef>
#include <vector>

#include "polyzeta/index.hpp"
#include "polyzeta/numvalue.hpp"

namespace polyzeta {

// Riemann zeta at real s > 1, with rigorous error bound (direct sum plus
// Euler-Maclaurin tail).
NumValue zeta_r(double s, double eps = 1e-13);

// Multiple zeta value zeta(k_1,...,k_r) = sum_{0<m_1<...<m_r} prod m_i^{-k_i}
// for an admissible index.  Cached.
NumValue mzv(const Index& k, double eps = 1e-13);

// Multiple zeta-star value (weak inequalities m_1 <= ... <= m_r), computed as
// the sum of mzv over all coarsenings.
NumValue mzv_star(const Index& k, double eps = 1e-13);

// zeta(k_1,...,k_r;s) := zeta(k_1,...,k_r,s) as a function of the trailing
// exponent; k may be empty (plain zeta).  Requires s > 1 and positive k for
// integer s >= 2 ... evaluated at integer s only.
NumValue zeta_fn_int(const Index& k, long s, double eps = 1e-13);

// Real polylogarithm value Li_k(x) = sum_n x^n n^{-k_r} S_{r-1}(n-1) for
// |x| < 1 (any integer entries) and x = +-1 where convergent; rigorous tail.
NumValue li_real(const Index& k, double x, double eps = 1e-13);

// Euler-Maclaurin tail sum_{m > p} m^{-a}, a > 1, with error bound.
NumValue zeta_tail_gt(long p, double a);

// Bound for sum_{p > M} p^{-c} (1 + ln p)^{w}, c > 1.
double log_tail_bound(double c, int w, long M);

}  // namespace polyzeta
