#pragma once

#include <gmpxx.h>

#include "polyzeta/rational.hpp"

namespace polyzeta {

// Memoized exact combinatorial tables.  Thread-safe; tables grow on demand.

// n!
mpz_class factorial(unsigned n);

// Binomial coefficient C(n, k); 0 when k > n.
mpz_class binomial(unsigned n, unsigned k);

// Stirling number of the second kind S(n, m): partitions of an n-set into m
// nonempty blocks.  S(0,0) = 1; 0 when m > n.
mpz_class stirling2(unsigned n, unsigned m);

// Bernoulli number B_n with the B_1 = -1/2 convention, via the defining
// recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 (n >= 1).
Rational bernoulli_number(unsigned n);

// Deterministic primality for small moduli (trial division; p < 2^31).
bool is_prime(long p);

}  // namespace polyzeta
