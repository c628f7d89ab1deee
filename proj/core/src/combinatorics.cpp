#include "polyzeta/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace polyzeta {

namespace {
std::mutex g_mutex;
std::vector<mpz_class> g_fact = {1};
std::vector<std::vector<mpz_class>> g_binom = {{1}};
std::vector<std::vector<mpz_class>> g_stirling = {{1}};
std::vector<Rational> g_bernoulli = {Rational(1)};
}  // namespace

mpz_class factorial(unsigned n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  while (g_fact.size() <= n) {
    g_fact.push_back(g_fact.back() * static_cast<unsigned long>(g_fact.size()));
  }
  return g_fact[n];
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::lock_guard<std::mutex> lock(g_mutex);
  while (g_binom.size() <= n) {
    const auto& prev = g_binom.back();
    std::vector<mpz_class> row(g_binom.size() + 1, 1);
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    g_binom.push_back(std::move(row));
  }
  return g_binom[n][k];
}

mpz_class stirling2(unsigned n, unsigned m) {
  if (m > n) return 0;
  std::lock_guard<std::mutex> lock(g_mutex);
  while (g_stirling.size() <= n) {
    const auto& prev = g_stirling.back();
    std::size_t nn = g_stirling.size();
    std::vector<mpz_class> row(nn + 1, 0);
    row[0] = 0;
    for (std::size_t j = 1; j <= nn; ++j) {
      // S(n, m) = m S(n-1, m) + S(n-1, m-1)
      mpz_class t = (j < prev.size()) ? prev[j] : mpz_class(0);
      row[j] = mpz_class(static_cast<unsigned long>(j)) * t + prev[j - 1];
    }
    g_stirling.push_back(std::move(row));
  }
  return g_stirling[n][m];
}

Rational bernoulli_number(unsigned n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  while (g_bernoulli.size() <= n) {
    unsigned m = static_cast<unsigned>(g_bernoulli.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -1/C(m+1,m) * sum_{j<m} ...
    Rational acc(0);
    mpz_class c(1);  // C(m+1, j), built incrementally
    for (unsigned j = 0; j < m; ++j) {
      if (j > 0) {
        c *= (m + 2 - j);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j);
      } else {
        c = 1;
      }
      acc += Rational(c) * g_bernoulli[j];
    }
    g_bernoulli.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return g_bernoulli[n];
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace polyzeta
