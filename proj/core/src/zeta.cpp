#include "polyzeta/zeta.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "polyzeta/cache.hpp"
#include "polyzeta/combinatorics.hpp"

namespace polyzeta {

namespace {

constexpr int kEmJ = 10;  // Bernoulli correction terms in the tail expansion

double bern_over_fact(int two_j) {
  // B_{2j} / (2j)!
  return bernoulli_number(static_cast<unsigned>(two_j)).to_double() /
         factorial(static_cast<unsigned>(two_j)).get_d();
}

double rising(double a, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= (a + i);
  return r;
}

struct EmTerm {
  double coef;
  double exp;  // term is coef * p^{-exp}
};

// sum_{m > p} m^{-a} = sum_i coef_i p^{-exp_i} + R,  |R| <= em_rho(a) p^{-a-2J-1}.
std::vector<EmTerm> em_terms(double a) {
  std::vector<EmTerm> t;
  t.push_back({1.0 / (a - 1.0), a - 1.0});
  t.push_back({-0.5, a});
  for (int j = 1; j <= kEmJ; ++j)
    t.push_back({bern_over_fact(2 * j) * rising(a, 2 * j - 1), a + 2 * j - 1});
  return t;
}

double em_rho(double a) {
  // Remainder bounded by twice the first omitted Bernoulli term.
  return 2.0 * std::abs(bern_over_fact(2 * kEmJ + 2) * rising(a, 2 * kEmJ + 1));
}

NumValue zeta_gt(long p, double a) {
  double v = 0.0, mag = 0.0;
  for (const EmTerm& t : em_terms(a)) {
    double x = t.coef * std::pow(static_cast<double>(p), -t.exp);
    v += x;
    mag += std::abs(x);
  }
  double rem = em_rho(a) * std::pow(static_cast<double>(p), -a - 2 * kEmJ - 1);
  return {v, rem + 20.0 * 2.3e-16 * mag};
}

}  // namespace

NumValue zeta_tail_gt(long p, double a) {
  if (a <= 1.0) throw std::domain_error("zeta_tail_gt: requires a > 1");
  return zeta_gt(p, a);
}

double log_tail_bound(double c, int w, long M) {
  if (c <= 1.0) throw std::domain_error("log_tail_bound: requires c > 1");
  // sum_{p > M} p^{-c} (1+ln p)^w  <=  integral_M^inf x^{-c}(1+ln x)^w dx
  //   = M^{1-c} sum_{i=0}^{w} C(w,i) i! (1+ln M)^{w-i} / (c-1)^{i+1}.
  double lM = 1.0 + std::log(static_cast<double>(M));
  double beta = c - 1.0;
  double acc = 0.0;
  double cwi_fact = 1.0;  // C(w,i) * i! = w!/(w-i)!
  for (int i = 0; i <= w; ++i) {
    if (i > 0) cwi_fact *= (w - i + 1);
    acc += cwi_fact * std::pow(lM, w - i) / std::pow(beta, i + 1);
  }
  return std::pow(static_cast<double>(M), 1.0 - c) * acc;
}

NumValue zeta_r(double s, double eps) {
  if (s <= 1.0) throw std::domain_error("zeta_r: requires s > 1");
  long p = 32;
  while (em_rho(s) * std::pow(static_cast<double>(p), -s - 2 * kEmJ - 1) > eps / 4 &&
         p < (1L << 22))
    p *= 2;
  double head = 0.0, comp = 0.0, mag = 0.0;
  for (long m = 1; m <= p; ++m) {
    double t = std::pow(static_cast<double>(m), -s);
    double y = t - comp;
    double u = head + y;
    comp = (u - head) - y;
    head = u;
    mag += t;
  }
  NumValue tail = zeta_gt(p, s);
  return {head + tail.value, tail.err + 2.0 * 2.3e-16 * mag + 1e-300};
}

namespace {

struct MzvCtx {
  const Index* k = nullptr;
  long M = 0;
  std::vector<std::vector<double>> S;     // S[j][n], j = 0..r-1
  std::vector<double> S_err;              // uniform abs error bound on S[j][.]
  std::vector<double> S_max;              // max |S[j][.]|
  std::map<std::pair<int, long>, NumValue> memo;
  double prune_eps = 0.0;
};

// G(q, a) = sum_{n > M} n^{-a} S_q(n-1)
NumValue mzv_tail_g(MzvCtx& ctx, int q, long a) {
  if (q == 0) return zeta_gt(ctx.M, static_cast<double>(a));
  auto it = ctx.memo.find({q, a});
  if (it != ctx.memo.end()) return it->second;
  // Magnitude bound: |S_q(n)| <= (1 + ln n)^q  =>  |G| <= log_tail_bound(a,q,M).
  double crude = log_tail_bound(static_cast<double>(a), q, ctx.M);
  NumValue res;
  if (crude < ctx.prune_eps) {
    res = {0.0, crude};
  } else {
    const Index& k = *ctx.k;
    long lq = k[static_cast<std::size_t>(q) - 1 + 0];  // exponent attached to level q
    NumValue acc = nv_mul(NumValue{ctx.S[q][static_cast<std::size_t>(ctx.M)], ctx.S_err[q]},
                          zeta_gt(ctx.M, static_cast<double>(a)));
    for (const EmTerm& t : em_terms(static_cast<double>(a))) {
      long b = static_cast<long>(std::llround(t.exp));
      NumValue sub = mzv_tail_g(ctx, q - 1, lq + b);
      acc = nv_add(acc, nv_scale(t.coef, sub));
    }
    double e_rem = em_rho(static_cast<double>(a)) *
                   log_tail_bound(static_cast<double>(lq + a + 2 * kEmJ + 1), q - 1, ctx.M);
    acc.err += e_rem;
    res = acc;
  }
  ctx.memo[{q, a}] = res;
  return res;
}

NumValue mzv_uncached(const Index& k, double eps) {
  const int r = depth(k);
  long M = 128;
  NumValue best{0.0, 1e300};
  while (true) {
    MzvCtx ctx;
    ctx.k = &k;
    ctx.M = M;
    ctx.prune_eps = eps * 1e-3;
    ctx.S.assign(static_cast<std::size_t>(r), {});
    ctx.S_err.assign(static_cast<std::size_t>(r), 0.0);
    ctx.S_max.assign(static_cast<std::size_t>(r), 1.0);
    ctx.S[0].assign(static_cast<std::size_t>(M + 1), 1.0);
    for (int j = 1; j <= r - 1; ++j) {
      auto& cur = ctx.S[static_cast<std::size_t>(j)];
      cur.assign(static_cast<std::size_t>(M + 1), 0.0);
      double acc = 0.0, h = 0.0, mx = 0.0;
      for (long n = 1; n <= M; ++n) {
        double w = std::pow(static_cast<double>(n), -static_cast<double>(k[j - 1]));
        acc += w * ctx.S[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(n - 1)];
        cur[static_cast<std::size_t>(n)] = acc;
        h += w;
        mx = std::max(mx, std::abs(acc));
      }
      ctx.S_max[static_cast<std::size_t>(j)] = mx;
      ctx.S_err[static_cast<std::size_t>(j)] =
          h * ctx.S_err[static_cast<std::size_t>(j - 1)] +
          static_cast<double>(M) * 2.3e-16 * std::max(1.0, mx);
    }
    // head
    double head = 0.0, habs = 0.0, hw = 0.0;
    for (long n = 1; n <= M; ++n) {
      double w = std::pow(static_cast<double>(n), -static_cast<double>(k[r - 1]));
      double t = w * ctx.S[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(n - 1)];
      head += t;
      habs += std::abs(t);
      hw += w;
    }
    double head_err = hw * ctx.S_err[static_cast<std::size_t>(r - 1)] + 2.3e-16 * habs * 3.0 +
                      static_cast<double>(M) * 2.3e-16 * std::abs(head);
    NumValue tail = mzv_tail_g(ctx, r - 1, k[static_cast<std::size_t>(r) - 1]);
    NumValue out{head + tail.value, head_err + tail.err};
    if (out.err < best.err) best = out;
    if (best.err <= eps || M >= 8192) return best;
    M *= 2;
  }
}

}  // namespace

NumValue mzv(const Index& k, double eps) {
  if (!is_admissible(k)) throw std::invalid_argument("mzv: index must be admissible");
  std::string key = MzvCache::make_key("mzv", k, eps);
  if (auto hit = MzvCache::instance().get(key)) return *hit;
  NumValue v = mzv_uncached(k, eps);
  MzvCache::instance().put(key, v);
  return v;
}

NumValue mzv_star(const Index& k, double eps) {
  if (!is_admissible(k)) throw std::invalid_argument("mzv_star: index must be admissible");
  std::string key = MzvCache::make_key("mzv*", k, eps);
  if (auto hit = MzvCache::instance().get(key)) return *hit;
  auto parts = coarsenings(k, /*admissible_only=*/true);
  if (parts.size() != (1u << (k.size() - 1)))
    throw std::logic_error("mzv_star: coarsening of an admissible index must stay admissible");
  double sub_eps = eps / static_cast<double>(parts.size());
  NumValue acc{0.0, 0.0};
  for (const Index& c : parts) acc = nv_add(acc, mzv(c, sub_eps));
  MzvCache::instance().put(key, acc);
  return acc;
}

NumValue zeta_fn_int(const Index& k, long s, double eps) {
  if (k.empty()) {
    if (s < 2) throw std::domain_error("zeta_fn_int: s must be >= 2");
    return zeta_r(static_cast<double>(s), eps);
  }
  if (!is_positive(k)) throw std::invalid_argument("zeta_fn_int: index must be positive");
  if (s < 2) throw std::domain_error("zeta_fn_int: s must be >= 2");
  Index full = k;
  full.push_back(static_cast<int>(s));
  return mzv(full, eps);
}

NumValue li_real(const Index& k, double x, double eps) {
  if (k.empty()) throw std::invalid_argument("li_real: empty index");
  const int r = depth(k);
  if (std::abs(x) > 1.0) throw std::domain_error("li_real: requires |x| <= 1");
  if (x == 1.0) {
    if (!is_admissible(k)) throw std::domain_error("li_real: divergent at x = 1");
    return mzv(k, eps);
  }
  if (x == -1.0) {
    if (!is_positive(k) || k.back() < 2)
      throw std::domain_error("li_real: unsupported endpoint evaluation");
    // handled by the log-tail bound below with |x|^n == 1
  }
  long q_growth = r - 1;
  for (int e : k) q_growth += std::max(-e, 0);

  const double ax = std::abs(x);
  long N = 64;
  auto tail_bound = [&](long n0) -> double {
    if (ax == 1.0) {
      // positive k, last entry >= 2: |coef_n| <= (1+ln n)^{r-1} n^{-k_r}
      return log_tail_bound(static_cast<double>(k.back()), r - 1, n0);
    }
    double ratio = ax * std::exp(static_cast<double>(q_growth) / static_cast<double>(n0 + 1));
    if (ratio >= 1.0) return 1e300;
    double first = std::pow(ax, static_cast<double>(n0 + 1)) *
                   std::pow(static_cast<double>(n0 + 1), static_cast<double>(q_growth));
    return first / (1.0 - ratio);
  };
  while (tail_bound(N) > eps / 2 && N < (1L << 24)) N *= 2;

  // streaming DP: s[j] holds S_j(n-1) when processing n
  std::vector<double> s(static_cast<std::size_t>(r), 0.0);
  s[0] = 1.0;  // S_0 == 1
  double acc = 0.0, rnd = 0.0, xn = 1.0;
  for (long n = 1; n <= N; ++n) {
    xn *= x;
    double wr = std::pow(static_cast<double>(n), -static_cast<double>(k[r - 1]));
    double term = xn * wr * s[static_cast<std::size_t>(r) - 1];
    if (r == 1) term = xn * wr;  // S_0(n-1) = 1
    acc += term;
    double smag = 0.0;
    for (int j = r - 1; j >= 1; --j) {
      double wj = std::pow(static_cast<double>(n), -static_cast<double>(k[j - 1]));
      s[static_cast<std::size_t>(j)] += wj * s[static_cast<std::size_t>(j - 1)];
      smag += std::abs(s[static_cast<std::size_t>(j)]);
    }
    rnd += 2.3e-16 * (std::abs(acc) + std::abs(term) + smag);
  }
  return {acc, tail_bound(N) + rnd + 1e-300};
}

}  // namespace polyzeta
