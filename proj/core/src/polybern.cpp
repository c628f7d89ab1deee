#include "polyzeta/polybern.hpp"

#include <numeric>
#include <stdexcept>

#include "polyzeta/combinatorics.hpp"
#include "polyzeta/mpoly.hpp"
#include "polyzeta/neglog.hpp"

namespace polyzeta {

Series li_taylor(const Index& k, std::size_t n_max) {
  if (k.empty()) throw std::invalid_argument("li_taylor: empty index");
  const int r = depth(k);
  // S_0(n) = 1;  S_j(n) = sum_{m=1}^{n} m^{-k_j} S_{j-1}(m-1);
  // [z^n] Li_k = n^{-k_r} S_{r-1}(n-1)  (n >= 1).
  std::vector<Rational> prev(n_max + 1, Rational(1));  // S_0
  auto pw = [](long m, int e) {  // m^{-e}
    return Rational::pow(Rational(m), -static_cast<long>(e));
  };
  for (int j = 1; j <= r - 1; ++j) {
    std::vector<Rational> cur(n_max + 1, Rational(0));
    Rational acc(0);
    for (std::size_t n = 1; n <= n_max; ++n) {
      acc += pw(static_cast<long>(n), k[j - 1]) * prev[n - 1];
      cur[n] = acc;
    }
    prev = std::move(cur);
  }
  Series s(n_max);
  for (std::size_t n = 1; n <= n_max; ++n)
    s.set(n, pw(static_cast<long>(n), k[r - 1]) * prev[n - 1]);
  return s;
}

Rational poly_bernoulli(BernKind kind, const Index& k, unsigned n) {
  const int r = depth(k);
  const std::size_t N = n + static_cast<std::size_t>(r) + 2;
  Series li = li_taylor(k, N);
  Series z = series_one_minus_exp_neg(N);
  Series num = series_compose(li, z, N);
  std::size_t den_val = 0;
  Series den(N);
  switch (kind) {
    case BernKind::B:
      den = z;
      den_val = 1;
      break;
    case BernKind::C:
      den = series_exp_minus_one(N);
      den_val = 1;
      break;
    case BernKind::BB: {
      den = Series(N);
      den.set(0, Rational(1));
      for (int i = 0; i < r; ++i) den = series_mul(den, z, N);
      den_val = static_cast<std::size_t>(r);
      break;
    }
  }
  Series q = series_div(num, den, N - den_val);
  return egf_coeff(q, n);
}

Rational poly_bernoulli_closed(unsigned n, long k) {
  Rational acc(0);
  for (unsigned m = 0; m <= n; ++m) {
    Rational term = Rational(mpz_class(factorial(m) * stirling2(n, m))) *
                    Rational::pow(Rational(static_cast<long>(m) + 1), -k);
    if ((m + n) % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

namespace {

// prod_j (1 - e^{-y_j})^{p_j} with y_j = x_j + ... + x_r, coefficient of
// x_1^{m_1}...x_r^{m_r}, times prod m_j!.  Shared by the multi-indexed
// extraction and the Dirichlet-polynomial builders.
class StuffleExtractor {
 public:
  StuffleExtractor(const std::vector<unsigned>& caps) : caps_(caps), r_(caps.size()) {
    unsigned total = std::accumulate(caps_.begin(), caps_.end(), 0u);
    base_.reserve(r_);
    for (std::size_t j = 0; j < r_; ++j) {
      std::vector<std::size_t> vars;
      for (std::size_t v = j; v < r_; ++v) vars.push_back(v);
      base_.push_back(mpoly_one_minus_exp_neg_sum(r_, caps_, vars));
    }
    // powers_[j][p] = base_[j]^p for p = 0..total+1
    powers_.resize(r_);
    for (std::size_t j = 0; j < r_; ++j) {
      powers_[j].push_back(MPoly::constant(r_, caps_, Rational(1)));
      for (unsigned p = 1; p <= total + 1; ++p)
        powers_[j].push_back(powers_[j].back() * base_[j]);
    }
  }

  // prod_j m_j! * [x^m] prod_j base_j^{p_j}
  Rational coeff(const std::vector<unsigned>& p, const std::vector<unsigned>& m) const {
    MPoly prod = powers_[0][p[0]];
    for (std::size_t j = 1; j < r_; ++j) prod = prod * powers_[j][p[j]];
    std::vector<unsigned> e(m.begin(), m.end());
    Rational c = prod.coeff(e);
    for (unsigned mj : m) c *= Rational(factorial(mj));
    return c;
  }

  std::size_t r() const { return r_; }

 private:
  std::vector<unsigned> caps_;
  std::size_t r_;
  std::vector<MPoly> base_;
  std::vector<std::vector<MPoly>> powers_;
};

// Enumerates l = (l_1,...,l_r), l_j >= 1, with sum_j (l_j - delta_j) <= bound,
// where delta_j = 1 for j <= d.  Calls fn(l).
template <typename Fn>
void enumerate_l(std::size_t r, unsigned d, unsigned bound, Fn&& fn) {
  std::vector<unsigned> l(r, 1);
  auto rec = [&](auto&& self, std::size_t pos, unsigned used) -> void {
    if (pos == r) {
      fn(l);
      return;
    }
    unsigned delta = (pos < d) ? 1u : 0u;
    for (unsigned lv = 1; used + lv - delta <= bound; ++lv) {
      l[pos] = lv;
      self(self, pos + 1, used + lv - delta);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

Rational multi_indexed(const Index& k, const std::vector<unsigned>& m, unsigned d) {
  const std::size_t r = k.size();
  if (m.size() != r) throw std::invalid_argument("multi_indexed: index/m depth mismatch");
  if (d < 1 || d > r) throw std::invalid_argument("multi_indexed: d out of range");
  unsigned total = std::accumulate(m.begin(), m.end(), 0u);
  StuffleExtractor ex(m);
  Rational acc(0);
  enumerate_l(r, d, total, [&](const std::vector<unsigned>& l) {
    std::vector<unsigned> p(r);
    for (std::size_t j = 0; j < r; ++j) p[j] = l[j] - ((j < d) ? 1u : 0u);
    Rational c = ex.coeff(p, m);
    if (c.is_zero()) return;
    // divide by prod_j (l_1 + ... + l_j)^{k_j}
    unsigned long prefix = 0;
    for (std::size_t j = 0; j < r; ++j) {
      prefix += l[j];
      c *= Rational::pow(Rational(static_cast<long>(prefix)), -static_cast<long>(k[j]));
    }
    acc += c;
  });
  return acc;
}

namespace {

// Enumerate l and nonzero coefficients c*(l;k) = prod k_j! [x^k] prod_j
// (1-e^{-y_j})^{l_j - 1} for a nonnegative exponent index k.
template <typename Fn>
void enumerate_stuffle_coeffs(const Index& k_abs, Fn&& fn) {
  if (!is_nonnegative(k_abs)) {
    throw std::invalid_argument("exponent index entries must be >= 0");
  }
  const std::size_t r = k_abs.size();
  std::vector<unsigned> caps(r);
  for (std::size_t j = 0; j < r; ++j) caps[j] = static_cast<unsigned>(k_abs[j]);
  unsigned total = std::accumulate(caps.begin(), caps.end(), 0u);
  StuffleExtractor ex(caps);
  enumerate_l(r, static_cast<unsigned>(r), total, [&](const std::vector<unsigned>& l) {
    std::vector<unsigned> p(r);
    for (std::size_t j = 0; j < r; ++j) p[j] = l[j] - 1;
    Rational c = ex.coeff(p, caps);
    if (!c.is_zero()) fn(l, c);
  });
}

}  // namespace

DirichletPoly frak_b_symbolic(const Index& k_abs) {
  const std::size_t r = k_abs.size();
  DirichletPoly d(1);
  enumerate_stuffle_coeffs(k_abs, [&](const std::vector<unsigned>& l, const Rational& c) {
    unsigned long L = std::accumulate(l.begin(), l.end(), 0ul);
    for (unsigned a = 0; a + 1 <= r; ++a) {
      Rational w = c * Rational(binomial(static_cast<unsigned>(r - 1), a));
      if (a % 2 == 1) w = -w;
      d.add_term({static_cast<long>(L - a)}, w);
    }
  });
  return d;
}

Rational frak_b_at(const Index& k_abs, long s) { return frak_b_symbolic(k_abs).eval_int1(s); }

DirichletPoly eta_neg_closed(const Index& k_abs) {
  const std::size_t r = k_abs.size();
  DirichletPoly d(r);
  enumerate_stuffle_coeffs(k_abs, [&](const std::vector<unsigned>& l, const Rational& c) {
    std::vector<long> bases(r);
    long prefix = 0;
    for (std::size_t j = 0; j < r; ++j) {
      prefix += static_cast<long>(l[j]);
      bases[j] = prefix;
    }
    d.add_term(bases, c);
  });
  return d;
}

DirichletPoly xi_tilde_closed(const Index& k_abs) {
  if (!is_nonnegative(k_abs))
    throw std::invalid_argument("xi_tilde_closed: entries must be >= 0");
  const long K = weight(k_abs);
  const long r = depth(k_abs);
  // With v = 1 - e^{-t}:  Li_{-k}(1-e^t)/(e^{-t}-1)
  //   = sum_d p_d (-1)^{d+1} v^{d-1} (1-v)^{K+r-d}
  //   = sum_d p_d (-1)^{d+1} sum_{i=0}^{d-1} C(d-1,i)(-1)^i e^{-(K+r-d+i)t},
  // and each exponential integrates against t^{s-1}/Gamma(s) to a base
  // (K+r-d+i)^{-s}.  A nonpositive base means the integral diverges.
  IntPoly P = p_poly(k_abs);
  DirichletPoly out(1);
  for (const auto& [e, pd] : P.terms()) {
    const long d = e[0];
    for (long i = 0; i < d; ++i) {
      const long base = K + r - d + i;
      if (base <= 0) throw std::domain_error("xi_tilde_closed: divergent integral");
      Rational c = Rational(pd) * Rational(binomial(static_cast<unsigned>(d - 1),
                                                    static_cast<unsigned>(i)));
      if (((d + 1 + i) % 2) != 0) c = -c;
      out.add_term({base}, c);
    }
  }
  return out;
}

long finite_mzv(long p, const Index& k) {
  if (!is_prime(p)) throw std::invalid_argument("finite_mzv: p must be prime");
  if (!is_positive(k)) throw std::invalid_argument("finite_mzv: index must be positive");
  const int r = depth(k);
  if (r >= p) throw std::invalid_argument("finite_mzv: depth must be < p");
  auto powmod = [p](long b, long e) {
    long result = 1 % p;
    long base = ((b % p) + p) % p;
    while (e > 0) {
      if (e & 1) result = (result * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    return result;
  };
  auto inv_pow = [&](long m, int e) {  // m^{-e} mod p via Fermat
    long me = powmod(m, e % (p - 1) == 0 ? p - 1 : e % (p - 1));
    if (me == 0) throw std::logic_error("finite_mzv: unexpected zero");
    return powmod(me, p - 2);
  };
  // S_0(n) = 1; S_j(n) = sum_{m<=n} m^{-k_j} S_{j-1}(m-1); answer S_r(p-1).
  std::vector<long> prev(static_cast<std::size_t>(p), 1 % p);  // S_0
  for (int j = 1; j <= r; ++j) {
    std::vector<long> cur(static_cast<std::size_t>(p), 0);
    long acc = 0;
    for (long n = 1; n <= p - 1; ++n) {
      acc = (acc + inv_pow(n, k[j - 1]) * prev[static_cast<std::size_t>(n - 1)]) % p;
      cur[static_cast<std::size_t>(n)] = acc;
    }
    prev = std::move(cur);
  }
  return prev[static_cast<std::size_t>(p - 1)];
}

CongruenceResult congruence_check(long p, const Index& k) {
  if (!is_prime(p)) throw std::invalid_argument("congruence_check: p must be prime");
  if (!is_positive(k)) throw std::invalid_argument("congruence_check: index must be positive");
  CongruenceResult res;
  if (depth(k) >= p) {
    res.applicable = false;
    res.reason = "depth >= p";
    return res;
  }
  Index ck = adjust_last(k, -1);  // last entry may become 0
  Rational c = poly_bernoulli(BernKind::C, ck, static_cast<unsigned>(p - 2));
  mpz_class den = c.den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
    res.applicable = false;
    res.reason = "p divides denominator of the C-number";
    return res;
  }
  res.applicable = true;
  // rhs = -C mod p
  mpz_class pm(p);
  mpz_class num_mod = (((-c.num()) % pm) + pm) % pm;
  mpz_class den_mod = ((den % pm) + pm) % pm;
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), pm.get_mpz_t()) == 0)
    throw std::logic_error("congruence_check: denominator not invertible");
  mpz_class rhs = (num_mod * den_inv) % pm;
  res.rhs = rhs.get_si();
  res.lhs = finite_mzv(p, k);
  res.pass = (res.lhs == res.rhs);
  return res;
}

namespace {
nlohmann::json idx_json(const Index& k) {
  return nlohmann::json(k);
}
}  // namespace

Report duality_suite(DualityFamily family, int max_a, int max_b) {
  Report rep;
  rep.params = {{"max_a", max_a}, {"max_b", max_b}};
  switch (family) {
    case DualityFamily::BNeg: {
      rep.suite = "duality/B-negative";
      for (int n = 0; n <= max_a; ++n) {
        for (int kk = 0; kk <= max_b; ++kk) {
          Rational lhs = poly_bernoulli(BernKind::B, Index{-kk}, static_cast<unsigned>(n));
          Rational rhs = poly_bernoulli(BernKind::B, Index{-n}, static_cast<unsigned>(kk));
          rep.add_case({{"n", n}, {"k", kk}}, lhs.str(), rhs.str(), lhs == rhs);
        }
      }
      break;
    }
    case DualityFamily::CNeg: {
      rep.suite = "duality/C-negative";
      for (int n = 0; n <= max_a; ++n) {
        for (int kk = 0; kk <= max_b; ++kk) {
          Rational lhs = poly_bernoulli(BernKind::C, Index{-kk - 1}, static_cast<unsigned>(n));
          Rational rhs = poly_bernoulli(BernKind::C, Index{-n - 1}, static_cast<unsigned>(kk));
          rep.add_case({{"n", n}, {"k", kk}}, lhs.str(), rhs.str(), lhs == rhs);
        }
      }
      break;
    }
    case DualityFamily::MultiBB: {
      // depth-2 sweep: BB_{(m1,m2)}^{(-k1,-k2)} == BB_{(k1,k2)}^{(-m1,-m2)}
      rep.suite = "duality/multi-BB";
      for (int k1 = 0; k1 <= max_a; ++k1)
        for (int k2 = 0; k2 <= max_a; ++k2)
          for (int m1 = 0; m1 <= max_b; ++m1)
            for (int m2 = 0; m2 <= max_b; ++m2) {
              Rational lhs = multi_indexed(Index{-k1, -k2},
                                           {static_cast<unsigned>(m1), static_cast<unsigned>(m2)}, 2);
              Rational rhs = multi_indexed(Index{-m1, -m2},
                                           {static_cast<unsigned>(k1), static_cast<unsigned>(k2)}, 2);
              rep.add_case({{"k", {k1, k2}}, {"m", {m1, m2}}}, lhs.str(), rhs.str(), lhs == rhs);
            }
      break;
    }
    case DualityFamily::FrakB: {
      // B_m^{(-k)} (series route) == D_k(-m) (Dirichlet route), depth <= 3.
      rep.suite = "duality/frak-B";
      std::vector<Index> ks;
      for (int w = 0; w <= max_a; ++w) {
        for (int r = 1; r <= 3; ++r) {
          for (const auto& wc : weak_compositions(w, r)) {
            Index k(wc.begin(), wc.end());
            ks.push_back(k);
          }
        }
      }
      for (const Index& k : ks) {
        Index neg = k;
        for (int& e : neg) e = -e;
        DirichletPoly d = frak_b_symbolic(k);
        for (int m = 0; m <= max_b; ++m) {
          Rational lhs = poly_bernoulli(BernKind::B, neg, static_cast<unsigned>(m));
          Rational rhs = d.eval_int1(-m);
          rep.add_case({{"k", idx_json(k)}, {"m", m}}, lhs.str(), rhs.str(), lhs == rhs);
        }
      }
      break;
    }
  }
  return rep;
}

Report congruence_suite(long p_max, long weight_max, int depth_max) {
  Report rep;
  rep.suite = "congruence/finite-mzv";
  rep.params = {{"p_max", p_max}, {"weight_max", weight_max}, {"depth_max", depth_max}};
  for (long p = 2; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    for (long w = 1; w <= weight_max; ++w)
      for (const Index& k : compositions(static_cast<int>(w))) {
        if (depth(k) > depth_max) continue;
        CongruenceResult cr = congruence_check(p, k);
        nlohmann::json in = {{"p", p}, {"k", k}};
        if (!cr.applicable) {
          rep.add_case(std::move(in), "inapplicable: " + cr.reason, "", true);
        } else {
          rep.add_case(std::move(in), std::to_string(cr.lhs), std::to_string(cr.rhs), cr.pass);
        }
      }
  }
  return rep;
}

Report sum_formula_check(unsigned m_max, unsigned k_max) {
  Report rep;
  rep.suite = "sum-formula/B-C-compositions";
  rep.params = {{"m_max", m_max}, {"k_max", k_max}};
  for (unsigned k = 1; k <= k_max; ++k) {
    auto comps = compositions(static_cast<int>(k));
    for (unsigned m = 0; m <= m_max; ++m) {
      Rational sumC(0), sumB(0);
      for (const Index& c : comps) {
        sumC += poly_bernoulli(BernKind::C, c, m);
        sumB += poly_bernoulli(BernKind::B, c, m);
      }
      if (m % 2 == 1) {
        sumC = -sumC;
        sumB = -sumB;
      }
      Rational lhsB = poly_bernoulli(BernKind::B, Index{static_cast<int>(k)}, m);
      Rational lhsC = poly_bernoulli(BernKind::C, Index{static_cast<int>(k)}, m);
      rep.add_case({{"relation", "B=sumC"}, {"m", m}, {"k", k}}, lhsB.str(), sumC.str(),
                   lhsB == sumC);
      rep.add_case({{"relation", "C=sumB"}, {"m", m}, {"k", k}}, lhsC.str(), sumB.str(),
                   lhsC == sumB);
    }
  }
  return rep;
}

}  // namespace polyzeta
