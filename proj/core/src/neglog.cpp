#include "polyzeta/neglog.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyzeta {

IntPoly IntPoly::constant(std::size_t nvars, const mpz_class& c) {
  IntPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

IntPoly IntPoly::variable(std::size_t nvars, std::size_t j) {
  if (j >= nvars) throw std::invalid_argument("IntPoly::variable: index out of range");
  IntPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e[j] = 1;
  p.add_term(e, 1);
  return p;
}

void IntPoly::add_term(const std::vector<int>& exps, const mpz_class& c) {
  if (exps.size() != nvars_) throw std::invalid_argument("IntPoly::add_term: bad exponents");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("IntPoly::add_term: negative exponent");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class IntPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.nvars_);
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  IntPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

IntPoly IntPoly::derivative(std::size_t var) const {
  IntPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> e2 = e;
    e2[var] -= 1;
    r.add_term(e2, c * e[var]);
  }
  return r;
}

int IntPoly::degree(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int IntPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int IntPoly::valuation(std::size_t var) const {
  if (terms_.empty()) return 0;
  int v = -1;
  for (const auto& [e, c] : terms_) v = (v < 0) ? e[var] : std::min(v, e[var]);
  return v;
}

IntPoly IntPoly::div_monomial(const std::vector<int>& e) const {
  if (e.size() != nvars_) throw std::invalid_argument("div_monomial: bad exponent vector");
  IntPoly r(nvars_);
  for (const auto& [te, c] : terms_) {
    std::vector<int> q(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      q[i] = te[i] - e[i];
      if (q[i] < 0) throw std::invalid_argument("div_monomial: not divisible");
    }
    r.terms_.emplace(std::move(q), c);
  }
  return r;
}

Rational IntPoly::eval(const std::vector<Rational>& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("IntPoly::eval: arity mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = Rational(c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= Rational::pow(x[i], e[i]);
    acc += t;
  }
  return acc;
}

double IntPoly::eval_double(const std::vector<double>& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("IntPoly::eval_double: arity mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int p = 0; p < e[i]; ++p) t *= x[i];
    acc += t;
  }
  return acc;
}

mpz_class IntPoly::coeff_abs_sum() const {
  mpz_class s(0);
  for (const auto& [e, c] : terms_) s += abs(c);
  return s;
}

std::string IntPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << c.get_str();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << names.at(i);
      if (e[i] > 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

IntPoly IntPoly::embed(std::size_t nvars, const std::vector<std::size_t>& map) const {
  if (map.size() != nvars_) throw std::invalid_argument("IntPoly::embed: bad map");
  IntPoly r(nvars);
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) e2.at(map[i]) = e[i];
    r.add_term(e2, c);
  }
  return r;
}

// ---------------------------------------------------------------------------

IntPoly p_poly(const Index& k_abs) {
  if (!is_nonnegative(k_abs)) throw std::invalid_argument("p_poly: entries must be >= 0");
  const int r = depth(k_abs);
  const IntPoly x = IntPoly::variable(1, 0);
  const IntPoly one = IntPoly::constant(1, 1);

  // depth-1 base: P(x; 0) = x; P(x; k) = x [ (1-x) P'(x; k-1) + k P(x; k-1) ].
  IntPoly p = x;
  for (int kk = 1; kk <= k_abs[0]; ++kk)
    p = x * ((one - x) * p.derivative(0) + p.scaled(kk));

  // extend entry by entry: let K = weight of the prefix processed so far,
  // rr = its depth.  Appending 0 multiplies by x; appending after raising the
  // last entry uses the same differential step with coefficient (K - 1 + rr).
  long K = k_abs[0];
  for (int pos = 1; pos < r; ++pos) {
    p = x * p;  // append a trailing 0
    long rr = pos + 1;
    for (int kk = 1; kk <= k_abs[pos]; ++kk) {
      K += 1;
      p = x * ((one - x) * p.derivative(0) + p.scaled(K - 1 + rr));
    }
  }

  // Invariants: degree and divisibility by x^r.
  bool all_zero = (weight(k_abs) == 0);
  int expected_deg = all_zero ? r : static_cast<int>(weight(k_abs)) + r - 1;
  if (p.degree(0) != expected_deg) throw std::logic_error("p_poly: degree invariant violated");
  if (p.valuation(0) < r) throw std::logic_error("p_poly: divisibility invariant violated");
  return p;
}

CTable c_table(int k) {
  if (k < 0) throw std::invalid_argument("c_table: k must be >= 0");
  CTable t;
  t.k = 0;
  t.c[{0, 0}] = 1;
  t.c[{0, 1}] = 1;
  t.c[{1, 1}] = -1;
  for (int kk = 1; kk <= k; ++kk) {
    CTable nx;
    nx.k = kk;
    auto bump = [&nx](int j, int nu, const mpz_class& v) {
      if (v == 0) return;
      auto it = nx.c.find({j, nu});
      if (it == nx.c.end()) {
        nx.c[{j, nu}] = v;
      } else {
        it->second += v;
        if (it->second == 0) nx.c.erase(it);
      }
    };
    // From d/dz S_k = d/dz S_{k-1} + z d^2/dz^2 S_{k-1} with
    // d/dz S_{k-1} = (1-z)^{-(k+1)} sum c_{j,nu} l^nu z^{l+j}:
    //   (1-z) Q + (k+1) z Q + z (1-z) Q'.
    for (const auto& [jn, v] : t.c) {
      auto [j, nu] = jn;
      bump(j, nu, v * (j + 1));
      bump(j, nu + 1, v);
      bump(j + 1, nu, v * (kk - j));
      bump(j + 1, nu + 1, -v);
    }
    t = std::move(nx);
  }
  return t;
}

IntPoly p_tilde(const Index& k_abs) {
  if (!is_nonnegative(k_abs)) throw std::invalid_argument("p_tilde: entries must be >= 0");
  const int r = depth(k_abs);
  if (r == 1) return p_poly(k_abs);

  const int kr = k_abs.back();
  Index head(k_abs.begin(), k_abs.end() - 1);

  IntPoly result(static_cast<std::size_t>(r));
  if (kr == 0) {
    // trailing zero: multiply by the new last variable.
    IntPoly sub = p_tilde(head);
    std::vector<std::size_t> map(static_cast<std::size_t>(r - 1));
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(r); ++i) map[i] = i;
    result = sub.embed(r, map) * IntPoly::variable(r, r - 1);
  } else {
    CTable tab = c_table(kr - 1);
    const IntPoly xr = IntPoly::variable(r, r - 1);
    std::vector<std::size_t> map(static_cast<std::size_t>(r - 1));
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(r); ++i) map[i] = i;
    for (const auto& [jn, c] : tab.c) {
      auto [j, nu] = jn;
      Index sub_idx = head;
      sub_idx.back() += nu;
      IntPoly sub = p_tilde(sub_idx).embed(r, map);
      // c * x_r^{j+1} * prod_{i<r} (1 - x_i)^{k_r - nu} * sub.
      // Raising the head's last entry by nu lowers the denominator exponent
      // of EVERY head slot by k_r - nu relative to the target form (each
      // slot's exponent is one plus the sum of the entries from that slot
      // on), so each head variable contributes a (1 - x_i)^{k_r - nu}
      // factor to the numerator, not just the last one.
      IntPoly term = sub.scaled(c);
      for (int t2 = 0; t2 < j + 1; ++t2) term = term * xr;
      for (int i = 0; i + 1 < r; ++i) {
        const IntPoly one_minus_xi =
            IntPoly::constant(r, 1) - IntPoly::variable(r, static_cast<std::size_t>(i));
        for (int t2 = 0; t2 < kr - nu; ++t2) term = term * one_minus_xi;
      }
      result += term;
    }
  }

  // Invariants: divisible by y_1...y_r; degree in y_j at most e_j.
  for (int jv = 0; jv < r; ++jv) {
    if (result.valuation(jv) < 1)
      throw std::logic_error("p_tilde: divisibility invariant violated");
    long ej = 1;
    for (int nu = jv; nu < r; ++nu) ej += k_abs[nu];
    if (result.degree(jv) > ej)
      throw std::logic_error("p_tilde: degree invariant violated");
  }
  return result;
}

RatPolyForm li_neg_shuffle_form(const Index& k_abs) {
  RatPolyForm f{p_tilde(k_abs), {}};
  const int r = depth(k_abs);
  f.den_exp.resize(r);
  for (int j = 0; j < r; ++j) {
    long e = 1;
    for (int nu = j; nu < r; ++nu) e += k_abs[nu];
    f.den_exp[j] = e;
  }
  return f;
}

Rational li_neg_eval(const Index& k_abs, const std::vector<Rational>& z, LiNegVariant variant) {
  const int r = depth(k_abs);
  if (static_cast<int>(z.size()) != r)
    throw std::invalid_argument("li_neg_eval: argument arity mismatch");
  std::vector<Rational> y(z.size());
  if (variant == LiNegVariant::Shuffle) {
    y = z;
  } else {
    // y_j = z_j z_{j+1} ... z_r
    Rational run(1);
    for (int j = r - 1; j >= 0; --j) {
      run *= z[j];
      y[j] = run;
    }
  }
  for (const Rational& yj : y)
    if (yj == Rational(1)) throw std::domain_error("li_neg_eval: evaluation at pole");
  RatPolyForm f = li_neg_shuffle_form(k_abs);
  Rational v = f.num.eval(y);
  for (int j = 0; j < r; ++j)
    v /= Rational::pow(Rational(1) - y[j], f.den_exp[j]);
  return v;
}

}  // namespace polyzeta
