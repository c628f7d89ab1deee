#include "polyzeta/quad.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "polyzeta/neglog.hpp"
#include "polyzeta/zeta.hpp"

namespace polyzeta {

namespace {

// ---------------------------------------------------------------- tanh-sinh

struct TsOut {
  NumValue val;
  long evals = 0;
};

// Integrates f over [a, b]; f returns a value with its own error bound.
TsOut tanh_sinh(const std::function<NumValue(double)>& f, double a, double b, double tol,
                int max_level = 10) {
  const double h2 = 0.5 * (b - a);
  const double umax = 4.3;
  TsOut out;
  double prev = 0.0;
  bool have_prev = false;
  double disc = 1e300;
  for (int level = 0;; ++level) {
    const double h = 1.0 / static_cast<double>(1L << level);
    double sum = 0.0, abssum = 0.0, ferr = 0.0;
    const long jmax = static_cast<long>(umax / h);
    for (long j = -jmax; j <= jmax; ++j) {
      const double u = h * static_cast<double>(j);
      const double y = 1.5707963267948966 * std::sinh(u);
      const double w = 1.5707963267948966 * std::cosh(u) / std::pow(std::cosh(y), 2);
      if (w < 1e-300) continue;
      // distance from the nearer endpoint, computed stably; nodes closer than
      // ~1e-280 to an endpoint are dropped (integrable endpoint behaviour
      // makes their contribution irrelevant at double precision)
      const double offfrac = 2.0 / (1.0 + std::exp(2.0 * std::abs(y)));
      if (offfrac < 1e-280) continue;
      const double off = h2 * offfrac;
      const double t = (j <= 0) ? a + off : b - off;
      if (t <= a || t >= b) continue;
      NumValue fv = f(t);
      sum += w * fv.value;
      abssum += std::abs(w * fv.value);
      ferr += w * fv.err;
      ++out.evals;
    }
    const double I = h * h2 * sum;
    if (have_prev) disc = std::abs(I - prev);
    out.val.value = I;
    out.val.err = disc + h * h2 * ferr + 4e-16 * h * h2 * abssum + 1e-300;
    if (level >= 3 && (disc <= tol / 2 || level == max_level)) break;
    prev = I;
    have_prev = true;
  }
  return out;
}

// ------------------------------------------------------- chain continuation

// Derivative chain for Li_k along the chart: each link is either a decrement
// of the last entry (picking up the chart factor) or a drop of a trailing 1.
struct Chain {
  ChartSide side;
  std::vector<Index> idx;          // chain entries, excluding the terminal (1)
  std::vector<bool> decrement;     // link i: true = decrement, false = drop
};

Chain build_chain(const Index& k, ChartSide side) {
  if (!is_positive(k)) throw std::invalid_argument("continuation requires a positive index");
  Chain c;
  c.side = side;
  Index cur = k;
  while (!(cur.size() == 1 && cur[0] == 1)) {
    c.idx.push_back(cur);
    if (cur.back() >= 2) {
      c.decrement.push_back(true);
      cur.back() -= 1;
    } else {
      c.decrement.push_back(false);
      cur.pop_back();
    }
  }
  return c;
}

double li_one_terminal(ChartSide side, double t) {
  return side == ChartSide::Eta ? -t : t;
}

// chart factor multiplying the decremented entry
double chain_factor(ChartSide side, double t) {
  // Eta: 1/(1 - e^{-t});  Xi: 1/(e^t - 1)
  return side == ChartSide::Eta ? 1.0 / (-std::expm1(-t)) : 1.0 / std::expm1(t);
}

double drop_sign(ChartSide side) { return side == ChartSide::Eta ? -1.0 : 1.0; }

// 1/z(t) for the accumulator divisor: Eta z = 1-e^t, Xi uses 1/(e^t - 1).
double acc_divisor(ChartSide side, double t) {
  return side == ChartSide::Eta ? 1.0 / (-std::expm1(t)) : 1.0 / std::expm1(t);
}

struct OdeState {
  std::vector<double> y, e;  // chain values and transported error bounds
  double A = 0.0, eA = 0.0;  // accumulator and its error bound
};

struct OdeProblem {
  const Chain* chain;
  bool with_acc = false;
  double s = 0.0;  // accumulator exponent
};

void ode_deriv(const OdeProblem& pb, double t, const OdeState& st, OdeState& d) {
  const Chain& c = *pb.chain;
  const std::size_t L = c.idx.size();
  d.y.assign(L, 0.0);
  d.e.assign(L, 0.0);
  const double fac = chain_factor(c.side, t);
  const double ds = drop_sign(c.side);
  for (std::size_t i = 0; i < L; ++i) {
    const double v = (i + 1 < L) ? st.y[i + 1] : li_one_terminal(c.side, t);
    const double ve = (i + 1 < L) ? st.e[i + 1] : 0.0;
    if (c.decrement[i]) {
      d.y[i] = fac * v;
      d.e[i] = std::abs(fac) * ve;
    } else {
      d.y[i] = ds * v;
      d.e[i] = ve;
    }
  }
  if (pb.with_acc) {
    const double g = std::pow(t, pb.s - 1.0) * acc_divisor(c.side, t);
    const double y0 = L > 0 ? st.y[0] : li_one_terminal(c.side, t);
    const double e0 = L > 0 ? st.e[0] : 0.0;
    d.A = g * y0;
    d.eA = std::abs(g) * e0 + 1e-16 * std::abs(g * y0);
  } else {
    d.A = d.eA = 0.0;
  }
}

OdeState ode_axpy(const OdeState& a, double h, const OdeState& b) {
  OdeState r = a;
  for (std::size_t i = 0; i < r.y.size(); ++i) {
    r.y[i] += h * b.y[i];
    r.e[i] += h * b.e[i];
  }
  r.A += h * b.A;
  r.eA += h * b.eA;
  return r;
}

OdeState rk4(const OdeProblem& pb, double t, const OdeState& st, double h) {
  OdeState k1, k2, k3, k4;
  ode_deriv(pb, t, st, k1);
  ode_deriv(pb, t + h / 2, ode_axpy(st, h / 2, k1), k2);
  ode_deriv(pb, t + h / 2, ode_axpy(st, h / 2, k2), k3);
  ode_deriv(pb, t + h, ode_axpy(st, h, k3), k4);
  OdeState r = st;
  for (std::size_t i = 0; i < r.y.size(); ++i) {
    r.y[i] += h / 6 * (k1.y[i] + 2 * k2.y[i] + 2 * k3.y[i] + k4.y[i]);
    r.e[i] += h / 6 * (k1.e[i] + 2 * k2.e[i] + 2 * k3.e[i] + k4.e[i]);
  }
  r.A += h / 6 * (k1.A + 2 * k2.A + 2 * k3.A + k4.A);
  r.eA += h / 6 * (k1.eA + 2 * k2.eA + 2 * k3.eA + k4.eA);
  return r;
}

// Advance from t to t_end with local error control; trunc errors are injected
// into the transported bounds.  Optionally records samples of
// |dA/dt| / (t^{q} e^{-t}) for tail calibration.
struct AdvanceOpts {
  double tol_rate = 1e-12;  // allowed local error per unit t
  double sample_q = 0.0;
  std::vector<std::pair<double, double>>* samples = nullptr;
  long* steps = nullptr;
};

void ode_advance(const OdeProblem& pb, double& t, double t_end, OdeState& st,
                 const AdvanceOpts& opts) {
  double h = 0.05;
  while (t < t_end - 1e-14) {
    h = std::min(h, t_end - t);
    OdeState big = rk4(pb, t, st, h);
    OdeState half = rk4(pb, t, st, h / 2);
    OdeState two = rk4(pb, t + h / 2, half, h / 2);
    double est = 0.0;
    for (std::size_t i = 0; i < st.y.size(); ++i)
      est = std::max(est, std::abs(two.y[i] - big.y[i]) / 15.0);
    est = std::max(est, std::abs(two.A - big.A) / 15.0);
    if (est <= opts.tol_rate * h || h <= 1e-6) {
      for (std::size_t i = 0; i < st.y.size(); ++i)
        two.e[i] += 2.0 * std::abs(two.y[i] - big.y[i]) / 15.0 + 1e-17 * std::abs(two.y[i]);
      two.eA += 2.0 * std::abs(two.A - big.A) / 15.0 + 1e-17 * std::abs(two.A);
      st = std::move(two);
      t += h;
      if (opts.steps) ++(*opts.steps);
      if (opts.samples) {
        OdeState d;
        ode_deriv(pb, t, st, d);
        double denom = std::pow(t, opts.sample_q) * std::exp(-t);
        opts.samples->push_back({t, std::abs(d.A) / denom});
      }
      double grow = 0.9 * std::pow(std::max(1e-8, opts.tol_rate * h / std::max(est, 1e-300)), 0.2);
      h *= std::min(2.0, std::max(0.3, grow));
      h = std::min(h, 0.5);
    } else {
      h *= std::max(0.25, 0.9 * std::pow(opts.tol_rate * h / est, 0.2));
    }
  }
}

OdeState bootstrap_chain(const Chain& chain, double t0, double tol) {
  OdeState st;
  const std::size_t L = chain.idx.size();
  st.y.resize(L);
  st.e.resize(L);
  const double z0 = chain.side == ChartSide::Eta ? -std::expm1(t0) : -std::expm1(-t0);
  for (std::size_t i = 0; i < L; ++i) {
    NumValue v = li_real(chain.idx[i], z0, tol / static_cast<double>(L + 1));
    st.y[i] = v.value;
    st.e[i] = v.err;
  }
  return st;
}

}  // namespace

NumValue li_continued(const Index& k, double t, ChartSide side, double tol) {
  if (t < 0) throw std::invalid_argument("li_continued: t must be >= 0");
  if (k.size() == 1 && k[0] == 1) return NumValue::exact(li_one_terminal(side, t));
  const double t0 = 0.5;
  if (t <= t0 + 0.05) {
    const double z = side == ChartSide::Eta ? -std::expm1(t) : -std::expm1(-t);
    return li_real(k, z, tol);
  }
  Chain chain = build_chain(k, side);
  OdeState st = bootstrap_chain(chain, t0, tol / 4);
  OdeProblem pb{&chain, false, 0.0};
  AdvanceOpts opts;
  opts.tol_rate = tol / (4.0 * (t - t0 + 1.0));
  double tt = t0;
  ode_advance(pb, tt, t, st, opts);
  return {st.y[0], st.e[0] + 1e-300};
}

namespace {

// --------------------------------------------- positive-index eta / xi

QuadResult quad_positive(const Index& k, double s, double tol, ChartSide side) {
  if (!(s > 0)) throw std::domain_error("quadrature requires s > 0");
  QuadResult qr;
  const double t0 = 0.5;
  // panel (0, t0] by tanh-sinh on the series chart
  auto f_small = [&](double t) -> NumValue {
    const double z = side == ChartSide::Eta ? -std::expm1(t) : -std::expm1(-t);
    NumValue li = li_real(k, z, tol * 1e-3);
    const double div = acc_divisor(side, t);
    const double w = std::pow(t, s - 1.0);
    return {w * li.value * div, w * li.err * std::abs(div) + 4e-16 * std::abs(w * li.value * div)};
  };
  TsOut head = tanh_sinh(f_small, 0.0, t0, tol / 6);
  qr.evaluations += head.evals;
  qr.head = head.val.value;

  const double q = s - 1.0 + static_cast<double>(weight(k));
  Chain chain = build_chain(k, side);
  OdeState st = bootstrap_chain(chain, t0, tol / 10);
  OdeProblem pb{&chain, true, s};
  std::vector<std::pair<double, double>> samples;
  AdvanceOpts opts;
  opts.sample_q = q;
  opts.samples = &samples;
  opts.steps = &qr.evaluations;

  double T = std::max(25.0, 2.0 * q + 6.0);
  double t = t0;
  double tail = 1e300, Ccal = 0.0;
  for (int round = 0; round < 40; ++round) {
    opts.tol_rate = tol / (6.0 * (T - t0 + 1.0));
    ode_advance(pb, t, T, st, opts);
    // calibrate |integrand| <= C t^q e^{-t} from trailing samples
    Ccal = 0.0;
    std::size_t n = samples.size();
    for (std::size_t i = n > 12 ? n - 12 : 0; i < n; ++i)
      Ccal = std::max(Ccal, samples[i].second);
    Ccal *= 4.0;
    tail = 2.0 * Ccal * std::pow(T, q) * std::exp(-T);  // valid once T >= 2q
    if (T >= 2.0 * q && tail <= tol / 6) break;
    T += 6.0;
  }
  qr.middle = st.A;
  qr.tail_bound = tail;
  qr.cut = T;

  const double g = std::tgamma(s);
  double total = (head.val.value + st.A + 0.0) / g;
  double err = (head.val.err + st.eA + tail) / g + 4e-15 * std::abs(total);
  qr.total = {total, err};
  return qr;
}

// --------------------------------------------- nonpositive-index integrands

struct PolyEval {
  std::vector<double> coef;  // univariate coefficients, index = exponent
  double abs_sum = 0.0;
};

PolyEval make_poly_eval(const IntPoly& p) {
  PolyEval pe;
  pe.coef.assign(static_cast<std::size_t>(p.degree(0)) + 1, 0.0);
  for (const auto& [e, c] : p.terms()) {
    if (mpz_sizeinbase(c.get_mpz_t(), 2) > 53)
      throw std::overflow_error("polynomial coefficient exceeds exact double range");
    pe.coef[static_cast<std::size_t>(e[0])] = c.get_d();
    pe.abs_sum += std::abs(c.get_d());
  }
  return pe;
}

double horner(const PolyEval& pe, double x, double* mag) {
  double v = 0.0, m = 0.0, xa = std::abs(x);
  for (std::size_t i = pe.coef.size(); i-- > 0;) {
    v = v * x + pe.coef[i];
    m = m * xa + std::abs(pe.coef[i]);
  }
  if (mag) *mag = m;
  return v;
}

// integral over [0, T] of f by a tanh-sinh panel on [0,1] plus width-8 panels
QuadResult panel_integrate(const std::function<NumValue(double)>& f, double T, double tol) {
  QuadResult qr;
  int npanels = 1 + static_cast<int>(std::ceil(std::max(0.0, T - 1.0) / 8.0));
  double a = 0.0, b = std::min(1.0, T);
  NumValue acc{0.0, 0.0};
  for (int i = 0; i < npanels; ++i) {
    TsOut piece = tanh_sinh(f, a, b, tol / (2.0 * npanels));
    acc = nv_add(acc, piece.val);
    if (i == 0)
      qr.head = piece.val.value;
    else
      qr.middle += piece.val.value;
    qr.evaluations += piece.evals;
    a = b;
    b = std::min(a + 8.0, T);
    if (a >= T) break;
  }
  qr.total = acc;
  qr.cut = T;
  return qr;
}

QuadResult quad_negative_single(const Index& k_abs, double s, double tol, bool tilde) {
  if (!(s > 0)) throw std::domain_error("quadrature requires s > 0");
  if (!is_nonnegative(k_abs))
    throw std::invalid_argument("negative-index quadrature: entries must be >= 0");
  const long K = weight(k_abs);
  const int r = depth(k_abs);
  if (tilde && K == 0)
    throw std::domain_error("tilde quadrature diverges for the all-zero index");
  IntPoly P = p_poly(k_abs);
  std::vector<int> one{1};
  PolyEval Q = make_poly_eval(P.div_monomial(one));
  // integrand: t^{s-1} Q(z) e^{-c0 t},  z = 1 - e^t;  with |Q(z)| <= A e^{d t},
  // d = deg Q, the decay rate is c = c0 - d >= 1.
  const double c0 = static_cast<double>(K + r) - (tilde ? 1.0 : 0.0);
  const double d = static_cast<double>(Q.coef.size() - 1);
  const double c = c0 - d;
  if (!(c >= 1.0 - 1e-9)) throw std::logic_error("quad_negative_single: no decay");
  auto f = [&](double t) -> NumValue {
    const double z = -std::expm1(t);
    double mag = 0.0;
    const double qv = horner(Q, z, &mag);
    const double w = std::pow(t, s - 1.0) * std::exp(-c0 * t);
    return {w * qv, w * mag * (Q.coef.size() + 2.0) * 2.3e-16};
  };
  double T = std::max(8.0, 2.0 * std::max(0.0, s - 1.0) / c + 4.0);
  auto tail_of = [&](double TT) {
    return Q.abs_sum * (2.0 / c) * std::pow(TT, s - 1.0) * std::exp(-c * TT);
  };
  while (tail_of(T) > tol / 4 && T < 700.0) T += 4.0;
  QuadResult qr = panel_integrate(f, T, tol / 2);
  qr.tail_bound = tail_of(T);
  const double g = std::tgamma(s);
  double total = qr.total.value / g;
  double err = (qr.total.err + qr.tail_bound) / g + 4e-15 * std::abs(total);
  qr.total = {total, err};
  return qr;
}

}  // namespace

QuadResult eta_quad(const Index& k, double s, double tol) {
  if (k.empty()) throw std::invalid_argument("eta_quad: empty index");
  if (is_positive(k)) return quad_positive(k, s, tol, ChartSide::Eta);
  bool all_np = true;
  for (int e : k) all_np = all_np && (e <= 0);
  if (!all_np)
    throw std::invalid_argument("eta_quad: index must be all-positive or all-nonpositive");
  Index k_abs = k;
  for (int& e : k_abs) e = -e;
  return quad_negative_single(k_abs, s, tol, /*tilde=*/false);
}

QuadResult xi_quad(const Index& k, double s, double tol) {
  if (!is_positive(k)) throw std::invalid_argument("xi_quad: index must be positive");
  return quad_positive(k, s, tol, ChartSide::Xi);
}

QuadResult xi_tilde_quad(const Index& k_abs, double s, double tol) {
  return quad_negative_single(k_abs, s, tol, /*tilde=*/true);
}

QuadResult eta_neg_multi_quad(const Index& k_abs, const std::vector<double>& s, double tol) {
  if (!is_nonnegative(k_abs))
    throw std::invalid_argument("eta_neg_multi_quad: entries must be >= 0");
  const int r = depth(k_abs);
  if (s.size() != k_abs.size())
    throw std::invalid_argument("eta_neg_multi_quad: index/exponent arity mismatch");
  for (double sj : s)
    if (!(sj > 0)) throw std::domain_error("eta_neg_multi_quad: requires s_j > 0");
  if (r == 1) {
    Index neg{-k_abs[0]};
    return eta_quad(neg, s[0], tol);
  }
  if (r != 2)
    throw std::invalid_argument("eta_neg_multi_quad: only depth 1 and 2 are supported");

  IntPoly Pt = p_tilde(k_abs);
  IntPoly Q = Pt.div_monomial(std::vector<int>{1, 1});
  double abs_sum = Q.coeff_abs_sum().get_d();
  const double e1 = static_cast<double>(k_abs[0] + k_abs[1] + 1);
  const double e2 = static_cast<double>(k_abs[1] + 1);
  for (const auto& [e, cz] : Q.terms())
    if (mpz_sizeinbase(cz.get_mpz_t(), 2) > 53)
      throw std::overflow_error("polynomial coefficient exceeds exact double range");

  auto f2 = [&](double t1, double t2) -> NumValue {
    const double T1 = t1 + t2, T2 = t2;
    const double y1 = -std::expm1(T1), y2 = -std::expm1(T2);
    double v = 0.0, m = 0.0;
    for (const auto& [e, cz] : Q.terms()) {
      double term = cz.get_d() * std::pow(y1, e[0]) * std::pow(y2, e[1]);
      v += term;
      m += std::abs(term);
    }
    const double w =
        std::pow(t1, s[0] - 1.0) * std::pow(t2, s[1] - 1.0) * std::exp(-e1 * T1 - e2 * T2);
    return {w * v, w * m * (Q.terms().size() + 4.0) * 2.3e-16};
  };

  const double gs1 = std::tgamma(s[0]), gs2 = std::tgamma(s[1]);
  // tails: |f| <= abs_sum * t1^{s1-1} t2^{s2-1} e^{-t1} e^{-2 t2}
  double T1 = std::max(8.0, 2.0 * std::max(0.0, s[0] - 1.0) + 4.0);
  double T2 = std::max(8.0, std::max(0.0, s[1] - 1.0) + 4.0);
  auto tail1 = [&](double TT) {
    return abs_sum * 2.0 * std::pow(TT, s[0] - 1.0) * std::exp(-TT) * gs2 / std::pow(2.0, s[1]);
  };
  auto tail2 = [&](double TT) {
    return abs_sum * gs1 * std::pow(TT, s[1] - 1.0) * std::exp(-2.0 * TT);
  };
  while (tail1(T1) > tol / 8 && T1 < 500.0) T1 += 4.0;
  while (tail2(T2) > tol / 8 && T2 < 500.0) T2 += 4.0;

  QuadResult qr;
  long inner_evals = 0;
  auto F = [&](double t2) -> NumValue {
    auto f1 = [&](double t1) { return f2(t1, t2); };
    QuadResult in = panel_integrate(f1, T1, tol / (16.0 * (T2 + 1.0)));
    inner_evals += in.evaluations;
    return in.total;
  };
  QuadResult outer = panel_integrate(F, T2, tol / 2);
  qr.evaluations = inner_evals;
  qr.head = outer.head;
  qr.middle = outer.middle;
  qr.cut = T2;
  qr.tail_bound = tail1(T1) + tail2(T2);
  double total = outer.total.value / (gs1 * gs2);
  double err = (outer.total.err + qr.tail_bound) / (gs1 * gs2) + 4e-15 * std::abs(total);
  qr.total = {total, err};
  return qr;
}

}  // namespace polyzeta
