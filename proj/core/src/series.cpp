#include "polyzeta/series.hpp"

#include <sstream>
#include <stdexcept>

#include "polyzeta/combinatorics.hpp"

namespace polyzeta {

Series Series::from_coeffs(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("Series: empty coefficient list");
  Series s(coeffs.size() - 1);
  s.c_ = std::move(coeffs);
  return s;
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return std::nullopt;
}

std::string Series::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[i].str();
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << c_.size() << ")";
  return os.str();
}

namespace {
void require_order(const Series& s, std::size_t n, const char* who) {
  if (s.order() < n)
    throw std::invalid_argument(std::string(who) + ": operand carries too few coefficients");
}
}  // namespace

Series series_add(const Series& a, const Series& b, std::size_t n_max) {
  require_order(a, n_max, "series_add");
  require_order(b, n_max, "series_add");
  Series r(n_max);
  for (std::size_t i = 0; i <= n_max; ++i) r.set(i, a[i] + b[i]);
  return r;
}

Series series_sub(const Series& a, const Series& b, std::size_t n_max) {
  require_order(a, n_max, "series_sub");
  require_order(b, n_max, "series_sub");
  Series r(n_max);
  for (std::size_t i = 0; i <= n_max; ++i) r.set(i, a[i] - b[i]);
  return r;
}

Series series_mul(const Series& a, const Series& b, std::size_t n_max) {
  require_order(a, n_max, "series_mul");
  require_order(b, n_max, "series_mul");
  Series r(n_max);
  for (std::size_t i = 0; i <= n_max; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n_max; ++j) {
      if (b[j].is_zero()) continue;
      r.set(i + j, r[i + j] + a[i] * b[j]);
    }
  }
  return r;
}

Series series_div(const Series& a, const Series& b, std::size_t n_max) {
  auto vb = b.valuation();
  if (!vb) throw std::invalid_argument("non-invertible divisor");
  auto va = a.valuation();
  std::size_t v = *vb;
  if (va && *va < v) throw std::invalid_argument("non-invertible divisor");
  require_order(a, n_max + v, "series_div");
  require_order(b, n_max + v, "series_div");
  // Shift both by t^{-v}; then divisor has a unit constant term.
  Series q(n_max);
  const Rational b0 = b[v];
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational acc = a[n + v];
    for (std::size_t j = 1; j <= n; ++j) acc -= b[v + j] * q[n - j];
    q.set(n, acc / b0);
  }
  return q;
}

Series series_compose(const Series& outer, const Series& inner, std::size_t n_max) {
  auto vi = inner.valuation();
  if (vi.has_value() && *vi == 0)
    throw std::invalid_argument("composition requires positive valuation");
  require_order(inner, n_max, "series_compose");
  if (outer.order() < n_max)
    throw std::invalid_argument("series_compose: outer carries too few coefficients");
  // Horner: r = c_N; r = r*inner + c_{N-1}; ...
  Series r(n_max);
  r.set(0, outer[n_max]);
  for (std::size_t step = 1; step <= n_max; ++step) {
    std::size_t idx = n_max - step;
    r = series_mul(r, inner, n_max);
    r.set(0, r[0] + outer[idx]);
  }
  return r;
}

Series series_derivative(const Series& a) {
  if (a.order() == 0) return Series(0);
  Series r(a.order() - 1);
  for (std::size_t i = 1; i <= a.order(); ++i)
    r.set(i - 1, a[i] * Rational(static_cast<long>(i)));
  return r;
}

Series series_scale(const Rational& c, const Series& a) {
  Series r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r.set(i, c * a[i]);
  return r;
}

Rational egf_coeff(const Series& a, std::size_t n) {
  require_order(a, n, "egf_coeff");
  return a[n] * Rational(factorial(static_cast<unsigned>(n)));
}

Series series_one_minus_exp_neg(std::size_t order) {
  // 1 - e^{-t} = sum_{n>=1} (-1)^{n+1} t^n / n!
  Series s(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational c = Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
    if (n % 2 == 0) c = -c;
    s.set(n, c);
  }
  return s;
}

Series series_exp_minus_one(std::size_t order) {
  Series s(order);
  for (std::size_t n = 1; n <= order; ++n)
    s.set(n, Rational(1) / Rational(factorial(static_cast<unsigned>(n))));
  return s;
}

Series series_t(std::size_t order) {
  Series s(order);
  if (order >= 1) s.set(1, Rational(1));
  return s;
}

}  // namespace polyzeta
