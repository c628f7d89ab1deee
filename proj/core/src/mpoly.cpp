#include "polyzeta/mpoly.hpp"

#include <numeric>
#include <stdexcept>

#include "polyzeta/combinatorics.hpp"

namespace polyzeta {

MPoly::MPoly(std::size_t nvars, std::vector<unsigned> caps)
    : nvars_(nvars), caps_(std::move(caps)) {
  if (caps_.size() != nvars_) throw std::invalid_argument("MPoly: caps/nvars mismatch");
}

MPoly MPoly::constant(std::size_t nvars, std::vector<unsigned> caps, const Rational& c) {
  MPoly p(nvars, std::move(caps));
  p.add_term(std::vector<unsigned>(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::vector<unsigned> caps, std::size_t j) {
  MPoly p(nvars, std::move(caps));
  std::vector<unsigned> e(nvars, 0);
  if (j >= nvars) throw std::invalid_argument("MPoly::variable: index out of range");
  e[j] = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool MPoly::within_caps(const std::vector<unsigned>& e) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (e[i] > caps_[i]) return false;
  return true;
}

void MPoly::add_term(const std::vector<unsigned>& exps, const Rational& c) {
  if (exps.size() != nvars_) throw std::invalid_argument("MPoly::add_term: bad exponent vector");
  if (c.is_zero() || !within_caps(exps)) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MPoly::coeff(const std::vector<unsigned>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.nvars_, a.caps_);
  std::vector<unsigned> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool ok = true;
      for (std::size_t i = 0; i < a.nvars_; ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > a.caps_[i]) { ok = false; break; }
      }
      if (ok) r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly r(nvars_, caps_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = MPoly::constant(nvars_, caps_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * (*this);
  return r;
}

MPoly mpoly_one_minus_exp_neg_sum(std::size_t nvars, const std::vector<unsigned>& caps,
                                  const std::vector<std::size_t>& vars) {
  MPoly y(nvars, caps);
  for (std::size_t j : vars) y += MPoly::variable(nvars, caps, j);
  // 1 - e^{-y} = sum_{n>=1} (-1)^{n+1} y^n / n!, truncated at total degree
  // sum(caps) which is the largest surviving monomial degree.
  unsigned total = std::accumulate(caps.begin(), caps.end(), 0u);
  MPoly acc(nvars, caps);
  MPoly ypow = MPoly::constant(nvars, caps, Rational(1));
  for (unsigned n = 1; n <= total; ++n) {
    ypow = ypow * y;
    if (ypow.is_zero()) break;
    Rational c = Rational(1) / Rational(factorial(n));
    if (n % 2 == 0) c = -c;
    acc += ypow.scaled(c);
  }
  return acc;
}

}  // namespace polyzeta
