#include "polyzeta/dirichlet.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polyzeta {

void DirichletPoly::add_term(const std::vector<long>& bases, const Rational& c) {
  if (bases.size() != arity_)
    throw std::invalid_argument("DirichletPoly::add_term: arity mismatch");
  for (long b : bases)
    if (b < 1) throw std::invalid_argument("DirichletPoly::add_term: base must be >= 1");
  if (c.is_zero()) return;
  auto it = terms_.find(bases);
  if (it == terms_.end()) {
    terms_.emplace(bases, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational DirichletPoly::eval_int(const std::vector<long>& s) const {
  if (s.size() != arity_) throw std::invalid_argument("DirichletPoly::eval_int: arity mismatch");
  Rational acc(0);
  for (const auto& [bases, c] : terms_) {
    Rational t = c;
    for (std::size_t j = 0; j < arity_; ++j)
      t *= Rational::pow(Rational(bases[j]), -s[j]);
    acc += t;
  }
  return acc;
}

Rational DirichletPoly::eval_int1(long s) const {
  return eval_int(std::vector<long>{s});
}

NumValue DirichletPoly::eval_real(const std::vector<double>& s) const {
  if (s.size() != arity_) throw std::invalid_argument("DirichletPoly::eval_real: arity mismatch");
  double acc = 0.0, mag = 0.0;
  for (const auto& [bases, c] : terms_) {
    double t = c.to_double();
    for (std::size_t j = 0; j < arity_; ++j)
      t *= std::pow(static_cast<double>(bases[j]), -s[j]);
    acc += t;
    mag += std::abs(t);
  }
  // Rounding: each term carries a handful of roundings, plus the summation.
  double n = static_cast<double>(terms_.size() + 1);
  return {acc, (8.0 + n) * 2.3e-16 * mag + 1e-300};
}

std::string DirichletPoly::str() const {
  std::ostringstream os;
  if (terms_.empty()) return "0";
  bool first = true;
  for (const auto& [bases, c] : terms_) {
    if (!first) os << " + ";
    os << c.str() << " * ";
    if (arity_ == 1) {
      os << bases[0] << "^-s";
    } else {
      os << "(";
      for (std::size_t j = 0; j < arity_; ++j) os << (j ? "," : "") << bases[j];
      os << ")^-(";
      for (std::size_t j = 0; j < arity_; ++j) os << (j ? "," : "") << "s" << (j + 1);
      os << ")";
    }
    first = false;
  }
  return os.str();
}

}  // namespace polyzeta
