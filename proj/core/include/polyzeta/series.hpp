#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyzeta/rational.hpp"

namespace polyzeta {

// Truncated univariate power series over the rationals: coefficients of
// t^0 .. t^order, exact arithmetic throughout.
class Series {
 public:
  explicit Series(std::size_t order) : c_(order + 1, Rational(0)) {}
  static Series from_coeffs(std::vector<Rational> coeffs);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  void set(std::size_t i, const Rational& v) { c_.at(i) = v; }

  // Index of the lowest nonzero coefficient; nullopt for the zero series.
  std::optional<std::size_t> valuation() const;

  bool operator==(const Series& o) const { return c_ == o.c_; }
  std::string str(const std::string& var = "t") const;

 private:
  std::vector<Rational> c_;
};

// All results are truncated at order n_max; inputs must carry enough
// coefficients (throws std::invalid_argument otherwise).
Series series_add(const Series& a, const Series& b, std::size_t n_max);
Series series_sub(const Series& a, const Series& b, std::size_t n_max);
Series series_mul(const Series& a, const Series& b, std::size_t n_max);

// Division a/b.  Requires valuation(b) <= valuation(a) and b nonzero, else
// throws std::invalid_argument("non-invertible divisor").  When b has
// valuation v, inputs must carry coefficients up to n_max + v.
Series series_div(const Series& a, const Series& b, std::size_t n_max);

// Composition outer(inner).  Requires valuation(inner) >= 1.
Series series_compose(const Series& outer, const Series& inner, std::size_t n_max);

Series series_derivative(const Series& a);
Series series_scale(const Rational& c, const Series& a);

// n! * [t^n] a  (exponential-generating-function coefficient).
Rational egf_coeff(const Series& a, std::size_t n);

// Builders.
Series series_one_minus_exp_neg(std::size_t order);  // 1 - e^{-t}
Series series_exp_minus_one(std::size_t order);      // e^{t} - 1
Series series_t(std::size_t order);                  // t

}  // namespace polyzeta
