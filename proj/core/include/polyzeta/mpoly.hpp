#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "polyzeta/rational.hpp"

namespace polyzeta {

// Sparse multivariate polynomial over the rationals with per-variable degree
// caps: monomials exceeding any cap are truncated away on construction and
// multiplication.  Used as a truncated multivariate power-series ring.
class MPoly {
 public:
  MPoly(std::size_t nvars, std::vector<unsigned> caps);

  static MPoly constant(std::size_t nvars, std::vector<unsigned> caps, const Rational& c);
  static MPoly variable(std::size_t nvars, std::vector<unsigned> caps, std::size_t j);

  std::size_t nvars() const { return nvars_; }
  const std::vector<unsigned>& caps() const { return caps_; }

  void add_term(const std::vector<unsigned>& exps, const Rational& c);
  Rational coeff(const std::vector<unsigned>& exps) const;
  bool is_zero() const { return terms_.empty(); }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);

  MPoly scaled(const Rational& c) const;
  MPoly pow(unsigned e) const;

  const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }

 private:
  bool within_caps(const std::vector<unsigned>& e) const;
  std::size_t nvars_;
  std::vector<unsigned> caps_;
  std::map<std::vector<unsigned>, Rational> terms_;
};

// The series 1 - e^{-y} truncated by the caps, where y = sum of the chosen
// variables (each with coefficient 1).  vars lists variable indices.
MPoly mpoly_one_minus_exp_neg_sum(std::size_t nvars, const std::vector<unsigned>& caps,
                                  const std::vector<std::size_t>& vars);

}  // namespace polyzeta
