#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyzeta/numvalue.hpp"
#include "polyzeta/rational.hpp"

namespace polyzeta {

// Finite Dirichlet polynomial in one or several exponent slots:
//   sum over finitely many base tuples (n_1,...,n_r) of
//   coeff * n_1^{-s_1} ... n_r^{-s_r},  all n_j >= 1, coeff rational.
class DirichletPoly {
 public:
  explicit DirichletPoly(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }

  void add_term(const std::vector<long>& bases, const Rational& c);

  // Exact evaluation at integer exponents (negative s means positive powers).
  Rational eval_int(const std::vector<long>& s) const;
  Rational eval_int1(long s) const;  // arity-1 convenience

  // Floating evaluation with rounding bound.
  NumValue eval_real(const std::vector<double>& s) const;

  bool operator==(const DirichletPoly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

  const std::map<std::vector<long>, Rational>& terms() const { return terms_; }

  // Canonical human-readable form, e.g. "3^-s - 2^-s" (arity 1) or
  // "c * (n1,n2)^-(s1,s2)" listing.
  std::string str() const;

 private:
  std::size_t arity_;
  std::map<std::vector<long>, Rational> terms_;
};

}  // namespace polyzeta
