#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "polyzeta/index.hpp"
#include "polyzeta/rational.hpp"

namespace polyzeta {

// Sparse multivariate polynomial with integer coefficients.
class IntPoly {
 public:
  explicit IntPoly(std::size_t nvars) : nvars_(nvars) {}
  static IntPoly constant(std::size_t nvars, const mpz_class& c);
  static IntPoly variable(std::size_t nvars, std::size_t j);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& exps, const mpz_class& c);
  mpz_class coeff(const std::vector<int>& exps) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(const mpz_class& c) const;

  IntPoly derivative(std::size_t var) const;
  int degree(std::size_t var) const;   // -1 for the zero polynomial
  int total_degree() const;            // -1 for the zero polynomial

  // Lowest exponent of `var` across all terms (0 for the zero polynomial).
  int valuation(std::size_t var) const;

  // Exact division by the monomial prod var_j^{e_j}; throws if not divisible.
  IntPoly div_monomial(const std::vector<int>& e) const;

  // Substitute values for all variables.
  Rational eval(const std::vector<Rational>& x) const;
  double eval_double(const std::vector<double>& x) const;

  // Sum of absolute values of coefficients.
  mpz_class coeff_abs_sum() const;

  const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }
  bool operator==(const IntPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  std::string str(const std::vector<std::string>& names) const;

  // Rename/extend to a polynomial in n variables, variable i -> position map[i].
  IntPoly embed(std::size_t nvars, const std::vector<std::size_t>& map) const;

 private:
  std::size_t nvars_;
  std::map<std::vector<int>, mpz_class> terms_;
};

// Numerator polynomial of the rational form of the negative-index polylog:
//   Li_{-k}(z) = p_poly(k)(z) / (1-z)^{weight+depth},  k nonnegative.
// Degree is depth(k) when k is all zero, weight+depth-1 otherwise; divisible
// by z^{depth}.
IntPoly p_poly(const Index& k_abs);  // k_abs = (|k_1|,...,|k_r|), entries >= 0

// Coefficient table c^{(k)}_{j,nu} (0 <= j,nu <= k+1) of the closed form
//   d/dz sum_{m>l} m^k z^m = (1-z)^{-(k+2)} sum_{j,nu} c^{(k)}_{j,nu} l^nu z^{l+j}.
struct CTable {
  int k = 0;
  std::map<std::pair<int, int>, mpz_class> c;  // (j, nu) -> coefficient
};
CTable c_table(int k);  // k >= 0

// Numerator of the rational form of the negative-index iterated-sum polylog
// in its own variable per slot:
//   Li^{sh}_{-k}(y_1,...,y_r) = p_tilde(k)(y) / prod_j (1-y_j)^{e_j},
//   e_j = k_j + ... + k_r + 1.
// Divisible by y_1...y_r; degree in y_j at most e_j.
IntPoly p_tilde(const Index& k_abs);

// The full rational form (numerator + denominator exponents) with invariant
// checks applied on construction.
struct RatPolyForm {
  IntPoly num;                 // numerator polynomial
  std::vector<long> den_exp;   // denominator exponents e_j for (1 - y_j)^{e_j}
};
RatPolyForm li_neg_shuffle_form(const Index& k_abs);

// Exact evaluation of the negative-index polylog Li_{-k} at a rational point
// (depth 1..r via the iterated-sum form).  variant "sh": arguments are the
// iterated-sum variables y_j directly; variant "star": arguments z_j are the
// nested-product variables, y_j = z_j z_{j+1} ... z_r.  Throws on poles
// (y_j = 1).
enum class LiNegVariant { Shuffle, Star };
Rational li_neg_eval(const Index& k_abs, const std::vector<Rational>& z, LiNegVariant variant);

}  // namespace polyzeta
