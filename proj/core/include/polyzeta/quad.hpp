#pragma once

#include <vector>

#include "polyzeta/index.hpp"
#include "polyzeta/numvalue.hpp"

namespace polyzeta {

// Detailed result of a quadrature evaluation.
struct QuadResult {
  NumValue total;        // value with rigorous error bound
  double head = 0.0;     // contribution of the panel near t = 0
  double middle = 0.0;   // contribution of the finite panels / ODE segment
  double tail_bound = 0.0;  // bound used for the discarded tail
  double cut = 0.0;      // truncation point T
  long evaluations = 0;  // integrand evaluations
};

// Real-axis continuation chart for Li_k along the two substitutions used by
// the integral representations: Eta side z(t) = 1 - e^{t} (z <= 0),
// Xi side z(t) = 1 - e^{-t} (0 <= z < 1).
enum class ChartSide { Eta, Xi };

// Li_k(z(t)) for positive index k, t >= 0, by power series near 0 and an
// adaptive Runge-Kutta continuation of the derivative chain beyond.
NumValue li_continued(const Index& k, double t, ChartSide side, double tol = 1e-12);

// eta(k; s) by direct numerical integration of its defining integral:
//   1/Gamma(s) * int_0^infty t^{s-1} Li_k(1-e^t)/(1-e^t) dt,  s > 0.
// k all-positive uses the continuation chart; k all-nonpositive uses the
// exact rational closed form of the integrand.  Mixed signs are rejected.
QuadResult eta_quad(const Index& k, double s, double tol = 1e-9);

// xi(k; s) for positive k by numerical integration of
//   1/Gamma(s) * int_0^infty t^{s-1} Li_k(1-e^{-t})/(e^t-1) dt,  s > 0.
QuadResult xi_quad(const Index& k, double s, double tol = 1e-9);

// The tilde-variant at a nonpositive index -k_abs:
//   1/Gamma(s) * int_0^infty t^{s-1} Li_{-k_abs}(1-e^t)/(e^{-t}-1) dt.
// Throws std::domain_error for the all-zero index (divergent integral).
QuadResult xi_tilde_quad(const Index& k_abs, double s, double tol = 1e-9);

// Multi-variable eta at a nonpositive index (depth 1 or 2): iterated
// integration of the multivariate representation built on the exact rational
// form of the iterated-sum polylogarithm.  s_j > 0.
QuadResult eta_neg_multi_quad(const Index& k_abs, const std::vector<double>& s,
                              double tol = 1e-8);

}  // namespace polyzeta
