#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace polyzeta {

// A double together with a rigorous absolute error bound.  All numeric
// routines return NumValue; bounds propagate conservatively.
struct NumValue {
  double value = 0.0;
  double err = 0.0;

  static NumValue exact(double v) { return {v, 0.0}; }
  static NumValue with_ulp(double v) { return {v, 4e-16 * std::abs(v) + 1e-300}; }
};

inline NumValue nv_add(const NumValue& a, const NumValue& b) {
  return {a.value + b.value, a.err + b.err + 1e-16 * std::abs(a.value + b.value)};
}
inline NumValue nv_sub(const NumValue& a, const NumValue& b) {
  return {a.value - b.value, a.err + b.err + 1e-16 * std::abs(a.value - b.value)};
}
inline NumValue nv_neg(const NumValue& a) { return {-a.value, a.err}; }
inline NumValue nv_mul(const NumValue& a, const NumValue& b) {
  double v = a.value * b.value;
  double e = std::abs(a.value) * b.err + std::abs(b.value) * a.err + a.err * b.err;
  return {v, e + 1e-16 * std::abs(v)};
}
inline NumValue nv_scale(double c, const NumValue& a) {
  return {c * a.value, std::abs(c) * a.err + 1e-16 * std::abs(c * a.value)};
}

// True when the two enclosures are compatible at tolerance tol: the intervals
// [value +/- (err + tol)] intersect.  tol acts as an additional slack floor.
inline bool nv_consistent(const NumValue& a, const NumValue& b, double tol) {
  return std::abs(a.value - b.value) <= a.err + b.err + tol;
}

// Deviation of the two central values (for reporting).
inline double nv_deviation(const NumValue& a, const NumValue& b) {
  return std::abs(a.value - b.value);
}

}  // namespace polyzeta
