#pragma once

#include <vector>

#include "poly.hpp"
#include "rat.hpp"

namespace ahg::poly {

// Dense univariate polynomial, coeffs[i] multiplying t^i, no trailing zeros.
using UPoly = std::vector<Rat>;

UPoly upoly_from(const Poly& p);  // requires nvars == 1
UPoly upoly_derivative(const UPoly& p);
Rat upoly_eval(const UPoly& p, const Rat& x);
int upoly_degree(const UPoly& p);  // -1 for the zero polynomial

// Interval endpoint: a rational or +/- infinity.
struct Endpoint {
  enum class Kind { neg_inf, finite, pos_inf } kind = Kind::finite;
  Rat value;

  static Endpoint neg_inf() { return {Kind::neg_inf, 0}; }
  static Endpoint pos_inf() { return {Kind::pos_inf, 0}; }
  static Endpoint at(const Rat& v) { return {Kind::finite, v}; }
};

// Number of distinct real roots in the open interval (lo, hi), by the Sturm
// chain of the squarefree part. Requires a nonzero polynomial and lo < hi.
int count_roots_open(const UPoly& p, const Endpoint& lo, const Endpoint& hi);

}  // namespace ahg::poly
