#pragma once

#include "core/polytope.hpp"

namespace convexval {

// Univariate piecewise polynomial with rational coefficients, supported on
// [breaks.front(), breaks.back()], zero outside. Continuous across breaks.
struct PiecewisePoly {
  std::vector<Rat> breaks;               // strictly increasing; size = pieces + 1
  std::vector<std::vector<Rat>> coeff;   // per piece, ascending powers

  bool trivial() const { return coeff.empty(); }
  Rat eval(const Rat& t) const;
};

std::vector<Rat> poly_mul(const std::vector<Rat>& p, const std::vector<Rat>& q);
std::vector<Rat> poly_derivative(const std::vector<Rat>& p);
Rat poly_eval(const std::vector<Rat>& p, const Rat& t);

// Exact integral of pp(t) * t^k over the support.
Rat integrate_times_power(const PiecewisePoly& pp, int k);

// Sweep-volume derivative of P in direction x: the piecewise polynomial
// A with A(t) = d/dt Vol_n(P cap {x . y <= t}), so that for any eta,
// integral_P eta(x . y) dy = integral A(t) eta(t) dt. Degree <= n-1 per piece.
// Zero (trivial) profile when P is lower-dimensional or x is constant on P.
PiecewisePoly shadow_profile(const Polytope& p, const Vec& x);

}  // namespace convexval
