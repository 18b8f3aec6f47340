#pragma once

#include "core/piecewise_poly.hpp"
#include "fn/convex_fn.hpp"
#include "tr/ball.hpp"

namespace convexval {

// Legendre transform, exact on both polyhedral classes.
inline PLConvexF legendre(const PLConvexS& u) { return conjugate(u); }
inline PLConvexS legendre(const PLConvexF& v) { return conjugate(v); }

// Polar of a log-concave function: (e^{-u})^o = e^{-u*}. Flips the class kind.
LogConcaveFn polar(const LogConcaveFn& f);

// Divided difference of exp over the given nodes (repetitions allowed),
// computed as the corner entry of the exponential of the Opitz matrix with
// rigorous scaling-and-squaring error bounds.
Ball divided_diff_exp(const std::vector<Rat>& nodes, mpfr_prec_t prec);

// Laplace transform of the uniform density on P: integral over P of e^{x.y} dy.
// Exactly zero when P is lower-dimensional.
Ball laplace_polytope(const Polytope& p, const Vec& x, mpfr_prec_t prec);

// Laplace transform of f = e^{-u}, kind S: integral e^{x.y - u(y)} dy over dom u.
// `mult` scales the integrand inside the per-cell accumulation (integral of
// mult * f), giving an evaluation route independent of posthoc scaling.
Ball laplace_logconcave(const LogConcaveFn& f, const Vec& x, mpfr_prec_t prec,
                        const Rat& mult = Rat(1));

// Density/test function sum_i c_i t^{m_i} e^{lambda_i t}.
struct ExpPolyTerm {
  Rat c;
  int power = 0;
  Rat lambda;
};
using ExpPolyDensity = std::vector<ExpPolyTerm>;

// Pointwise value eta(t); exact when every lambda is zero.
Scalar density_eval(const ExpPolyDensity& eta, const Rat& t, mpfr_prec_t prec);

// integral pp(t) eta(t) dt over the support of pp; exact when every lambda is 0.
Scalar exp_poly_integral(const PiecewisePoly& pp, const ExpPolyDensity& eta, mpfr_prec_t prec);

}  // namespace convexval
