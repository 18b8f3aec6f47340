#pragma once

#include "core/piecewise_poly.hpp"
#include "core/polytope.hpp"
#include "fn/convex_fn.hpp"
#include "tr/transforms.hpp"

namespace convexval {

// One-dimensional profile applied to the two support numbers of a polytope:
// either piecewise linear or piecewise exponential, with the branch split at 0.
struct ZetaSpec {
  bool exponential = false;
  // linear: zeta(t) = zeta0 + slope_pos t for t >= 0, zeta0 + slope_neg t for t <= 0
  Rat zeta0, slope_pos, slope_neg;
  // exponential: zeta(t) = amp_pos e^{sigma t} + const_pos for t >= 0 and
  // amp_neg e^{sigma t} + const_neg for t <= 0; the constants cancel in pairs
  // and both branches agree at 0.
  Rat sigma, amp_pos, amp_neg, const_pos, const_neg;
};

ZetaSpec zeta_linear(const Rat& zeta0, const Rat& slope_pos, const Rat& slope_neg);
ZetaSpec zeta_exponential(const Rat& sigma, const Rat& amp_pos, const Rat& amp_neg,
                          const Rat& const_pos, const Rat& const_neg);
Scalar zeta_eval(const ZetaSpec& z, const Rat& t, mpfr_prec_t prec);

// integral_{min u}^{inf} h({u <= s}, x) e^{-s} ds. The integrand is piecewise
// linear in s with breakpoints among the graph values; each interval is
// certified exactly before integration.
Scalar weird_valuation(const PLConvexS& u, const Vec& x, mpfr_prec_t prec);

// eta0(min u) + integral over dom u of eta1(u(w)) dw.
Scalar mussnig_form(const PLConvexS& u, const ExpPolyDensity& eta0, const ExpPolyDensity& eta1,
                    mpfr_prec_t prec);

// zeta(h_P(x)) + zeta(-h_{-P}(x)) + integral of (sweep profile of P along x) eta.
// Requires 0 in P so the two support numbers land on fixed branches of zeta.
Scalar li_representation(const ZetaSpec& z, const ExpPolyDensity& eta, const Polytope& p,
                         const Vec& x, mpfr_prec_t prec);

}  // namespace convexval
