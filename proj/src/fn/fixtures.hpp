#pragma once

#include <vector>

#include "core/polytope.hpp"
#include "core/rng.hpp"
#include "fn/convex_fn.hpp"

namespace convexval {

Polytope cube01(int n);
Polytope centered_cube(int n, const Rat& r);
Polytope simplex0(int n);
Polytope cross_polytope(int n, const Rat& r);
// Full-dimensional random polytope with small rational vertices.
Polytope random_polytope(Rng& rng, int n, int extra);
// Same, recentered so 0 is interior.
Polytope random_polytope_origin(Rng& rng, int n, int extra);

PLConvexS indicator_fn(const Polytope& p);
// indicator of p, plus <y, .>, plus t.
PLConvexS cone_fn(const Polytope& p, const Vec& y, const Rat& t);
PLConvexS random_plconvexs(Rng& rng, int n);
// Translate and shift so the minimum is 0 and attained at 0.
PLConvexS normalize_min_zero(const PLConvexS& u);
PLConvexF random_plconvexf(Rng& rng, int n);
LogConcaveFn random_logconcave_s(Rng& rng, int n);
LogConcaveFn random_logconcave_f(Rng& rng, int n);

// u restricted to the two sides of a hyperplane through the interior of dom:
// min(u1, u2) = u pointwise and max(u1, u2) is u on the slice, so all four
// stay in class.
struct SplitPairS {
  PLConvexS u1, u2, meet;
};
SplitPairS split_pair_s(Rng& rng, const PLConvexS& u);

// p cut by a hyperplane through its interior: p1 u p2 = p, p1 n p2 = slice.
struct SplitTriple {
  Polytope whole, p1, p2, slice;
};
SplitTriple split_polytope(Rng& rng, const Polytope& p);

// Increasing-slope slabs [i-1,i] x [0,1]^{n-1}, i = 1..m; epi-converges as
// m grows to the infinite staircase.
PLConvexS staircase_fn(int n, int m);

// Probe set for pointwise law checks: a lattice over [-3,3]^n, full at
// step 1/4 for n <= 2 and decimated for n >= 3, plus seeded random points.
std::vector<Vec> probe_grid(Rng& rng, int n);
std::vector<Vec> random_probes(Rng& rng, int n, int count, long lo, long hi, long den);
Vec random_nonzero(Rng& rng, int n, long lo, long hi, long den);

}  // namespace convexval
