#pragma once

#include "harness/laws.hpp"

namespace convexval {

// Coefficients for the two unknown functions on the slab grid:
// linear kind      f1(s) = a1 s + b1,            f2(r) = a2 r + b2
// exponential kind f1(s) = a1 e^{-sigma s} + b1, f2(r) = a2 e^{sigma r} + b2
struct CauchyConstants {
  Rat a1, b1, a2, b2, sigma;
};

// f1(s) + f2(r) - sigma t = f1(s+t) + f2(r-t) on all grid triples with
// r >= 0 >= t >= -s, r and s in [0,2] step 1/2. Solvable iff a1 - a2 + sigma = 0;
// a conforming run demands exact zeros, a nonconforming one must find a
// violating triple. Throws InputError when the constraint fails unexpectedly.
void check_cauchy_linear(CheckAccum& acc, const std::string& law_name,
                         const CauchyConstants& c, bool expect_violation);

// e^{-sigma t}(f1(s) + f2(r)) = f1(s+t) + f2(r-t) on the same grid. Solvable
// iff b1 + b2 = 0 and sigma != 0; residuals stay within 1e-12 when conforming.
void check_cauchy_exponential(CheckAccum& acc, const std::string& law_name,
                              const CauchyConstants& c, bool expect_violation);

}  // namespace convexval
