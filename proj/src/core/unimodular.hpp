#pragma once

#include "core/linalg.hpp"
#include "core/rng.hpp"

namespace convexval {

// Random SL(n, Z) matrix: product of `shears` elementary shears I + k E_ij with
// i != j and k in [-bound, bound] \ {0}. Determinant is exactly 1.
Mat random_unimodular(Rng& rng, int n, int shears = 6, long bound = 2);

}  // namespace convexval
