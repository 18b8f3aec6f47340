#pragma once

#include "harness/laws.hpp"

namespace convexval {

// Finite-index continuity certificates: along a doubling index schedule the
// max-over-probes residual against the limit object must decrease
// monotonically and end below 1e-6. Probes are drawn from [-1,1]^n so the
// Lipschitz bounds of the sequences meet the final tolerance.
void continuity_legendre_translate(CheckAccum& acc, const std::string& law_name, Rng& rng,
                                   int n, int fixtures);
void continuity_legendre_staircase(CheckAccum& acc, const std::string& law_name, int n);
void continuity_legendre_scale(CheckAccum& acc, const std::string& law_name, Rng& rng, int n,
                               int fixtures);
void continuity_laplace_translate(CheckAccum& acc, const std::string& law_name, Rng& rng, int n,
                                  int fixtures);

}  // namespace convexval
