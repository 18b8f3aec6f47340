#pragma once

#include <string>
#include <variant>

#include "core/json_io.hpp"
#include "core/polytope.hpp"
#include "fn/convex_fn.hpp"
#include "tr/ball.hpp"

namespace convexval {

// Closed-form valuation families. thm41/thm42 act on polytopes, thm52/thm59/
// legendre/weird on piecewise-linear convex functions, laplace on log-concave
// functions.
enum class FamilyVariant { Thm41, Thm42, Thm52, Thm59, Legendre, Laplace, Weird };

FamilyVariant parse_variant(const std::string& name);
std::string variant_name(FamilyVariant v);

struct FamilyParams {
  FamilyVariant variant = FamilyVariant::Legendre;
  Rat c1{0}, c2{0}, c3{0}, c4{0}, c5{0};
  Rat sigma{0};
  Rat eps{0};
};

// Throws InputError on a constraint violation: sigma = 0 for the exponential
// variants, eps*sigma <= 0 with c2 != 0 in thm59 (finiteness), sigma != 0 with
// eps = 0 in thm52 (no such valuation exists).
void validate_params(const FamilyParams& p);

Json family_params_to_json(const FamilyParams& p);
FamilyParams family_params_from_json(const Json& j);

// Polytope with a scalar offset; stands for ind_P + t where a convex function
// is expected. Polytope families require t = 0.
struct PolytopeArg {
  Polytope p;
  Rat t{0};
};

using FamilyInput = std::variant<PolytopeArg, PLConvexS, LogConcaveFn>;

// Coercions between input kinds; throw InputError on a genuine mismatch.
PLConvexS family_input_as_fn(const FamilyInput& input);
LogConcaveFn family_input_as_logconcave(const FamilyInput& input);
const Polytope& family_input_as_polytope(const FamilyInput& input);

// Value of the family at x. Exact rational or exp-form whenever the formula
// allows, enclosing ball otherwise. x must be nonzero for thm41/thm42.
Scalar family_eval(const FamilyParams& p, const FamilyInput& input, const Vec& x,
                   mpfr_prec_t prec);

}  // namespace convexval
