#pragma once

#include "harness/family.hpp"

namespace convexval {

// Named transform, optionally carrying family constants, with a dualized flag
// meaning "pre-compose with conjugation/polarity": the input is replaced by
// its dual object (S <-> F, log-concave <-> polar) before the base transform
// runs. The flip is lazy; no composite object is materialized.
struct TransformHandle {
  std::string transform;  // legendre | polar | laplace | weird | family
  std::optional<FamilyParams> params;
  bool dualized = false;
};

Json transform_to_json(const TransformHandle& t);
TransformHandle transform_from_json(const Json& j);

TransformHandle dualize(TransformHandle t);

// Inputs for transform application; wider than FamilyInput because a dualized
// transform consumes the opposite function class.
using DualInput = std::variant<PolytopeArg, PLConvexS, PLConvexF, LogConcaveFn>;

// Replaces the input by its dual object: conjugate on the function classes,
// polar on the log-concave class (a polytope argument dualizes through its
// induced function ind_P + t).
DualInput dual_of(const DualInput& input);

Scalar transform_apply(const TransformHandle& t, const DualInput& input, const Vec& x,
                       mpfr_prec_t prec);

// Closed forms of the translation-homomorphism families: u + c, c f, and
// c1/f + c2 * laplace(polar f).
enum class DualVariant { IdC, ScaleC, Mix };

DualVariant parse_dual_variant(const std::string& name);
std::string dual_variant_name(DualVariant v);

Scalar dual_family_eval(DualVariant v, const Rat& c1, const Rat& c2,
                        const DualInput& input, const Vec& x, mpfr_prec_t prec);

}  // namespace convexval
