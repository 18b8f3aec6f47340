#include "dual/duality.hpp"

#include "fn/fixtures.hpp"
#include "harness/laws.hpp"
#include "tr/aux_forms.hpp"
#include "tr/transforms.hpp"

namespace convexval {

namespace {

const char* kTransformNames[] = {"legendre", "polar", "laplace", "weird", "family"};

bool known_transform(const std::string& name) {
  for (const char* t : kTransformNames)
    if (name == t) return true;
  return false;
}

}  // namespace

Json transform_to_json(const TransformHandle& t) {
  Json j;
  j["transform"] = t.transform;
  if (t.params) j["params"] = family_params_to_json(*t.params);
  j["dualized"] = t.dualized;
  return j;
}

TransformHandle transform_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("transform"))
    throw InputError("transform handle needs a \"transform\" field");
  TransformHandle t;
  t.transform = j.at("transform").get<std::string>();
  if (!known_transform(t.transform))
    throw InputError("unknown transform: " + t.transform);
  if (j.contains("params")) t.params = family_params_from_json(j.at("params"));
  if (t.transform == "family" && !t.params)
    throw InputError("family transform needs params");
  t.dualized = j.value("dualized", false);
  return t;
}

TransformHandle dualize(TransformHandle t) {
  t.dualized = !t.dualized;
  return t;
}

DualInput dual_of(const DualInput& input) {
  if (const auto* a = std::get_if<PolytopeArg>(&input))
    return conjugate(add_const(indicator_fn(a->p), a->t));
  if (const auto* u = std::get_if<PLConvexS>(&input)) return conjugate(*u);
  if (const auto* v = std::get_if<PLConvexF>(&input)) return conjugate(*v);
  return polar(std::get<LogConcaveFn>(input));
}

namespace {

FamilyInput to_family_input(const DualInput& in) {
  if (const auto* a = std::get_if<PolytopeArg>(&in)) return *a;
  if (const auto* u = std::get_if<PLConvexS>(&in)) return *u;
  if (const auto* f = std::get_if<LogConcaveFn>(&in)) return *f;
  throw InputError("this transform takes no max-affine input");
}

PLConvexS as_fn_s(const DualInput& in) {
  if (const auto* u = std::get_if<PLConvexS>(&in)) return *u;
  if (const auto* a = std::get_if<PolytopeArg>(&in))
    return add_const(indicator_fn(a->p), a->t);
  throw InputError("this transform takes a bounded-domain convex function");
}

LogConcaveFn as_logconcave(const DualInput& in) {
  if (const auto* f = std::get_if<LogConcaveFn>(&in)) return *f;
  if (const auto* a = std::get_if<PolytopeArg>(&in))
    return mul_exp_const(make_logconcave_s(indicator_fn(a->p)), a->t);
  throw InputError("this transform takes a log-concave input");
}

}  // namespace

Scalar transform_apply(const TransformHandle& t, const DualInput& input, const Vec& x,
                       mpfr_prec_t prec) {
  const DualInput in = t.dualized ? dual_of(input) : input;
  if (t.transform == "legendre") {
    if (const auto* v = std::get_if<PLConvexF>(&in)) return fn_value(conjugate(*v), x);
    return scalar_exact(eval(conjugate(as_fn_s(in)), x));
  }
  if (t.transform == "polar") return logconcave_value(polar(as_logconcave(in)), x);
  if (t.transform == "laplace")
    return scalar_real(laplace_logconcave(as_logconcave(in), x, prec));
  if (t.transform == "weird") return weird_valuation(as_fn_s(in), x, prec);
  if (t.transform == "family") {
    if (!t.params) throw InputError("family transform needs params");
    return family_eval(*t.params, to_family_input(in), x, prec);
  }
  throw InputError("unknown transform: " + t.transform);
}

DualVariant parse_dual_variant(const std::string& name) {
  if (name == "id_c") return DualVariant::IdC;
  if (name == "scale_c") return DualVariant::ScaleC;
  if (name == "mix") return DualVariant::Mix;
  throw InputError("unknown dual family variant: " + name);
}

std::string dual_variant_name(DualVariant v) {
  switch (v) {
    case DualVariant::IdC: return "id_c";
    case DualVariant::ScaleC: return "scale_c";
    case DualVariant::Mix: return "mix";
  }
  throw DomainError("unreachable dual variant");
}

Scalar dual_family_eval(DualVariant v, const Rat& c1, const Rat& c2,
                        const DualInput& input, const Vec& x, mpfr_prec_t prec) {
  switch (v) {
    case DualVariant::IdC: {
      if (const auto* vf = std::get_if<PLConvexF>(&input))
        return scalar_add(fn_value(*vf, x), scalar_exact(c1), prec);
      return scalar_add(fn_value(as_fn_s(input), x), scalar_exact(c1), prec);
    }
    case DualVariant::ScaleC:
      return scalar_mul_rat(logconcave_value(as_logconcave(input), x), c1);
    case DualVariant::Mix: {
      const LogConcaveFn f = as_logconcave(input);
      Scalar term1 = scalar_exact(Rat(0));
      if (c1 != 0) {
        // 1/f = e^{u} for f = e^{-u}; infinite off the support.
        std::optional<Rat> u;
        if (f.kind == 'S')
          u = eval(*f.s, x);
        else
          u = eval(*f.f, x);
        if (!u) {
          if (c1 < 0) throw DomainError("reciprocal term is negatively infinite");
          term1 = scalar_inf();
        } else {
          term1 = scalar_exp_form(c1, *u);
        }
      }
      Scalar term2 = scalar_exact(Rat(0));
      if (c2 != 0)
        term2 = scalar_mul_rat(scalar_real(laplace_logconcave(polar(f), x, prec)), c2);
      return scalar_add(term1, term2, prec);
    }
  }
  throw DomainError("unreachable dual variant");
}

}  // namespace convexval
