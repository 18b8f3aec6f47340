#include "harness/family.hpp"

#include "fn/fixtures.hpp"
#include "tr/aux_forms.hpp"
#include "tr/transforms.hpp"

namespace convexval {

FamilyVariant parse_variant(const std::string& name) {
  if (name == "thm41") return FamilyVariant::Thm41;
  if (name == "thm42") return FamilyVariant::Thm42;
  if (name == "thm52") return FamilyVariant::Thm52;
  if (name == "thm59") return FamilyVariant::Thm59;
  if (name == "legendre") return FamilyVariant::Legendre;
  if (name == "laplace") return FamilyVariant::Laplace;
  if (name == "weird") return FamilyVariant::Weird;
  throw InputError("unknown family variant: " + name);
}

std::string variant_name(FamilyVariant v) {
  switch (v) {
    case FamilyVariant::Thm41: return "thm41";
    case FamilyVariant::Thm42: return "thm42";
    case FamilyVariant::Thm52: return "thm52";
    case FamilyVariant::Thm59: return "thm59";
    case FamilyVariant::Legendre: return "legendre";
    case FamilyVariant::Laplace: return "laplace";
    case FamilyVariant::Weird: return "weird";
  }
  throw DomainError("unreachable family variant");
}

void validate_params(const FamilyParams& p) {
  switch (p.variant) {
    case FamilyVariant::Thm42:
      if (p.sigma == 0) throw InputError("thm42 requires sigma != 0");
      break;
    case FamilyVariant::Thm52:
      // The translation laws with eps = 0 force the linear part to vanish.
      if (p.eps == 0 && p.sigma != 0)
        throw InputError("thm52 with eps = 0 requires sigma = 0");
      break;
    case FamilyVariant::Thm59:
      if (p.sigma == 0) throw InputError("thm59 requires sigma != 0");
      // The integral term diverges unless eps*sigma > 0.
      if (p.c2 != 0 && p.eps * p.sigma <= 0)
        throw InputError("thm59 integral term requires eps*sigma > 0");
      break;
    default:
      break;
  }
}

Json family_params_to_json(const FamilyParams& p) {
  Json j;
  j["variant"] = variant_name(p.variant);
  j["c1"] = rat_to_json(p.c1);
  j["c2"] = rat_to_json(p.c2);
  j["c3"] = rat_to_json(p.c3);
  j["c4"] = rat_to_json(p.c4);
  j["c5"] = rat_to_json(p.c5);
  j["sigma"] = rat_to_json(p.sigma);
  j["eps"] = rat_to_json(p.eps);
  return j;
}

FamilyParams family_params_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("variant"))
    throw InputError("family params need a \"variant\" field");
  FamilyParams p;
  p.variant = parse_variant(j.at("variant").get<std::string>());
  auto field = [&](const char* key, Rat& slot) {
    if (j.contains(key)) slot = rat_from_json(j.at(key));
  };
  field("c1", p.c1);
  field("c2", p.c2);
  field("c3", p.c3);
  field("c4", p.c4);
  field("c5", p.c5);
  field("sigma", p.sigma);
  field("eps", p.eps);
  return p;
}

PLConvexS family_input_as_fn(const FamilyInput& input) {
  if (const auto* u = std::get_if<PLConvexS>(&input)) return *u;
  if (const auto* a = std::get_if<PolytopeArg>(&input))
    return add_const(indicator_fn(a->p), a->t);
  if (const auto* f = std::get_if<LogConcaveFn>(&input); f && f->kind == 'S')
    return *f->s;  // e^{-u} stands for its exponent u
  throw InputError("this family takes a convex-function input");
}

LogConcaveFn family_input_as_logconcave(const FamilyInput& input) {
  if (const auto* f = std::get_if<LogConcaveFn>(&input)) return *f;
  if (const auto* a = std::get_if<PolytopeArg>(&input))
    return mul_exp_const(make_logconcave_s(indicator_fn(a->p)), a->t);
  if (const auto* u = std::get_if<PLConvexS>(&input)) return make_logconcave_s(*u);
  throw InputError("this family takes a log-concave input");
}

const Polytope& family_input_as_polytope(const FamilyInput& input) {
  const auto* a = std::get_if<PolytopeArg>(&input);
  if (!a) throw InputError("this family takes a polytope input");
  if (a->t != 0) throw InputError("polytope families take no scalar offset");
  return a->p;
}

namespace {

int input_dim(const FamilyInput& input) {
  if (const auto* a = std::get_if<PolytopeArg>(&input)) return a->p.n;
  if (const auto* u = std::get_if<PLConvexS>(&input)) return u->n;
  return std::get<LogConcaveFn>(input).dim();
}

bool is_zero_vec(const Vec& x) {
  for (const auto& c : x)
    if (c != 0) return false;
  return true;
}

}  // namespace

Scalar family_eval(const FamilyParams& p, const FamilyInput& input, const Vec& x,
                   mpfr_prec_t prec) {
  validate_params(p);
  const int n = input_dim(input);
  if (static_cast<int>(x.size()) != n) throw InputError("probe dimension mismatch");

  switch (p.variant) {
    case FamilyVariant::Thm41: {
      const Polytope& pol = family_input_as_polytope(input);
      if (pol.empty()) throw InputError("family input polytope is empty");
      if (is_zero_vec(x)) throw InputError("thm41 probes must be nonzero");
      const Measures m = measures(pol);
      Rat v = p.c1 * support(pol, x) + p.c2 * support(pol, vscale(Rat(-1), x)) +
              p.c3 * m.v0 + p.c4 * m.vn + p.c5 * dot(x, m.moment);
      return scalar_exact(v);
    }
    case FamilyVariant::Thm42: {
      const Polytope& pol = family_input_as_polytope(input);
      if (pol.empty()) throw InputError("family input polytope is empty");
      if (is_zero_vec(x)) throw InputError("thm42 probes must be nonzero");
      Scalar s = scalar_exp_form(p.c1, p.sigma * support(pol, x));
      s = scalar_add(
          s, scalar_exp_form(p.c2, -p.sigma * support(pol, vscale(Rat(-1), x))), prec);
      if (p.c3 != 0) {
        const Ball lap = laplace_polytope(pol, vscale(p.sigma, x), prec);
        s = scalar_add(s, scalar_mul_rat(scalar_real(lap), p.c3), prec);
      }
      return s;
    }
    case FamilyVariant::Thm52: {
      const PLConvexS u = family_input_as_fn(input);
      if (p.eps == 0) {
        // Point mass at the origin plus a constant.
        return scalar_exact(is_zero_vec(x) ? p.c1 + p.c2 : p.c1);
      }
      const Rat star = eval(conjugate(u), vscale(1 / p.eps, x));
      return scalar_exact(p.eps * p.sigma * star + p.c1);
    }
    case FamilyVariant::Thm59: {
      const PLConvexS u = family_input_as_fn(input);
      const Rat es = p.eps * p.sigma;
      if (es == 0) return scalar_exact(Rat(0));
      const Rat star = eval(conjugate(u), vscale(1 / p.eps, x));
      Scalar s = scalar_exp_form(p.c1, es * star);
      if (p.c2 != 0) {
        const Ball lap = laplace_logconcave(make_logconcave_s(scale_val(u, es)),
                                            vscale(p.sigma, x), prec);
        s = scalar_add(s, scalar_mul_rat(scalar_real(lap), p.c2), prec);
      }
      return s;
    }
    case FamilyVariant::Legendre: {
      const PLConvexS u = family_input_as_fn(input);
      return scalar_exact(eval(conjugate(u), x));
    }
    case FamilyVariant::Laplace: {
      const LogConcaveFn f = family_input_as_logconcave(input);
      return scalar_real(laplace_logconcave(f, x, prec));
    }
    case FamilyVariant::Weird: {
      const PLConvexS u = family_input_as_fn(input);
      return weird_valuation(u, x, prec);
    }
  }
  throw DomainError("unreachable family variant");
}

}  // namespace convexval
