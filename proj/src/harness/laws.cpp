#include "harness/laws.hpp"

#include <algorithm>
#include <cstdio>

namespace convexval {

Scalar fn_value(const PLConvexS& u, const Vec& x) {
  const auto t = eval(u, x);
  return t ? scalar_exact(*t) : scalar_inf();
}

Scalar fn_value(const PLConvexF& v, const Vec& x) { return scalar_exact(eval(v, x)); }

Scalar logconcave_value(const LogConcaveFn& f, const Vec& x) {
  if (f.kind == 'S') {
    const auto t = eval(*f.s, x);
    return t ? scalar_exp_form(Rat(1), -*t) : scalar_exact(Rat(0));
  }
  return scalar_exp_form(Rat(1), -eval(*f.f, x));
}

Residual law_residual(const Scalar& l, const Scalar& r, mpfr_prec_t prec) {
  Residual res = scalar_residual(l, r, prec);
  if (res.exact_zero || res.infinite_mismatch) return res;
  Rat denom = std::max<Rat>(Rat(1), scalar_abs_lower(l, prec));
  denom = std::max<Rat>(denom, scalar_abs_lower(r, prec));
  res.upper /= denom;
  return res;
}

bool LawEntry::violated() const {
  if (infinite_mismatch || !monotone) return true;
  return tolerance == 0 ? !all_exact : max_residual > tolerance;
}

bool LawEntry::pass() const { return expect_violation ? violated() : !violated(); }

LawEntry& CheckAccum::entry(const std::string& name, const std::string& fixture_class,
                            const Rat& tolerance, bool expect_violation) {
  for (auto& e : entries_)
    if (e.name == name && e.fixture_class == fixture_class) return e;
  LawEntry e;
  e.name = name;
  e.fixture_class = fixture_class;
  e.tolerance = tolerance;
  e.expect_violation = expect_violation;
  entries_.push_back(std::move(e));
  return entries_.back();
}

void CheckAccum::record(LawEntry& e, const Scalar& lhs, const Scalar& rhs,
                        const std::function<Json()>& witness) {
  const Residual r = law_residual(lhs, rhs, prec_);
  ++e.probes;
  const bool was_violated = e.violated();
  if (r.infinite_mismatch) e.infinite_mismatch = true;
  if (!r.exact_zero) {
    e.all_exact = false;
    e.max_residual = std::max<Rat>(e.max_residual, r.upper);
  }
  if (!was_violated && e.violated() && !e.witness) e.witness = witness();
}

bool CheckAccum::all_pass() const {
  for (const auto& e : entries_)
    if (!e.pass()) return false;
  return true;
}

namespace {

std::string residual_decimal(const Residual& r) {
  if (r.infinite_mismatch) return "inf";
  if (r.exact_zero) return "0";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6e", rat_to_double(r.upper));
  return buf;
}

}  // namespace

bool scalar_struct_eq(const Scalar& a, const Scalar& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Scalar::Kind::Exact: return a.exact == b.exact;
    case Scalar::Kind::ExpForm: return a.coef == b.coef && a.expo == b.expo;
    case Scalar::Kind::PlusInf: return true;
    case Scalar::Kind::Real: return false;
  }
  return false;
}

Json probe_witness(const Json& fixture_tag, const Vec& x, const Scalar& lhs,
                   const Scalar& rhs, mpfr_prec_t prec) {
  Json w;
  w["fixture"] = fixture_tag;
  w["probe"] = vec_to_json(x);
  w["lhs"] = scalar_to_json(lhs, prec);
  w["rhs"] = scalar_to_json(rhs, prec);
  w["residual"] = residual_decimal(law_residual(lhs, rhs, prec));
  return w;
}

void check_valuation_polytope(CheckAccum& acc, LawEntry& e,
                              const std::function<Scalar(const Polytope&, const Vec&)>& z,
                              const SplitTriple& split, const std::vector<Vec>& probes,
                              const Json& fixture_tag) {
  for (const Vec& x : probes) {
    const Scalar lhs = scalar_add(z(split.p1, x), z(split.p2, x), acc.prec());
    const Scalar rhs = scalar_add(z(split.whole, x), z(split.slice, x), acc.prec());
    acc.record(e, lhs, rhs, [&] { return probe_witness(fixture_tag, x, lhs, rhs, acc.prec()); });
  }
}

}  // namespace convexval
