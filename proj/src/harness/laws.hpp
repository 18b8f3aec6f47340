#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <string>

#include "core/json_io.hpp"
#include "core/unimodular.hpp"
#include "fn/convex_fn.hpp"
#include "fn/fixtures.hpp"
#include "tr/ball.hpp"

namespace convexval {

// Pointwise values as scalars; +inf outside dom for convex functions, 0 for
// log-concave ones.
Scalar fn_value(const PLConvexS& u, const Vec& x);
Scalar fn_value(const PLConvexF& v, const Vec& x);
Scalar logconcave_value(const LogConcaveFn& f, const Vec& x);

// Relative residual |lhs - rhs| / max(1, |lhs|, |rhs|); exactness preserved.
Residual law_residual(const Scalar& l, const Scalar& r, mpfr_prec_t prec);

// Accumulated outcome of one law over one fixture class. tolerance 0 demands
// exactly-zero residuals; expect_violation flips the pass sense (the law must
// break somewhere, and the first break is kept as witness).
struct LawEntry {
  std::string name;
  std::string fixture_class;
  Rat tolerance{0};
  bool expect_violation = false;
  Rat max_residual{0};
  bool all_exact = true;
  bool infinite_mismatch = false;
  bool monotone = true;  // schedule checks clear this on a residual increase
  long probes = 0;
  std::optional<Json> witness;

  bool violated() const;
  bool pass() const;
};

class CheckAccum {
 public:
  explicit CheckAccum(mpfr_prec_t prec) : prec_(prec) {}

  // Finds or creates the entry; references stay valid (deque storage).
  LawEntry& entry(const std::string& name, const std::string& fixture_class,
                  const Rat& tolerance, bool expect_violation = false);

  // Records one probe comparison; the witness is built lazily on the first
  // violating probe.
  void record(LawEntry& e, const Scalar& lhs, const Scalar& rhs,
              const std::function<Json()>& witness);

  mpfr_prec_t prec() const { return prec_; }
  const std::deque<LawEntry>& entries() const { return entries_; }
  bool all_pass() const;

 private:
  mpfr_prec_t prec_;
  std::deque<LawEntry> entries_;
};

Json probe_witness(const Json& fixture_tag, const Vec& x, const Scalar& lhs,
                   const Scalar& rhs, mpfr_prec_t prec);

// How the right-hand side of a transport law rewrites Psi(base) at probe x
// for shift vector y: add factor*(x.y), multiply by e^{factor*(x.y)}, shift
// the probe to x - factor*y, or leave it alone.
struct Post {
  enum Kind { AddLin, MulExp, ShiftArg, None } kind = None;
  Rat factor{1};
};

// Checks Psi(transformed)(x) = post(Psi(base))(x) over the probes.
template <class Obj>
void check_transport_law(CheckAccum& acc, LawEntry& e,
                         const std::function<Scalar(const Obj&, const Vec&)>& psi,
                         const Obj& base, const Obj& transformed, const Vec& y,
                         const Post& post, const std::vector<Vec>& probes,
                         const Json& fixture_tag) {
  for (const Vec& x : probes) {
    const Scalar lhs = psi(transformed, x);
    Scalar rhs;
    switch (post.kind) {
      case Post::AddLin:
        rhs = scalar_add(psi(base, x), scalar_exact(post.factor * dot(x, y)), acc.prec());
        break;
      case Post::MulExp:
        rhs = scalar_mul_exp(psi(base, x), post.factor * dot(x, y), acc.prec());
        break;
      case Post::ShiftArg:
        rhs = psi(base, vsub(x, vscale(post.factor, y)));
        break;
      case Post::None:
        rhs = psi(base, x);
        break;
    }
    acc.record(e, lhs, rhs, [&] { return probe_witness(fixture_tag, x, lhs, rhs, acc.prec()); });
  }
}

// Checks Psi(composed)(x) = Psi(base)(probe_map x) over the probes, where
// composed is the group action on the input and probe_map the matching action
// on the output argument (phi^t for contravariance, phi^{-1} for covariance).
template <class Obj>
void check_sln_law(CheckAccum& acc, LawEntry& e,
                   const std::function<Scalar(const Obj&, const Vec&)>& psi,
                   const Obj& base, const Obj& composed, const Mat& probe_map,
                   const std::vector<Vec>& probes, const Json& fixture_tag) {
  for (const Vec& x : probes) {
    const Scalar lhs = psi(composed, x);
    const Scalar rhs = psi(base, mat_vec(probe_map, x));
    acc.record(e, lhs, rhs, [&] { return probe_witness(fixture_tag, x, lhs, rhs, acc.prec()); });
  }
}

// Structural equality of scalar values (Real never compares equal).
bool scalar_struct_eq(const Scalar& a, const Scalar& b);

// Valuation law Psi(u1 v u2) + Psi(u1 ^ u2) = Psi(u1) + Psi(u2) on a split
// pair (all four elements in class by construction). pre is the transform
// applied once per element, value its pointwise evaluation. exact_multiset
// compares the two value multisets structurally before falling back to ball
// sums (for transforms whose outputs are pure exponentials).
template <class Out>
void check_valuation_split(CheckAccum& acc, LawEntry& e,
                           const std::function<Out(const PLConvexS&)>& pre,
                           const std::function<Scalar(const Out&, const Vec&)>& value,
                           const SplitPairS& pair, const std::vector<Vec>& probes,
                           const Json& fixture_tag, bool exact_multiset = false) {
  const JoinMeetS jm = join_meet(pair.u1, pair.u2);
  if (!jm.min_is_convex || !jm.join) throw DomainError("split pair left its class");
  const Out t_join = pre(*jm.join);
  const Out t_meet = pre(jm.meet);
  const Out t_u1 = pre(pair.u1);
  const Out t_u2 = pre(pair.u2);
  for (const Vec& x : probes) {
    const Scalar l1 = value(t_join, x), l2 = value(t_meet, x);
    const Scalar r1 = value(t_u1, x), r2 = value(t_u2, x);
    if (exact_multiset && ((scalar_struct_eq(l1, r1) && scalar_struct_eq(l2, r2)) ||
                           (scalar_struct_eq(l1, r2) && scalar_struct_eq(l2, r1)))) {
      acc.record(e, scalar_exact(Rat(0)), scalar_exact(Rat(0)), [] { return Json(); });
      continue;
    }
    const Scalar lhs = scalar_add(l1, l2, acc.prec());
    const Scalar rhs = scalar_add(r1, r2, acc.prec());
    acc.record(e, lhs, rhs, [&] { return probe_witness(fixture_tag, x, lhs, rhs, acc.prec()); });
  }
}

// Same law for log-concave pairs built from a split pair on the exponent:
// pointwise max of the exponentials is e^{-min} and vice versa.
template <class Out>
void check_valuation_lc(CheckAccum& acc, LawEntry& e,
                        const std::function<Out(const LogConcaveFn&)>& pre,
                        const std::function<Scalar(const Out&, const Vec&)>& value,
                        const SplitPairS& pair, const std::vector<Vec>& probes,
                        const Json& fixture_tag, bool exact_multiset = false) {
  const JoinMeetS jm = join_meet(pair.u1, pair.u2);
  if (!jm.min_is_convex || !jm.join) throw DomainError("split pair left its class");
  const Out t_join = pre(make_logconcave_s(jm.meet));
  const Out t_meet = pre(make_logconcave_s(*jm.join));
  const Out t_f1 = pre(make_logconcave_s(pair.u1));
  const Out t_f2 = pre(make_logconcave_s(pair.u2));
  for (const Vec& x : probes) {
    const Scalar l1 = value(t_join, x), l2 = value(t_meet, x);
    const Scalar r1 = value(t_f1, x), r2 = value(t_f2, x);
    if (exact_multiset && ((scalar_struct_eq(l1, r1) && scalar_struct_eq(l2, r2)) ||
                           (scalar_struct_eq(l1, r2) && scalar_struct_eq(l2, r1)))) {
      acc.record(e, scalar_exact(Rat(0)), scalar_exact(Rat(0)), [] { return Json(); });
      continue;
    }
    const Scalar lhs = scalar_add(l1, l2, acc.prec());
    const Scalar rhs = scalar_add(r1, r2, acc.prec());
    acc.record(e, lhs, rhs, [&] { return probe_witness(fixture_tag, x, lhs, rhs, acc.prec()); });
  }
}

// Valuation law on a polytope split: Z(p1) + Z(p2) = Z(whole) + Z(slice).
void check_valuation_polytope(CheckAccum& acc, LawEntry& e,
                              const std::function<Scalar(const Polytope&, const Vec&)>& z,
                              const SplitTriple& split, const std::vector<Vec>& probes,
                              const Json& fixture_tag);

}  // namespace convexval
