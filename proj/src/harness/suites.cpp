#include "harness/suites.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>

#include "dual/duality.hpp"
#include "harness/cauchy.hpp"
#include "harness/continuity.hpp"
#include "harness/family.hpp"
#include "harness/laws.hpp"
#include "tr/aux_forms.hpp"
#include "tr/transforms.hpp"

namespace convexval {

namespace {

constexpr long kSlnMaps = 1;  // one unimodular map per fixture

long pick(long configured, long dflt) { return configured > 0 ? configured : dflt; }

Rat tol_or(const SuiteConfig& cfg, long inv_denom) {
  return cfg.tol ? *cfg.tol : rat(1, inv_denom);
}
Rat tol9(const SuiteConfig& cfg) { return tol_or(cfg, 1000000000L); }
Rat tol12(const SuiteConfig& cfg) { return tol_or(cfg, 1000000000000L); }

std::string rat_label(const Rat& q) { return rat_to_string(q); }

std::string params_label(std::initializer_list<Rat> qs) {
  std::string s = "c=";
  bool first = true;
  for (const Rat& q : qs) {
    if (!first) s += ";";
    s += rat_label(q);
    first = false;
  }
  return s;
}

std::string eps_sigma_label(const Rat& eps, const Rat& sigma) {
  return "eps=" + rat_label(eps) + " sigma=" + rat_label(sigma);
}

Json fixture_tag(const std::string& cls, long index) {
  return Json{{"class", cls}, {"index", index}};
}

const std::function<Scalar(const PLConvexF&, const Vec&)> kValueF =
    [](const PLConvexF& v, const Vec& x) { return fn_value(v, x); };
const std::function<Scalar(const PLConvexS&, const Vec&)> kValueS =
    [](const PLConvexS& u, const Vec& x) { return fn_value(u, x); };
const std::function<Scalar(const LogConcaveFn&, const Vec&)> kValueLC =
    [](const LogConcaveFn& f, const Vec& x) { return logconcave_value(f, x); };
const std::function<PLConvexF(const PLConvexS&)> kConjugate = [](const PLConvexS& u) {
  return conjugate(u);
};
const std::function<PLConvexS(const PLConvexS&)> kIdentS = [](const PLConvexS& u) { return u; };
const std::function<LogConcaveFn(const LogConcaveFn&)> kIdentLC = [](const LogConcaveFn& f) {
  return f;
};
const std::function<LogConcaveFn(const LogConcaveFn&)> kPolar = [](const LogConcaveFn& f) {
  return polar(f);
};

// ---------------------------------------------------------------------------
// legendre-thm11: the full premise set of the classification of the Legendre
// transform — valuation, SL(n) contravariance, translation conjugation, and a
// finite-index continuity certificate.
SuiteResult suite_legendre_thm11(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 40);
  long fixtures = 0;

  LawEntry& val = acc.entry("valuation", "split", Rat(0));
  LawEntry& sln = acc.entry("sln_contravariant", "random", Rat(0));
  LawEntry& tc = acc.entry("translation_conjugation", "random", Rat(0));
  for (long k = 0; k < count; ++k, ++fixtures) {
    const PLConvexS u = random_plconvexs(rng, n);
    const std::vector<Vec> probes = random_probes(rng, n, 10, -3, 3, 4);
    const Json tag = fixture_tag("random", k);
    const PLConvexF cu = conjugate(u);
    const Vec y = rng.rational_vec(n, -2, 2, 4);
    check_transport_law<PLConvexF>(acc, tc, kValueF, cu, conjugate(translate(u, y)), y,
                                   {Post::AddLin, Rat(1)}, probes, tag);
    check_transport_law<PLConvexF>(acc, tc, kValueF, cu, conjugate(add_linear(u, y)), y,
                                   {Post::ShiftArg, Rat(1)}, probes, tag);
    for (int j = 0; j < kSlnMaps; ++j) {
      const Mat phi = random_unimodular(rng, n);
      check_sln_law<PLConvexF>(acc, sln, kValueF, cu, conjugate(compose_inverse(u, phi)),
                               mat_transpose(phi), probes, tag);
    }
    check_valuation_split<PLConvexF>(acc, val, kConjugate, kValueF, split_pair_s(rng, u),
                                     probes, tag);
  }

  // Staircase chain pairs: max/min of two staircases of different depth stay
  // in class, exercising arbitrarily steep pieces.
  LawEntry& val_st = acc.entry("valuation", "staircase", Rat(0));
  for (int m = 2; m <= 4; ++m, ++fixtures) {
    SplitPairS pair{staircase_fn(n, m), staircase_fn(n, m + 3), staircase_fn(n, m + 3)};
    std::vector<Vec> probes;
    for (int r = -6; r <= 6; ++r) {
      Vec x = vzero(n);
      x[0] = rat(r, 2);
      probes.push_back(x);
    }
    check_valuation_split<PLConvexF>(acc, val_st, kConjugate, kValueF, pair, probes,
                                     fixture_tag("staircase", m));
  }

  continuity_legendre_translate(acc, "continuity", rng, n, 3);
  fixtures += 3;
  return finish_suite("legendre-thm11", cfg.seed, fixtures, acc);
}

// ---------------------------------------------------------------------------
// logpolar-thm12: the polar transform f -> f passes the log-translation
// conjugation pair, SL(n) contravariance, and the valuation law — all exactly
// in the exponent.
SuiteResult suite_logpolar_thm12(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 40);
  long fixtures = 0;

  LawEntry& val = acc.entry("valuation", "split", Rat(0));
  LawEntry& sln = acc.entry("sln_contravariant", "random", Rat(0));
  LawEntry& lc = acc.entry("log_conjugation", "random", Rat(0));
  for (long k = 0; k < count; ++k, ++fixtures) {
    const LogConcaveFn f =
        (k % 2 == 0) ? random_logconcave_s(rng, n) : random_logconcave_f(rng, n);
    const std::vector<Vec> probes = random_probes(rng, n, 10, -3, 3, 4);
    const Json tag = fixture_tag(f.kind == 'S' ? "kind_s" : "kind_f", k);
    const LogConcaveFn pf = polar(f);
    const Vec y = rng.rational_vec(n, -2, 2, 4);
    check_transport_law<LogConcaveFn>(acc, lc, kValueLC, pf, polar(translate(f, y)), y,
                                      {Post::MulExp, Rat(-1)}, probes, tag);
    check_transport_law<LogConcaveFn>(acc, lc, kValueLC, pf, polar(mul_exp_linear(f, y)), y,
                                      {Post::ShiftArg, Rat(1)}, probes, tag);
    const Mat phi = random_unimodular(rng, n);
    check_sln_law<LogConcaveFn>(acc, sln, kValueLC, pf, polar(compose_inverse(f, phi)),
                                mat_transpose(phi), probes, tag);
    const PLConvexS u = random_plconvexs(rng, n);
    check_valuation_lc<LogConcaveFn>(acc, val, kPolar, kValueLC, split_pair_s(rng, u), probes,
                                     tag, /*exact_multiset=*/true);
  }
  return finish_suite("logpolar-thm12", cfg.seed, fixtures, acc);
}

// ---------------------------------------------------------------------------
// laplace-thm13: the combination c1/f-polar + c2 Lf passes its premise laws
// (translation to exponential factor, linear factor to shift), SL(n)
// contravariance, and the valuation law within 1e-9.
SuiteResult suite_laplace_thm13(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 12);
  long fixtures = 0;

  struct Setting {
    Rat c1, c2;
  };
  const std::vector<Setting> settings = {{Rat(1), Rat(1)}, {rat(1, 2), Rat(3)}};
  for (const Setting& st : settings) {
    FamilyParams par;
    par.variant = FamilyVariant::Thm59;
    par.c1 = st.c1;
    par.c2 = st.c2;
    par.eps = Rat(1);
    par.sigma = Rat(1);
    validate_params(par);
    const std::string cls = params_label({st.c1, st.c2});
    const std::function<Scalar(const LogConcaveFn&, const Vec&)> psi =
        [par, prec = cfg.prec](const LogConcaveFn& f, const Vec& x) {
          return family_eval(par, FamilyInput{f}, x, prec);
        };
    LawEntry& laws = acc.entry("laplace_laws", cls, tol9(cfg));
    LawEntry& val = acc.entry("valuation", cls, tol9(cfg));
    LawEntry& sln = acc.entry("sln_contravariant", cls, tol9(cfg));
    Rng local = rng.fork(std::hash<std::string>{}(cls));
    for (long k = 0; k < count; ++k, ++fixtures) {
      const PLConvexS u = random_plconvexs(local, n);
      const LogConcaveFn f = make_logconcave_s(u);
      const std::vector<Vec> probes = random_probes(local, n, 5, -2, 2, 2);
      const Json tag = fixture_tag(cls, k);
      const Vec y = local.rational_vec(n, -1, 1, 4);
      check_transport_law<LogConcaveFn>(acc, laws, psi, f, translate(f, y), y,
                                        {Post::MulExp, Rat(1)}, probes, tag);
      check_transport_law<LogConcaveFn>(acc, laws, psi, f, mul_exp_linear(f, y), y,
                                        {Post::ShiftArg, Rat(1)}, probes, tag);
      const Mat phi = random_unimodular(local, n);
      check_sln_law<LogConcaveFn>(acc, sln, psi, f, compose_inverse(f, phi),
                                  mat_transpose(phi), probes, tag);
      check_valuation_lc<LogConcaveFn>(acc, val, kIdentLC, psi, split_pair_s(local, u), probes,
                                       tag, /*exact_multiset=*/false);
    }
  }
  return finish_suite("laplace-thm13", cfg.seed, fixtures, acc);
}

// ---------------------------------------------------------------------------
// thm41: the linear polytope family c1 h_P + c2 h_{-P} + c3 V0 + c4 Vn +
// c5 <x, m(P)> is a translation-covariant SL(n)-covariant valuation, with
// covariance constant Z0(P) = (c1 - c2) V0 + c5 Vn. All identities exact.
SuiteResult suite_thm41(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 20);
  long fixtures = 0;

  const std::vector<std::array<Rat, 5>> vectors = {
      {Rat(1), Rat(0), Rat(0), Rat(0), Rat(2)},
      {Rat(1), Rat(-1), rat(1, 2), Rat(0), Rat(0)},
      {Rat(0), Rat(1), Rat(0), Rat(1), Rat(0)},
      {Rat(2), Rat(3), Rat(0), Rat(1), Rat(-1)},
      {Rat(0), Rat(0), Rat(1), rat(-1, 2), Rat(3)},
  };
  for (const auto& c : vectors) {
    FamilyParams par;
    par.variant = FamilyVariant::Thm41;
    par.c1 = c[0];
    par.c2 = c[1];
    par.c3 = c[2];
    par.c4 = c[3];
    par.c5 = c[4];
    validate_params(par);
    const std::string cls = params_label({c[0], c[1], c[2], c[3], c[4]});
    const std::function<Scalar(const Polytope&, const Vec&)> z =
        [par, prec = cfg.prec](const Polytope& p, const Vec& x) {
          return family_eval(par, FamilyInput{PolytopeArg{p, Rat(0)}}, x, prec);
        };
    LawEntry& tc = acc.entry("translation_covariant", cls, Rat(0));
    LawEntry& sln = acc.entry("sln_covariant", cls, Rat(0));
    LawEntry& val = acc.entry("valuation", cls, Rat(0));
    Rng local = rng.fork(std::hash<std::string>{}(cls));
    for (long k = 0; k < count; ++k, ++fixtures) {
      const Polytope p = random_polytope(local, n, 3);
      std::vector<Vec> probes;
      for (int j = 0; j < 6; ++j) probes.push_back(random_nonzero(local, n, -3, 3, 4));
      const Json tag = fixture_tag(cls, k);
      const Vec y = local.rational_vec(n, -2, 2, 4);
      const Measures m = measures(p);
      const Rat z0 = (par.c1 - par.c2) * m.v0 + par.c5 * m.vn;
      check_transport_law<Polytope>(acc, tc, z, p, translate(p, y), y, {Post::AddLin, z0},
                                    probes, tag);
      const Mat phi = random_unimodular(local, n);
      check_sln_law<Polytope>(acc, sln, z, p, apply_map(p, phi), mat_transpose(phi), probes,
                              tag);
      check_valuation_polytope(acc, val, z, split_polytope(local, p), probes, tag);
    }
  }
  return finish_suite("thm41", cfg.seed, fixtures, acc);
}

// ---------------------------------------------------------------------------
// thm42: the exponential polytope family c1 e^{sigma h_P} + c2 e^{-sigma
// h_{-P}} + c3 LP(sigma x), translation-covariant with factor e^{sigma x.y},
// SL(n)-covariant, and a valuation; residuals within 1e-12.
SuiteResult suite_thm42(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 6);
  long fixtures = 0;

  const std::vector<Rat> sigmas = {Rat(1), Rat(-1), Rat(2), Rat(-2), rat(1, 2)};
  for (const Rat& sigma : sigmas) {
    FamilyParams par;
    par.variant = FamilyVariant::Thm42;
    par.c1 = Rat(1);
    par.c2 = rat(1, 2);
    par.c3 = Rat(2);
    par.sigma = sigma;
    validate_params(par);
    const std::string cls = "sigma=" + rat_label(sigma);
    const std::function<Scalar(const Polytope&, const Vec&)> z =
        [par, prec = cfg.prec](const Polytope& p, const Vec& x) {
          return family_eval(par, FamilyInput{PolytopeArg{p, Rat(0)}}, x, prec);
        };
    LawEntry& tc = acc.entry("log_translation_covariant", cls, tol12(cfg));
    LawEntry& sln = acc.entry("sln_covariant", cls, tol12(cfg));
    LawEntry& val = acc.entry("valuation", cls, tol12(cfg));
    Rng local = rng.fork(std::hash<std::string>{}(cls));
    for (long k = 0; k < count; ++k, ++fixtures) {
      const Polytope p = random_polytope(local, n, 3);
      std::vector<Vec> probes;
      for (int j = 0; j < 4; ++j) probes.push_back(random_nonzero(local, n, -2, 2, 2));
      const Json tag = fixture_tag(cls, k);
      const Vec y = local.rational_vec(n, -2, 2, 4);
      check_transport_law<Polytope>(acc, tc, z, p, translate(p, y), y, {Post::MulExp, sigma},
                                    probes, tag);
      const Mat phi = random_unimodular(local, n);
      check_sln_law<Polytope>(acc, sln, z, p, apply_map(p, phi), mat_transpose(phi), probes,
                              tag);
      check_valuation_polytope(acc, val, z, split_polytope(local, p), probes, tag);
    }
  }
  return finish_suite("thm42", cfg.seed, fixtures, acc);
}

// ---------------------------------------------------------------------------
// thm52: the generalized conjugation family eps*sigma u*(x/eps) + c1 (point
// mass c2 delta_0 + c1 when eps = 0) passes Phi(tau_y u) = Phi u + l_{sigma y}
// and Phi(u + l_y) = tau_{eps y} Phi u, exactly, for 5 (eps, sigma) settings
// including eps < 0 and the degenerate eps = 0.
SuiteResult suite_thm52(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 12);
  long fixtures = 0;

  struct Setting {
    Rat eps, sigma;
  };
  const std::vector<Setting> settings = {
      {Rat(1), Rat(1)}, {Rat(-1), Rat(2)}, {rat(1, 2), Rat(-3)}, {Rat(3), rat(1, 2)},
      {Rat(0), Rat(0)}};
  for (const Setting& st : settings) {
    FamilyParams par;
    par.variant = FamilyVariant::Thm52;
    par.c1 = rat(1, 3);
    par.c2 = Rat(5);
    par.eps = st.eps;
    par.sigma = st.sigma;
    validate_params(par);
    const std::string cls = eps_sigma_label(st.eps, st.sigma);
    const std::function<Scalar(const PLConvexS&, const Vec&)> psi =
        [par, prec = cfg.prec](const PLConvexS& u, const Vec& x) {
          return family_eval(par, FamilyInput{u}, x, prec);
        };
    LawEntry& tc = acc.entry("translation_conjugation", cls, Rat(0));
    LawEntry& sln = acc.entry("sln_contravariant", cls, Rat(0));
    LawEntry& val = acc.entry("valuation", cls, Rat(0));
    Rng local = rng.fork(std::hash<std::string>{}(cls));
    for (long k = 0; k < count; ++k, ++fixtures) {
      const PLConvexS u = random_plconvexs(local, n);
      std::vector<Vec> probes = random_probes(local, n, 8, -3, 3, 4);
      probes.push_back(vzero(n));  // the point-mass branch only shows at 0
      const Json tag = fixture_tag(cls, k);
      const Vec y = local.rational_vec(n, -2, 2, 4);
      check_transport_law<PLConvexS>(acc, tc, psi, u, translate(u, y), y,
                                     {Post::AddLin, st.sigma}, probes, tag);
      check_transport_law<PLConvexS>(acc, tc, psi, u, add_linear(u, y), y,
                                     {Post::ShiftArg, st.eps}, probes, tag);
      const Mat phi = random_unimodular(local, n);
      check_sln_law<PLConvexS>(acc, sln, psi, u, compose_inverse(u, phi), mat_transpose(phi),
                               probes, tag);
      check_valuation_split<PLConvexS>(acc, val, kIdentS, psi, split_pair_s(local, u), probes,
                                       tag);
    }
  }
  return finish_suite("thm52", cfg.seed, fixtures, acc);
}

// ---------------------------------------------------------------------------
// thm59: the generalized log-conjugation family c1 e^{eps sigma u*(x/eps)} +
// c2 L(e^{-eps sigma u})(sigma x) passes Phi(tau_y u) = e^{l_{sigma y}} Phi u
// and Phi(u + l_y) = tau_{eps y} Phi u; c2 != 0 requires eps*sigma > 0.
SuiteResult suite_thm59(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 6);
  long fixtures = 0;

  struct Setting {
    Rat eps, sigma, c1, c2;
  };
  const std::vector<Setting> settings = {
      {Rat(1), Rat(1), Rat(1), Rat(1)},    {Rat(2), rat(1, 2), rat(1, 2), Rat(2)},
      {Rat(-1), Rat(1), Rat(1), Rat(0)},   {Rat(1), Rat(-2), Rat(3), Rat(0)},
      {Rat(0), Rat(1), Rat(1), Rat(0)}};
  for (const Setting& st : settings) {
    FamilyParams par;
    par.variant = FamilyVariant::Thm59;
    par.c1 = st.c1;
    par.c2 = st.c2;
    par.eps = st.eps;
    par.sigma = st.sigma;
    validate_params(par);
    const bool exact = st.c2 == 0;  // pure exponential-form values
    const Rat tol = exact ? Rat(0) : tol9(cfg);
    const std::string cls = eps_sigma_label(st.eps, st.sigma) + " " +
                            params_label({st.c1, st.c2});
    const std::function<Scalar(const PLConvexS&, const Vec&)> psi =
        [par, prec = cfg.prec](const PLConvexS& u, const Vec& x) {
          return family_eval(par, FamilyInput{u}, x, prec);
        };
    LawEntry& laws = acc.entry("laplace_laws", cls, tol);
    LawEntry& sln = acc.entry("sln_contravariant", cls, tol);
    LawEntry& val = acc.entry("valuation", cls, tol);
    Rng local = rng.fork(std::hash<std::string>{}(cls));
    for (long k = 0; k < count; ++k, ++fixtures) {
      const PLConvexS u = random_plconvexs(local, n);
      const std::vector<Vec> probes = random_probes(local, n, 4, -2, 2, 2);
      const Json tag = fixture_tag(cls, k);
      const Vec y = local.rational_vec(n, -1, 1, 4);
      check_transport_law<PLConvexS>(acc, laws, psi, u, translate(u, y), y,
                                     {Post::MulExp, st.sigma}, probes, tag);
      check_transport_law<PLConvexS>(acc, laws, psi, u, add_linear(u, y), y,
                                     {Post::ShiftArg, st.eps}, probes, tag);
      const Mat phi = random_unimodular(local, n);
      check_sln_law<PLConvexS>(acc, sln, psi, u, compose_inverse(u, phi), mat_transpose(phi),
                               probes, tag);
      check_valuation_split<PLConvexS>(acc, val, kIdentS, psi, split_pair_s(local, u), probes,
                                       tag, /*exact_multiset=*/exact);
    }
  }
  return finish_suite("thm59", cfg.seed, fixtures, acc);
}

// ---------------------------------------------------------------------------
// duality-thm61-64: the dual-side families. Identity-plus-constant passes the
// translation homomorphism; cf passes it exactly in the exponent; c1/f +
// c2 L(f-polar) passes it within 1e-9. dual_route cross-checks the dualized
// handles against the closed forms (the two-route consistency check).
SuiteResult suite_duality(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 15);
  const long lc_count = pick(cfg.count, 6);
  long fixtures = 0;

  // Identity plus constant on convex functions (exact).
  {
    const Rat c(3);
    const std::function<Scalar(const PLConvexS&, const Vec&)> psi =
        [c, prec = cfg.prec](const PLConvexS& u, const Vec& x) {
          return dual_family_eval(DualVariant::IdC, c, Rat(0), DualInput{u}, x, prec);
        };
    LawEntry& hom = acc.entry("homomorphism", "convex_fn", Rat(0));
    LawEntry& sln = acc.entry("sln_covariant", "convex_fn", Rat(0));
    LawEntry& val = acc.entry("valuation", "convex_fn", Rat(0));
    Rng local = rng.fork(0x61);
    for (long k = 0; k < count; ++k, ++fixtures) {
      const PLConvexS u = random_plconvexs(local, n);
      const std::vector<Vec> probes = random_probes(local, n, 8, -3, 3, 4);
      const Json tag = fixture_tag("convex_fn", k);
      const Vec y = local.rational_vec(n, -2, 2, 4);
      check_transport_law<PLConvexS>(acc, hom, psi, u, translate(u, y), y,
                                     {Post::ShiftArg, Rat(1)}, probes, tag);
      check_transport_law<PLConvexS>(acc, hom, psi, u, add_linear(u, y), y,
                                     {Post::AddLin, Rat(1)}, probes, tag);
      const Mat phi = random_unimodular(local, n);
      check_sln_law<PLConvexS>(acc, sln, psi, u, compose_inverse(u, phi), *mat_inverse(phi),
                               probes, tag);
      check_valuation_split<PLConvexS>(acc, val, kIdentS, psi, split_pair_s(local, u), probes,
                                       tag);
    }
  }

  // The same law set through the dualized-handle route: conjugation first,
  // then the Legendre transform — the identity, by the involution.
  {
    TransformHandle h;
    h.transform = "legendre";
    const TransformHandle hd = dualize(h);
    const std::function<Scalar(const PLConvexS&, const Vec&)> psi =
        [hd, prec = cfg.prec](const PLConvexS& u, const Vec& x) {
          return transform_apply(hd, DualInput{u}, x, prec);
        };
    LawEntry& hom = acc.entry("homomorphism", "dualized_legendre", Rat(0));
    LawEntry& route = acc.entry("dual_route", "identity", Rat(0));
    Rng local = rng.fork(0x62);
    for (long k = 0; k < 8; ++k, ++fixtures) {
      const PLConvexS u = random_plconvexs(local, n);
      const std::vector<Vec> probes = random_probes(local, n, 8, -3, 3, 4);
      const Json tag = fixture_tag("dualized_legendre", k);
      const Vec y = local.rational_vec(n, -2, 2, 4);
      check_transport_law<PLConvexS>(acc, hom, psi, u, translate(u, y), y,
                                     {Post::ShiftArg, Rat(1)}, probes, tag);
      check_transport_law<PLConvexS>(acc, hom, psi, u, add_linear(u, y), y,
                                     {Post::AddLin, Rat(1)}, probes, tag);
      for (const Vec& x : probes) {
        const Scalar lhs = psi(u, x);
        const Scalar rhs = fn_value(u, x);
        acc.record(route, lhs, rhs,
                   [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
    }
  }

  // cf on log-concave inputs (exact in the exponent).
  {
    const Rat c(2);
    const std::function<Scalar(const LogConcaveFn&, const Vec&)> psi =
        [c, prec = cfg.prec](const LogConcaveFn& f, const Vec& x) {
          return dual_family_eval(DualVariant::ScaleC, c, Rat(0), DualInput{f}, x, prec);
        };
    LawEntry& hom = acc.entry("homomorphism_log", "logconcave_scale", Rat(0));
    LawEntry& sln = acc.entry("sln_covariant", "logconcave_scale", Rat(0));
    LawEntry& val = acc.entry("valuation", "logconcave_scale", Rat(0));
    Rng local = rng.fork(0x63);
    for (long k = 0; k < count; ++k, ++fixtures) {
      const PLConvexS u = random_plconvexs(local, n);
      const LogConcaveFn f = make_logconcave_s(u);
      const std::vector<Vec> probes = random_probes(local, n, 8, -3, 3, 4);
      const Json tag = fixture_tag("logconcave_scale", k);
      const Vec y = local.rational_vec(n, -2, 2, 4);
      check_transport_law<LogConcaveFn>(acc, hom, psi, f, translate(f, y), y,
                                        {Post::ShiftArg, Rat(1)}, probes, tag);
      check_transport_law<LogConcaveFn>(acc, hom, psi, f, mul_exp_linear(f, y), y,
                                        {Post::MulExp, Rat(-1)}, probes, tag);
      const Mat phi = random_unimodular(local, n);
      check_sln_law<LogConcaveFn>(acc, sln, psi, f, compose_inverse(f, phi), *mat_inverse(phi),
                                  probes, tag);
      check_valuation_lc<LogConcaveFn>(acc, val, kIdentLC, psi, split_pair_s(local, u), probes,
                                       tag, /*exact_multiset=*/true);
    }
  }

  // c1/f + c2 L(f-polar) on positive log-concave inputs (within 1e-9), and
  // the dualized generalized family as an independent route to the same
  // values.
  {
    const Rat c1(1), c2(2);
    const std::function<Scalar(const LogConcaveFn&, const Vec&)> psi =
        [c1, c2, prec = cfg.prec](const LogConcaveFn& f, const Vec& x) {
          return dual_family_eval(DualVariant::Mix, c1, c2, DualInput{f}, x, prec);
        };
    FamilyParams par;
    par.variant = FamilyVariant::Thm59;
    par.c1 = c1;
    par.c2 = c2;
    par.eps = Rat(1);
    par.sigma = Rat(1);
    validate_params(par);
    TransformHandle h;
    h.transform = "family";
    h.params = par;
    const TransformHandle hd = dualize(h);
    LawEntry& laws = acc.entry("laplace_laws", "logconcave_mix", tol9(cfg));
    LawEntry& sln = acc.entry("sln_covariant", "logconcave_mix", tol9(cfg));
    LawEntry& val = acc.entry("valuation", "logconcave_mix", tol9(cfg));
    LawEntry& route = acc.entry("dual_route", "logconcave_mix", tol9(cfg));
    Rng local = rng.fork(0x64);
    for (long k = 0; k < lc_count; ++k, ++fixtures) {
      const LogConcaveFn f = random_logconcave_f(local, n);
      const std::vector<Vec> probes = random_probes(local, n, 5, -2, 2, 2);
      const Json tag = fixture_tag("logconcave_mix", k);
      const Vec y = local.rational_vec(n, -1, 1, 4);
      check_transport_law<LogConcaveFn>(acc, laws, psi, f, translate(f, y), y,
                                        {Post::ShiftArg, Rat(1)}, probes, tag);
      check_transport_law<LogConcaveFn>(acc, laws, psi, f, mul_exp_linear(f, y), y,
                                        {Post::MulExp, Rat(1)}, probes, tag);
      const Mat phi = random_unimodular(local, n);
      check_sln_law<LogConcaveFn>(acc, sln, psi, f, compose_inverse(f, phi), *mat_inverse(phi),
                                  probes, tag);
      for (const Vec& x : probes) {
        const Scalar lhs = transform_apply(hd, DualInput{f}, x, cfg.prec);
        const Scalar rhs = psi(f, x);
        acc.record(route, lhs, rhs,
                   [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
      // Valuation on the positive class: polar images of a hyperplane split
      // pair. The polar swaps the lattice, and the pointwise min of the two
      // conjugates is again convex, so the image pair splits in class.
      const PLConvexS u = random_plconvexs(local, n);
      check_valuation_lc<LogConcaveFn>(acc, val, kPolar, psi, split_pair_s(local, u), probes,
                                       tag, /*exact_multiset=*/false);
    }
  }
  return finish_suite("duality-thm61-64", cfg.seed, fixtures, acc);
}

// ---------------------------------------------------------------------------
// dlist: the D1..D14 identity list for the Legendre transform.
SuiteResult suite_dlist(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 30);
  long fixtures = 0;

  LawEntry& d1 = acc.entry("D1", "split", Rat(0));
  LawEntry& d2 = acc.entry("D2", "random", Rat(0));
  LawEntry& d3 = acc.entry("D3", "random", Rat(0));
  LawEntry& d4 = acc.entry("D4", "random", Rat(0));
  LawEntry& d5 = acc.entry("D5", "random", Rat(0));
  LawEntry& d6 = acc.entry("D6", "random", Rat(0));
  LawEntry& d7 = acc.entry("D7", "random", Rat(0));
  LawEntry& d9 = acc.entry("D9", "roundtrip", Rat(0));
  LawEntry& d10 = acc.entry("D10", "roundtrip", Rat(0));
  LawEntry& d11 = acc.entry("D11", "order", Rat(0));
  LawEntry& d12 = acc.entry("D12", "split", Rat(0));
  LawEntry& d13 = acc.entry("D13", "random", Rat(0));
  LawEntry& d14 = acc.entry("D14", "polytope", Rat(0));

  const std::vector<Rat> lambdas = {Rat(2), Rat(-1), rat(1, 2), rat(-3, 2), Rat(3)};
  const std::vector<Rat> pos_lambdas = {Rat(2), rat(1, 2), Rat(3), rat(5, 2)};

  for (long k = 0; k < count; ++k, ++fixtures) {
    const PLConvexS u = random_plconvexs(rng, n);
    const std::vector<Vec> probes = random_probes(rng, n, 8, -3, 3, 4);
    const Json tag = fixture_tag("random", k);
    const PLConvexF cu = conjugate(u);
    const Vec y = rng.rational_vec(n, -2, 2, 4);
    const Rat t = rng.rational(-2, 2, 4);

    // D3/D4: translation conjugation pair.
    check_transport_law<PLConvexF>(acc, d3, kValueF, cu, conjugate(translate(u, y)), y,
                                   {Post::AddLin, Rat(1)}, probes, tag);
    check_transport_law<PLConvexF>(acc, d4, kValueF, cu, conjugate(add_linear(u, y)), y,
                                   {Post::ShiftArg, Rat(1)}, probes, tag);

    // D2: SL(n) contravariance.
    const Mat phi = random_unimodular(rng, n);
    check_sln_law<PLConvexF>(acc, d2, kValueF, cu, conjugate(compose_inverse(u, phi)),
                             mat_transpose(phi), probes, tag);

    // D5: (u + t)* = u* - t.
    {
      const PLConvexF lhsF = conjugate(add_const(u, t));
      for (const Vec& x : probes) {
        const Scalar lhs = fn_value(lhsF, x);
        const Scalar rhs = scalar_add(fn_value(cu, x), scalar_exact(-t), acc.prec());
        acc.record(d5, lhs, rhs, [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
    }

    // D6: (u o lambda)* = u* o (1/lambda), lambda != 0 (negative included).
    {
      const Rat lam = lambdas[static_cast<std::size_t>(k) % lambdas.size()];
      const PLConvexF lhsF = conjugate(scale_arg(u, lam));
      for (const Vec& x : probes) {
        const Scalar lhs = fn_value(lhsF, x);
        const Scalar rhs = fn_value(cu, vscale(1 / lam, x));
        acc.record(d6, lhs, rhs, [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
    }

    // D7: (lambda u)* = lambda (u* o (1/lambda)); positive dilations only,
    // value scaling with lambda < 0 leaves the convex class.
    {
      const Rat lam = pos_lambdas[static_cast<std::size_t>(k) % pos_lambdas.size()];
      const PLConvexF lhsF = conjugate(scale_val(u, lam));
      for (const Vec& x : probes) {
        const Scalar lhs = fn_value(lhsF, x);
        const Scalar rhs = scalar_mul_rat(fn_value(cu, vscale(1 / lam, x)), lam);
        acc.record(d7, lhs, rhs, [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
    }

    // D9/D10: bijection and involution. Structural equality plus pointwise
    // agreement of the double conjugate.
    {
      const PLConvexF v = random_plconvexf(rng, n);
      const PLConvexF back = conjugate(conjugate(v));
      acc.record(d9, scalar_exact(Rat(back == v ? 0 : 1)), scalar_exact(Rat(0)),
                 [&] { return Json{{"fixture", tag}, {"kind", "roundtrip_f"}}; });
      const PLConvexS uu = conjugate(cu);
      acc.record(d10, scalar_exact(Rat(uu == u ? 0 : 1)), scalar_exact(Rat(0)),
                 [&] { return Json{{"fixture", tag}, {"kind", "roundtrip_s"}}; });
      for (const Vec& x : probes) {
        const Scalar lhs = fn_value(uu, x);
        const Scalar rhs = fn_value(u, x);
        acc.record(d10, lhs, rhs, [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
    }

    // D11: order reversal. (a) comparable pairs: u <= v forces u* >= v*
    // pointwise. (b) incomparable pairs must stay incomparable after
    // conjugation, witnessed along +/-y where the linear gap changes sign.
    const SplitPairS pair = split_pair_s(rng, u);
    {
      const PLConvexS v = add_const(u, rat_abs(t) + rat(1, 4));
      const PLConvexF cv = conjugate(v);
      const PLConvexF c1 = conjugate(pair.u1);
      for (const Vec& x : probes) {
        const Rat a = eval(cu, x), b = eval(cv, x), c = eval(c1, x);
        const bool ok = a >= b && a >= c;
        acc.record(d11, scalar_exact(Rat(ok ? 0 : 1)), scalar_exact(Rat(0)),
                   [&] { return probe_witness(tag, x, scalar_exact(a), scalar_exact(b),
                                              acc.prec()); });
      }
      bool y_zero = true;
      for (const Rat& q : y)
        if (q != 0) y_zero = false;
      const PLConvexS w = translate(u, y);
      if (!y_zero) {
        const PLConvexF cw = conjugate(w);
        std::vector<Vec> dirs = probes;
        dirs.push_back(y);
        dirs.push_back(vneg(y));
        bool above = false, below = false;
        for (const Vec& x : dirs) {
          const Rat diff = eval(cu, x) - eval(cw, x);
          if (diff > 0) above = true;
          if (diff < 0) below = true;
        }
        acc.record(d11, scalar_exact(Rat(above && below ? 0 : 1)), scalar_exact(Rat(0)),
                   [&] { return Json{{"fixture", tag}, {"kind", "incomparable"}}; });
      }
    }

    // D12: conjugation swaps join and meet on split pairs.
    {
      const JoinMeetS jm = join_meet(pair.u1, pair.u2);
      if (!jm.min_is_convex || !jm.join) throw DomainError("split pair left its class");
      const PLConvexF cjoin = conjugate(*jm.join);
      const PLConvexF cmeet = conjugate(jm.meet);
      const JoinMeetF jf = join_meet(conjugate(pair.u1), conjugate(pair.u2));
      if (!jf.meet) throw DomainError("conjugate pair lost its meet");
      for (const Vec& x : probes) {
        const Scalar l1 = fn_value(cjoin, x), r1 = fn_value(*jf.meet, x);
        acc.record(d12, l1, r1, [&] { return probe_witness(tag, x, l1, r1, acc.prec()); });
        const Scalar l2 = fn_value(cmeet, x), r2 = fn_value(jf.join, x);
        acc.record(d12, l2, r2, [&] { return probe_witness(tag, x, l2, r2, acc.prec()); });
      }
    }

    // D1: the valuation identity itself.
    check_valuation_split<PLConvexF>(acc, d1, kConjugate, kValueF, pair, probes, tag);

    // D13: conjugation turns infimal convolution into addition.
    {
      const PLConvexS v = random_plconvexs(rng, n);
      const PLConvexF csum = conjugate(inf_convolution(u, v));
      const PLConvexF expect = add(cu, conjugate(v));
      for (const Vec& x : probes) {
        const Scalar lhs = fn_value(csum, x);
        const Scalar rhs = fn_value(expect, x);
        acc.record(d13, lhs, rhs, [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
    }

    // D14: the conjugate of an indicator is the support function.
    {
      const Polytope p = random_polytope(rng, n, 2);
      const PLConvexF hp = conjugate(indicator_fn(p));
      for (const Vec& x : probes) {
        const Scalar lhs = fn_value(hp, x);
        const Scalar rhs = scalar_exact(support(p, x));
        acc.record(d14, lhs, rhs, [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
    }
  }

  // D8: epi-convergence to pointwise convergence, certified on a schedule.
  continuity_legendre_translate(acc, "D8", rng, n, 2);
  fixtures += 2;
  return finish_suite("dlist", cfg.seed, fixtures, acc);
}

// ---------------------------------------------------------------------------
// laplace-dlist: the D1..D8 list for the Laplace transform on log-concave
// functions of kind S, within 1e-9 at 128-bit computation.
SuiteResult suite_laplace_dlist(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 10);
  long fixtures = 0;

  const std::function<Scalar(const LogConcaveFn&, const Vec&)> psi =
      [prec = cfg.prec](const LogConcaveFn& f, const Vec& x) {
        return scalar_real(laplace_logconcave(f, x, prec));
      };
  LawEntry& d1 = acc.entry("D1", "split", tol9(cfg));
  LawEntry& d2 = acc.entry("D2", "random", tol9(cfg));
  LawEntry& d3 = acc.entry("D3", "random", tol9(cfg));
  LawEntry& d4 = acc.entry("D4", "random", tol9(cfg));
  LawEntry& d5 = acc.entry("D5", "random", tol9(cfg));
  LawEntry& d6 = acc.entry("D6", "random", tol9(cfg));
  LawEntry& d7 = acc.entry("D7", "random", tol9(cfg));

  const std::vector<Rat> lambdas = {Rat(2), Rat(-1), rat(1, 2), rat(-3, 2)};
  const std::vector<Rat> weights = {Rat(0), rat(1, 2), Rat(3)};

  for (long k = 0; k < count; ++k, ++fixtures) {
    const PLConvexS u = random_plconvexs(rng, n);
    const LogConcaveFn f = make_logconcave_s(u);
    const std::vector<Vec> probes = random_probes(rng, n, 4, -2, 2, 2);
    const Json tag = fixture_tag("random", k);
    const Vec y = rng.rational_vec(n, -1, 1, 4);
    const Rat t = rng.rational(-2, 2, 4);

    check_transport_law<LogConcaveFn>(acc, d3, psi, f, translate(f, y), y,
                                      {Post::MulExp, Rat(1)}, probes, tag);
    check_transport_law<LogConcaveFn>(acc, d4, psi, f, mul_exp_linear(f, y), y,
                                      {Post::ShiftArg, Rat(1)}, probes, tag);
    const Mat phi = random_unimodular(rng, n);
    check_sln_law<LogConcaveFn>(acc, d2, psi, f, compose_inverse(f, phi), mat_transpose(phi),
                                probes, tag);
    check_valuation_lc<LogConcaveFn>(acc, d1, kIdentLC, psi, split_pair_s(rng, u), probes, tag,
                                     /*exact_multiset=*/false);

    // D5: L(e^{-t} f) = e^{-t} L f.
    {
      const LogConcaveFn g = mul_exp_const(f, t);
      for (const Vec& x : probes) {
        const Scalar lhs = psi(g, x);
        const Scalar rhs = scalar_mul_exp(psi(f, x), -t, acc.prec());
        acc.record(d5, lhs, rhs, [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
    }

    // D6: L(f o lambda) = |lambda|^{-n} (L f) o (1/lambda), lambda != 0.
    {
      const Rat lam = lambdas[static_cast<std::size_t>(k) % lambdas.size()];
      Mat phi_inv = mat_identity(n);
      for (int i = 0; i < n; ++i) phi_inv[static_cast<std::size_t>(i)]
                                          [static_cast<std::size_t>(i)] = 1 / lam;
      const LogConcaveFn g = compose_inverse(f, phi_inv);  // f(lambda .)
      Rat jac(1);
      const Rat alam = rat_abs(lam);
      for (int i = 0; i < n; ++i) jac /= alam;
      for (const Vec& x : probes) {
        const Scalar lhs = psi(g, x);
        const Scalar rhs = scalar_mul_rat(psi(f, vscale(1 / lam, x)), jac);
        acc.record(d6, lhs, rhs, [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
    }

    // D7: L(lambda f) = lambda L f for lambda >= 0, via the weighted
    // integrator (lambda = 0 included).
    {
      const Rat lam = weights[static_cast<std::size_t>(k) % weights.size()];
      for (const Vec& x : probes) {
        const Scalar lhs = scalar_real(laplace_logconcave(f, x, cfg.prec, lam));
        const Scalar rhs = scalar_mul_rat(psi(f, x), lam);
        acc.record(d7, lhs, rhs, [&] { return probe_witness(tag, x, lhs, rhs, acc.prec()); });
      }
    }
  }

  continuity_laplace_translate(acc, "D8", rng, n, 1);
  fixtures += 1;
  return finish_suite("laplace-dlist", cfg.seed, fixtures, acc);
}

// ---------------------------------------------------------------------------
// cauchy: the two one-dimensional functional-equation solution families, on
// the full sign-constrained grid, plus perturbed constants that must break.
SuiteResult suite_cauchy(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  check_cauchy_linear(acc, "linear", {Rat(1), Rat(0), Rat(2), Rat(5), Rat(1)}, false);
  check_cauchy_exponential(acc, "exponential", {Rat(1), Rat(-1), Rat(1), Rat(1), Rat(1)},
                           false);
  check_cauchy_linear(acc, "linear_perturbed", {Rat(1), Rat(0), Rat(2), Rat(5), rat(11, 10)},
                      true);
  check_cauchy_exponential(acc, "exponential_perturbed",
                           {Rat(1), Rat(-1), Rat(1), rat(11, 10), Rat(1)}, true);
  return finish_suite("cauchy", cfg.seed, 4, acc);
}

// ---------------------------------------------------------------------------
// continuity: the finite-index convergence certificates for both transforms.
SuiteResult suite_continuity(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long fx = std::min<long>(pick(cfg.count, 3), 8);
  const long lap = std::min<long>(pick(cfg.count, 2), 5);
  continuity_legendre_translate(acc, "legendre_translate_limit", rng, n, static_cast<int>(fx));
  continuity_legendre_staircase(acc, "legendre_staircase_limit", n);
  continuity_legendre_scale(acc, "legendre_scale_limit", rng, n, static_cast<int>(fx));
  continuity_laplace_translate(acc, "laplace_translate_limit", rng, n, static_cast<int>(lap));
  return finish_suite("continuity", cfg.seed, 2 * fx + lap + 1, acc);
}

// ---------------------------------------------------------------------------
// weird-counterexample: the sublevel-support average passes the first
// translation law (on minimum-zero fixtures), SL(n) contravariance, and the
// valuation law, but must FAIL the linear-to-shift law — the suite passes iff
// that failure occurs and is witnessed.
SuiteResult suite_weird(const SuiteConfig& cfg) {
  CheckAccum acc(cfg.prec);
  Rng rng(cfg.seed);
  const int n = cfg.dim;
  const long count = pick(cfg.count, 12);
  long fixtures = 0;

  const std::function<Scalar(const PLConvexS&, const Vec&)> psi =
      [prec = cfg.prec](const PLConvexS& u, const Vec& x) {
        return weird_valuation(u, x, prec);
      };
  LawEntry& shift = acc.entry("translation_conjugation_shift", "normalized", tol9(cfg));
  LawEntry& lin =
      acc.entry("translation_conjugation_linear", "normalized", tol9(cfg), true);
  LawEntry& sln = acc.entry("sln_contravariant", "normalized", tol9(cfg));
  LawEntry& val = acc.entry("valuation", "split", tol9(cfg));

  for (long k = 0; k < count; ++k, ++fixtures) {
    // The pinned fixture goes first so the expected violation is found with a
    // deterministic witness: the cube indicator, shifted by e1, probed at e1.
    const bool pinned = (k == 0);
    const PLConvexS u =
        pinned ? indicator_fn(cube01(n)) : normalize_min_zero(random_plconvexs(rng, n));
    Vec e1 = vzero(n);
    e1[0] = 1;
    const Vec y = pinned ? e1 : rng.rational_vec(n, -1, 1, 4);
    std::vector<Vec> probes = random_probes(rng, n, 5, -2, 2, 2);
    probes.insert(probes.begin(), e1);
    const Json tag = pinned ? Json{{"class", "pinned_cube"}, {"index", k}}
                            : fixture_tag("normalized", k);

    check_transport_law<PLConvexS>(acc, shift, psi, u, translate(u, y), y,
                                   {Post::AddLin, Rat(1)}, probes, tag);
    check_transport_law<PLConvexS>(acc, lin, psi, u, add_linear(u, y), y,
                                   {Post::ShiftArg, Rat(1)}, probes, tag);
    const Mat phi = random_unimodular(rng, n);
    check_sln_law<PLConvexS>(acc, sln, psi, u, compose_inverse(u, phi), mat_transpose(phi),
                             probes, tag);
    check_valuation_split<PLConvexS>(acc, val, kIdentS, psi, split_pair_s(rng, u), probes,
                                     tag);
  }
  return finish_suite("weird-counterexample", cfg.seed, fixtures, acc);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "legendre-thm11", "logpolar-thm12", "laplace-thm13", "thm41",
      "thm42",          "thm52",          "thm59",         "duality-thm61-64",
      "dlist",          "laplace-dlist",  "cauchy",        "continuity",
      "weird-counterexample"};
  return names;
}

bool is_suite_name(const std::string& name) {
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (cfg.dim < 1 || cfg.dim > 4) throw InputError("suite dimension must be 1..4");
  if (name == "legendre-thm11") return suite_legendre_thm11(cfg);
  if (name == "logpolar-thm12") return suite_logpolar_thm12(cfg);
  if (name == "laplace-thm13") return suite_laplace_thm13(cfg);
  if (name == "thm41") return suite_thm41(cfg);
  if (name == "thm42") return suite_thm42(cfg);
  if (name == "thm52") return suite_thm52(cfg);
  if (name == "thm59") return suite_thm59(cfg);
  if (name == "duality-thm61-64") return suite_duality(cfg);
  if (name == "dlist") return suite_dlist(cfg);
  if (name == "laplace-dlist") return suite_laplace_dlist(cfg);
  if (name == "cauchy") return suite_cauchy(cfg);
  if (name == "continuity") return suite_continuity(cfg);
  if (name == "weird-counterexample") return suite_weird(cfg);
  throw InputError("unknown suite: " + name);
}

}  // namespace convexval
