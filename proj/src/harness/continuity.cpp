#include "harness/continuity.hpp"

#include <cstdio>

#include "tr/transforms.hpp"

namespace convexval {

namespace {

const Rat kFinalTol(1, 1000000);

std::string rat_decimal(const Rat& q) {
  if (q == 0) return "0";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6e", rat_to_double(q));
  return buf;
}

// One schedule run: per-index max-over-probes residuals. Fails the entry on a
// residual increase or a final value above tolerance.
void record_schedule(LawEntry& e, const std::vector<Rat>& residuals, const Json& tag) {
  ++e.probes;
  bool mono = true;
  for (std::size_t i = 1; i < residuals.size(); ++i)
    if (residuals[i] > residuals[i - 1]) mono = false;
  const Rat fin = residuals.back();
  if (fin != 0) e.all_exact = false;
  if (fin > e.max_residual) e.max_residual = fin;
  if (!mono) e.monotone = false;
  if ((!mono || fin > e.tolerance) && !e.witness) {
    Json w;
    w["fixture"] = tag;
    Json sched = Json::array();
    for (const auto& r : residuals) sched.push_back(rat_decimal(r));
    w["schedule_residuals"] = sched;
    e.witness = w;
  }
}

Rat pow2_inv(int i) { return rat(1, 1L << i); }

}  // namespace

void continuity_legendre_translate(CheckAccum& acc, const std::string& law_name, Rng& rng,
                                   int n, int fixtures) {
  LawEntry& e = acc.entry(law_name, "schedule", kFinalTol);
  const std::vector<int> idx = {1, 2, 4, 8, 16, 20};
  Rng local = rng.fork(0x7431);
  for (int k = 0; k < fixtures; ++k) {
    const PLConvexS u = random_plconvexs(local, n);
    const Vec y = local.rational_vec(n, -1, 1, 4);
    const std::vector<Vec> probes = random_probes(local, n, 24, -1, 1, 4);
    const PLConvexF lim = conjugate(translate(u, y));
    std::vector<Rat> res;
    for (int i : idx) {
      Vec yi = y;
      yi[0] += pow2_inv(i);
      const PLConvexF vi = conjugate(translate(u, yi));
      Rat m(0);
      for (const Vec& x : probes) {
        const Residual r = law_residual(fn_value(vi, x), fn_value(lim, x), acc.prec());
        if (r.upper > m) m = r.upper;
      }
      res.push_back(m);
    }
    record_schedule(e, res, Json{{"class", "random"}, {"index", k}});
  }
}

void continuity_legendre_staircase(CheckAccum& acc, const std::string& law_name, int n) {
  LawEntry& e = acc.entry(law_name, "schedule", kFinalTol);
  const std::vector<int> idx = {1, 2, 4, 8, 16, 20};
  const PLConvexF ref = conjugate(staircase_fn(n, 40));
  std::vector<Vec> probes;
  for (int r = -6; r <= 6; ++r) {
    Vec x = vzero(n);
    x[0] = rat(r, 2);
    probes.push_back(x);
  }
  std::vector<Rat> res;
  for (int m : idx) {
    const PLConvexF vm = conjugate(staircase_fn(n, m));
    Rat mx(0);
    for (const Vec& x : probes) {
      const Residual r = law_residual(fn_value(vm, x), fn_value(ref, x), acc.prec());
      if (r.upper > mx) mx = r.upper;
    }
    res.push_back(mx);
  }
  record_schedule(e, res, Json{{"class", "staircase"}});
}

void continuity_legendre_scale(CheckAccum& acc, const std::string& law_name, Rng& rng, int n,
                               int fixtures) {
  LawEntry& e = acc.entry(law_name, "schedule", kFinalTol);
  // Deeper final index: the bound is Lip(u*) |x| 2^{-i} with Lip(u*) up to
  // the dom radius, so index 20 alone does not clear 1e-6.
  const std::vector<int> idx = {1, 2, 4, 8, 16, 24};
  Rng local = rng.fork(0x7432);
  for (int k = 0; k < fixtures; ++k) {
    // Min value 0 at the origin makes u* nondecreasing along rays, which
    // gives the monotone schedule.
    const PLConvexS u = normalize_min_zero(random_plconvexs(local, n));
    const std::vector<Vec> probes = random_probes(local, n, 24, -1, 1, 4);
    const PLConvexF lim = conjugate(u);
    std::vector<Rat> res;
    for (int i : idx) {
      const Rat lambda = 1 + pow2_inv(i);
      const PLConvexF vi = conjugate(scale_arg(u, lambda));
      Rat m(0);
      for (const Vec& x : probes) {
        const Residual r = law_residual(fn_value(vi, x), fn_value(lim, x), acc.prec());
        if (r.upper > m) m = r.upper;
      }
      res.push_back(m);
    }
    record_schedule(e, res, Json{{"class", "normalized_random"}, {"index", k}});
  }
}

void continuity_laplace_translate(CheckAccum& acc, const std::string& law_name, Rng& rng, int n,
                                  int fixtures) {
  LawEntry& e = acc.entry(law_name, "schedule", kFinalTol);
  const std::vector<int> idx = {1, 2, 4, 8, 16, 20};
  Rng local = rng.fork(0x7433);
  for (int k = 0; k < fixtures; ++k) {
    const LogConcaveFn f = random_logconcave_s(local, n);
    const Vec y = local.rational_vec(n, -1, 1, 4);
    const std::vector<Vec> probes = random_probes(local, n, 10, -1, 1, 4);
    const LogConcaveFn lim = translate(f, y);
    std::vector<Ball> limvals;
    for (const Vec& x : probes) limvals.push_back(laplace_logconcave(lim, x, acc.prec()));
    std::vector<Rat> res;
    for (int i : idx) {
      Vec yi = y;
      yi[0] += pow2_inv(i);
      const LogConcaveFn fi = translate(f, yi);
      Rat m(0);
      for (std::size_t j = 0; j < probes.size(); ++j) {
        const Ball bi = laplace_logconcave(fi, probes[j], acc.prec());
        const Residual r = law_residual(scalar_real(bi), scalar_real(limvals[j]), acc.prec());
        if (r.upper > m) m = r.upper;
      }
      res.push_back(m);
    }
    record_schedule(e, res, Json{{"class", "random"}, {"index", k}});
  }
}

}  // namespace convexval
