#include "harness/cauchy.hpp"

namespace convexval {

namespace {

// r, s in [0,2] step 1/2; t in [-s, 0] step 1/2.
template <class Fn>
void for_grid_triples(const Fn& fn) {
  for (long rr = 0; rr <= 4; ++rr)
    for (long ss = 0; ss <= 4; ++ss)
      for (long tt = -ss; tt <= 0; ++tt) fn(rat(rr, 2), rat(ss, 2), rat(tt, 2));
}

Json triple_tag(const Rat& r, const Rat& s, const Rat& t) {
  Json j;
  j["r"] = rat_to_json(r);
  j["s"] = rat_to_json(s);
  j["t"] = rat_to_json(t);
  return j;
}

}  // namespace

void check_cauchy_linear(CheckAccum& acc, const std::string& law_name,
                         const CauchyConstants& c, bool expect_violation) {
  if (!expect_violation && c.a1 - c.a2 + c.sigma != 0)
    throw InputError("linear grid constants need a1 - a2 + sigma = 0");
  LawEntry& e = acc.entry(law_name, "grid", Rat(0), expect_violation);
  for_grid_triples([&](const Rat& r, const Rat& s, const Rat& t) {
    const Scalar lhs =
        scalar_exact(c.a1 * s + c.b1 + c.a2 * r + c.b2 - c.sigma * t);
    const Scalar rhs =
        scalar_exact(c.a1 * (s + t) + c.b1 + c.a2 * (r - t) + c.b2);
    acc.record(e, lhs, rhs, [&] {
      return probe_witness(triple_tag(r, s, t), Vec{}, lhs, rhs, acc.prec());
    });
  });
}

void check_cauchy_exponential(CheckAccum& acc, const std::string& law_name,
                              const CauchyConstants& c, bool expect_violation) {
  if (c.sigma == 0) throw InputError("exponential grid constants need sigma != 0");
  if (!expect_violation && c.b1 + c.b2 != 0)
    throw InputError("exponential grid constants need b1 + b2 = 0");
  LawEntry& e = acc.entry(law_name, "grid", rat(1, 1000000000000L), expect_violation);
  for_grid_triples([&](const Rat& r, const Rat& s, const Rat& t) {
    const Scalar f1s = scalar_add(scalar_exp_form(c.a1, -c.sigma * s),
                                  scalar_exact(c.b1), acc.prec());
    const Scalar f2r = scalar_add(scalar_exp_form(c.a2, c.sigma * r),
                                  scalar_exact(c.b2), acc.prec());
    const Scalar lhs =
        scalar_mul_exp(scalar_add(f1s, f2r, acc.prec()), -c.sigma * t, acc.prec());
    const Scalar f1st = scalar_add(scalar_exp_form(c.a1, -c.sigma * (s + t)),
                                   scalar_exact(c.b1), acc.prec());
    const Scalar f2rt = scalar_add(scalar_exp_form(c.a2, c.sigma * (r - t)),
                                   scalar_exact(c.b2), acc.prec());
    const Scalar rhs = scalar_add(f1st, f2rt, acc.prec());
    acc.record(e, lhs, rhs, [&] {
      return probe_witness(triple_tag(r, s, t), Vec{}, lhs, rhs, acc.prec());
    });
  });
}

}  // namespace convexval
