#include "tr/ball.hpp"

#include <cassert>
#include <cstdlib>

namespace convexval {

mpfr_prec_t default_precision() {
  if (const char* env = std::getenv("CONVEXVAL_PRECISION_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 64 && v <= 16384) return static_cast<mpfr_prec_t>(v);
  }
  return 128;
}

Rat mpfr_to_rat(mpfr_srcptr x) {
  assert(mpfr_number_p(x));
  if (mpfr_zero_p(x)) return Rat(0);
  mpz_class z;
  const mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), x);
  Rat r(z);
  if (e >= 0) {
    mpz_class num = r.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    r = Rat(num);
  } else {
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    r = Rat(z) / Rat(den);
  }
  r.canonicalize();
  return r;
}

Ball::Ball(mpfr_prec_t prec) : mid_(prec), rad_(rad_prec()) {}

void Ball::absorb_half_ulp(int ternary) {
  if (ternary == 0 || mpfr_zero_p(mid_.get())) return;
  Mp ulp(rad_prec());
  mpfr_set_ui_2exp(ulp.get(), 1,
                   mpfr_get_exp(mid_.get()) - static_cast<mpfr_exp_t>(prec()) - 1, MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
}

Ball Ball::exact(const Rat& q, mpfr_prec_t prec) {
  Ball b(prec);
  const int t = mpfr_set_q(b.mid_.get(), q.get_mpq_t(), MPFR_RNDN);
  if (t != 0) {
    const Rat err = rat_abs(mpfr_to_rat(b.mid_.get()) - q);
    mpfr_set_q(b.rad_.get(), err.get_mpq_t(), MPFR_RNDU);
  }
  return b;
}

Ball Ball::exp_of(const Rat& e, mpfr_prec_t prec) { return Ball::exact(e, prec).exp(); }

Ball Ball::operator+(const Ball& o) const {
  Ball r(prec());
  const int t = mpfr_add(r.mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
  r.absorb_half_ulp(t);
  return r;
}

Ball Ball::operator-(const Ball& o) const { return *this + o.neg(); }

Ball Ball::neg() const {
  Ball r = *this;
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

Ball Ball::operator*(const Ball& o) const {
  Ball r(prec());
  const int t = mpfr_mul(r.mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  // rad = |a| rb + |b| ra + ra rb, all upward.
  Mp aa(rad_prec()), ab(rad_prec()), term(rad_prec());
  mpfr_abs(aa.get(), mid_.get(), MPFR_RNDU);
  mpfr_abs(ab.get(), o.mid_.get(), MPFR_RNDU);
  mpfr_mul(term.get(), aa.get(), o.rad_.get(), MPFR_RNDU);
  mpfr_set(r.rad_.get(), term.get(), MPFR_RNDU);
  mpfr_mul(term.get(), ab.get(), rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
  mpfr_mul(term.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
  r.absorb_half_ulp(t);
  return r;
}

Ball Ball::mul_rat(const Rat& c) const { return *this * Ball::exact(c, prec()); }

Ball Ball::add_rat(const Rat& c) const { return *this + Ball::exact(c, prec()); }

Ball Ball::exp() const {
  Ball r(prec());
  const int t = mpfr_exp(r.mid_.get(), mid_.get(), MPFR_RNDN);
  // sup of exp over the enclosure times the radius.
  Mp hi(rad_prec());
  mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  mpfr_mul(hi.get(), hi.get(), rad_.get(), MPFR_RNDU);
  mpfr_set(r.rad_.get(), hi.get(), MPFR_RNDU);
  r.absorb_half_ulp(t);
  return r;
}

bool Ball::exact_zero() const { return mpfr_zero_p(mid_.get()) && mpfr_zero_p(rad_.get()); }

Rat Ball::abs_upper() const { return rat_abs(mid_rat()) + rad_rat(); }

Rat Ball::abs_lower() const {
  const Rat v = rat_abs(mid_rat()) - rad_rat();
  return v > 0 ? v : Rat(0);
}

Rat Ball::diff_abs_upper(const Ball& o) const {
  return rat_abs(mid_rat() - o.mid_rat()) + rad_rat() + o.rad_rat();
}

void Ball::widen(const Rat& extra) {
  assert(extra >= 0);
  Mp e(rad_prec());
  mpfr_set_q(e.get(), extra.get_mpq_t(), MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU);
}

std::string Ball::mid_decimal(int significant) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RNe", significant - 1, mid_.get());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Ball::rad_decimal() const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.2RUe", rad_.get());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Scalar scalar_exact(Rat q) {
  Scalar s;
  s.kind = Scalar::Kind::Exact;
  s.exact = std::move(q);
  return s;
}

Scalar scalar_exp_form(Rat coef, Rat expo) {
  if (coef == 0) return scalar_exact(Rat(0));
  Scalar s;
  s.kind = Scalar::Kind::ExpForm;
  s.coef = std::move(coef);
  s.expo = std::move(expo);
  return s;
}

Scalar scalar_real(Ball b) {
  Scalar s;
  s.kind = Scalar::Kind::Real;
  s.real = std::move(b);
  return s;
}

Scalar scalar_inf() {
  Scalar s;
  s.kind = Scalar::Kind::PlusInf;
  return s;
}

Ball scalar_to_ball(const Scalar& s, mpfr_prec_t prec) {
  switch (s.kind) {
    case Scalar::Kind::Exact:
      return Ball::exact(s.exact, prec);
    case Scalar::Kind::ExpForm:
      return Ball::exp_of(s.expo, prec).mul_rat(s.coef);
    case Scalar::Kind::Real:
      return *s.real;
    case Scalar::Kind::PlusInf:
      break;
  }
  throw DomainError("cannot convert infinite scalar to enclosure");
}

Scalar scalar_add(const Scalar& a, const Scalar& b, mpfr_prec_t prec) {
  if (a.kind == Scalar::Kind::PlusInf || b.kind == Scalar::Kind::PlusInf) return scalar_inf();
  if (a.kind == Scalar::Kind::Exact && b.kind == Scalar::Kind::Exact)
    return scalar_exact(a.exact + b.exact);
  if (a.kind == Scalar::Kind::ExpForm && b.kind == Scalar::Kind::ExpForm && a.expo == b.expo)
    return scalar_exp_form(a.coef + b.coef, a.expo);
  if (a.kind == Scalar::Kind::Exact && a.exact == 0) return b;
  if (b.kind == Scalar::Kind::Exact && b.exact == 0) return a;
  return scalar_real(scalar_to_ball(a, prec) + scalar_to_ball(b, prec));
}

Scalar scalar_mul_rat(const Scalar& a, const Rat& c) {
  switch (a.kind) {
    case Scalar::Kind::Exact:
      return scalar_exact(a.exact * c);
    case Scalar::Kind::ExpForm:
      return scalar_exp_form(a.coef * c, a.expo);
    case Scalar::Kind::Real:
      return scalar_real(a.real->mul_rat(c));
    case Scalar::Kind::PlusInf:
      if (c > 0) return scalar_inf();
      throw DomainError("cannot scale infinite scalar nonpositively");
  }
  throw DomainError("unreachable scalar kind");
}

Scalar scalar_mul_exp(const Scalar& a, const Rat& e, mpfr_prec_t prec) {
  switch (a.kind) {
    case Scalar::Kind::Exact:
      return scalar_exp_form(a.exact, e);
    case Scalar::Kind::ExpForm:
      return scalar_exp_form(a.coef, a.expo + e);
    case Scalar::Kind::Real:
      return scalar_real(*a.real * Ball::exp_of(e, prec));
    case Scalar::Kind::PlusInf:
      return scalar_inf();
  }
  throw DomainError("unreachable scalar kind");
}

Residual scalar_residual(const Scalar& l, const Scalar& r, mpfr_prec_t prec) {
  Residual res;
  res.upper = Rat(0);
  const bool li = l.kind == Scalar::Kind::PlusInf, ri = r.kind == Scalar::Kind::PlusInf;
  if (li || ri) {
    if (li && ri) {
      res.exact_zero = true;
      return res;
    }
    res.infinite_mismatch = true;
    return res;
  }
  if (l.kind == Scalar::Kind::Exact && r.kind == Scalar::Kind::Exact) {
    res.upper = rat_abs(l.exact - r.exact);
    res.exact_zero = res.upper == 0;
    return res;
  }
  if (l.kind == Scalar::Kind::ExpForm && r.kind == Scalar::Kind::ExpForm && l.expo == r.expo) {
    if (l.coef == r.coef) {
      res.exact_zero = true;
      return res;
    }
    res.upper = rat_abs(l.coef - r.coef) * Ball::exp_of(l.expo, prec).abs_upper();
    return res;
  }
  // Exact zero against a vanishing exp-form coefficient cannot occur: exp-form
  // construction collapses zero coefficients to exact zeros.
  res.upper = scalar_to_ball(l, prec).diff_abs_upper(scalar_to_ball(r, prec));
  res.exact_zero = res.upper == 0;
  return res;
}

Rat scalar_abs_lower(const Scalar& s, mpfr_prec_t prec) {
  switch (s.kind) {
    case Scalar::Kind::Exact:
      return rat_abs(s.exact);
    case Scalar::Kind::ExpForm:
    case Scalar::Kind::Real:
      return scalar_to_ball(s, prec).abs_lower();
    case Scalar::Kind::PlusInf:
      break;
  }
  throw DomainError("no magnitude for infinite scalar");
}

Json scalar_to_json(const Scalar& s, mpfr_prec_t prec) {
  Json j;
  switch (s.kind) {
    case Scalar::Kind::Exact: {
      j["kind"] = "exact";
      j["value"] = rat_to_string(s.exact);
      const Ball b = Ball::exact(s.exact, prec);
      j["decimal"] = b.mid_decimal(40);
      j["err_bound"] = b.rad_decimal();
      return j;
    }
    case Scalar::Kind::ExpForm: {
      j["kind"] = "exp_scaled";
      j["coef"] = rat_to_string(s.coef);
      j["exponent"] = rat_to_string(s.expo);
      const Ball b = scalar_to_ball(s, prec);
      j["value"] = b.mid_decimal(40);
      j["err_bound"] = b.rad_decimal();
      return j;
    }
    case Scalar::Kind::Real: {
      j["kind"] = "real";
      j["value"] = s.real->mid_decimal(40);
      j["err_bound"] = s.real->rad_decimal();
      return j;
    }
    case Scalar::Kind::PlusInf:
      j["kind"] = "infinite";
      return j;
  }
  return j;
}

}  // namespace convexval
