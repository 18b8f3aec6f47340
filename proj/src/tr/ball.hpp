#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "core/json_io.hpp"

namespace convexval {

// Working precision in bits: CONVEXVAL_PRECISION_BITS when set and valid, else 128.
mpfr_prec_t default_precision();

// RAII mpfr scalar.
class Mp {
 public:
  explicit Mp(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mp(const Mp& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mp(Mp&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Mp& operator=(const Mp& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mp& operator=(Mp&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mp() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Exact value of a (finite) mpfr number as a rational.
Rat mpfr_to_rat(mpfr_srcptr x);

// Rigorous enclosure: |true value - mid| <= rad. Midpoint carries `prec` bits;
// the radius is tracked upward-rounded at fixed small precision.
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec);
  static Ball exact(const Rat& q, mpfr_prec_t prec);
  static Ball exp_of(const Rat& e, mpfr_prec_t prec);  // e^{e}

  Ball operator+(const Ball& o) const;
  Ball operator-(const Ball& o) const;
  Ball operator*(const Ball& o) const;
  Ball neg() const;
  Ball mul_rat(const Rat& c) const;
  Ball add_rat(const Rat& c) const;
  Ball exp() const;

  bool exact_zero() const;
  mpfr_prec_t prec() const { return mpfr_get_prec(mid_.get()); }
  Rat mid_rat() const { return mpfr_to_rat(mid_.get()); }
  Rat rad_rat() const { return mpfr_to_rat(rad_.get()); }
  Rat abs_upper() const;               // >= |true value|
  Rat abs_lower() const;               // <= |true value|, >= 0
  Rat diff_abs_upper(const Ball& o) const;  // >= |this - other|
  double mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
  std::string mid_decimal(int significant) const;
  std::string rad_decimal() const;

  // Inflates the radius by an exact nonnegative amount.
  void widen(const Rat& extra);

 private:
  Mp mid_;
  Mp rad_;
  void absorb_half_ulp(int ternary);
  static mpfr_prec_t rad_prec() { return 64; }
};

// Closed scalar algebra over the values valuation families produce: exact
// rationals, exact rational multiples of e^{rational} (conjugation laws that
// hold "exactly in the exponent"), rigorous enclosures, and +infinity.
struct Scalar {
  enum class Kind { Exact, ExpForm, Real, PlusInf } kind = Kind::Exact;
  Rat exact;            // Kind::Exact
  Rat coef, expo;       // Kind::ExpForm: coef * e^{expo}
  std::optional<Ball> real;  // Kind::Real
};

Scalar scalar_exact(Rat q);
Scalar scalar_exp_form(Rat coef, Rat expo);
Scalar scalar_real(Ball b);
Scalar scalar_inf();

Ball scalar_to_ball(const Scalar& s, mpfr_prec_t prec);
Scalar scalar_add(const Scalar& a, const Scalar& b, mpfr_prec_t prec);
Scalar scalar_mul_rat(const Scalar& a, const Rat& c);
Scalar scalar_mul_exp(const Scalar& a, const Rat& e, mpfr_prec_t prec);  // times e^{e}

// Upper bound of |L - R|; exact_zero marks a provably-zero difference.
struct Residual {
  bool infinite_mismatch = false;
  bool exact_zero = false;
  Rat upper;
};
Residual scalar_residual(const Scalar& l, const Scalar& r, mpfr_prec_t prec);

// Lower bound of |s| (0 when the enclosure straddles zero); used as the
// relative-residual denominator max(1, |L|, |R|).
Rat scalar_abs_lower(const Scalar& s, mpfr_prec_t prec);

Json scalar_to_json(const Scalar& s, mpfr_prec_t prec);

}  // namespace convexval
