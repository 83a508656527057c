#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>

#include "smallgen/error.hpp"
#include "smallgen/exact/rational.hpp"

namespace smallgen::exact {

/// Precision schedule for adaptive evaluation: start, double on failure, stop at cap.
struct PrecisionPolicy {
  mpfr_prec_t start = 64;
  mpfr_prec_t cap = 4096;
};

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds lo down and hi up,
/// so the result encloses the exact result for every choice of exact operands.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit Interval(mpfr_prec_t prec = kDefaultPrecision) {
    init(prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  Interval(double v, mpfr_prec_t prec) {
    if (!std::isfinite(v)) throw DomainError("interval from non-finite double");
    init(prec);
    mpfr_set_d(lo_, v, MPFR_RNDD);
    mpfr_set_d(hi_, v, MPFR_RNDU);
  }

  Interval(const Rational& q, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
  }

  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    if (lo > hi) throw DomainError("interval with lo > hi");
    init(prec);
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
  }

  static Interval from_int(long v, mpfr_prec_t prec = kDefaultPrecision) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static Interval pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  /// Hull of two intervals.
  static Interval hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  Interval(const Interval& o) {
    init(o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }

  Interval(Interval&& o) noexcept {
    init(mpfr_get_prec(o.lo_));
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }

  Interval& operator=(const Interval& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, o.precision());
      mpfr_set_prec(hi_, o.precision());
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }

  Interval& operator=(Interval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }

  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  /// Endpoints converted outward to double.
  double lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid() const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double r = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return r;
  }
  /// Upper bound on hi - lo.
  double width() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double r = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return r;
  }

  Rational lo_rational() const { return to_rational(lo_); }
  Rational hi_rational() const { return to_rational(hi_); }

  /// Point interval at the (rounded) midpoint; used to restart iterations without blow-up.
  Interval midpoint() const {
    Interval r(precision());
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    return r;
  }

  /// Same interval widened by the given absolute radius (rounded outward).
  Interval inflate(const Interval& radius) const {
    Interval r(std::max(precision(), radius.precision()));
    mpfr_sub(r.lo_, lo_, radius.hi_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, radius.hi_, MPFR_RNDU);
    return r;
  }

  Interval with_precision(mpfr_prec_t prec) const {
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  bool contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
  }
  bool contains(double v) const { return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0; }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  bool overlaps(const Interval& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
  }
  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

  /// Certified comparisons: yes/no when decided by the enclosures, undecided otherwise.
  Decision less_than(const Interval& o) const {
    if (mpfr_cmp(hi_, o.lo_) < 0) return Decision::yes;
    if (mpfr_cmp(lo_, o.hi_) >= 0) return Decision::no;
    return Decision::undecided;
  }
  Decision less_equal(const Interval& o) const {
    if (mpfr_cmp(hi_, o.lo_) <= 0) return Decision::yes;
    if (mpfr_cmp(lo_, o.hi_) > 0) return Decision::no;
    return Decision::undecided;
  }
  /// -1/0/+1 when the sign is certain (0 only for the point interval {0}); nullopt-like 2 otherwise.
  int certain_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    return 2;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  friend Interval operator-(const Interval& a) {
    Interval r(a.precision());
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t p = std::max(a.precision(), b.precision());
    Interval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    // min over the four endpoint products, rounded down; max rounded up.
    const mpfr_srcptr al[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bl[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : al) {
      for (auto y : bl) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    }
    mpfr_clear(t);
    return r;
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw PrecisionExhausted("interval division by an enclosure of zero");
    const mpfr_prec_t p = std::max(a.precision(), b.precision());
    Interval inv(p);
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
  }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  Interval square() const {
    Interval r(precision());
    if (mpfr_sgn(lo_) >= 0) {
      mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
      mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
      mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
      mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
    } else {
      mpfr_set_zero(r.lo_, 1);
      mpfr_t t;
      mpfr_init2(t, precision());
      mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
      mpfr_sqr(t, hi_, MPFR_RNDU);
      mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
      mpfr_clear(t);
    }
    return r;
  }

  Interval abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    Interval r(precision());
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, precision());
    mpfr_neg(t, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, t, hi_, MPFR_RNDU);
    mpfr_clear(t);
    return r;
  }

  static Interval max(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  static Interval min(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  Interval sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw DomainError("sqrt of a negative interval");
    Interval r(precision());
    if (mpfr_sgn(lo_) <= 0)
      mpfr_set_zero(r.lo_, 1);
    else
      mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  Interval log() const {
    if (mpfr_sgn(lo_) <= 0) {
      if (mpfr_sgn(hi_) <= 0) throw DomainError("log of a non-positive interval");
      throw PrecisionExhausted("log of an interval touching zero");
    }
    return monotone(mpfr_log);
  }
  Interval exp() const { return monotone(mpfr_exp); }
  Interval log1p() const {
    if (mpfr_cmp_si(lo_, -1) <= 0) throw PrecisionExhausted("log1p of an interval touching -1");
    return monotone(mpfr_log1p);
  }
  Interval expm1() const { return monotone(mpfr_expm1); }
  Interval sinh() const { return monotone(mpfr_sinh); }

  /// cosh is even: minimum 1 at zero.
  Interval cosh() const {
    Interval a = abs();
    return a.monotone(mpfr_cosh);
  }

  /// acosh on [1, inf); the part of the enclosure below 1 is clipped (exact argument >= 1 assumed).
  Interval acosh() const {
    if (mpfr_cmp_ui(hi_, 1) < 0) throw DomainError("acosh of an interval below 1");
    Interval c = *this;
    if (mpfr_cmp_ui(c.lo_, 1) < 0) mpfr_set_ui(c.lo_, 1, MPFR_RNDD);
    return c.monotone(mpfr_acosh);
  }

  /// cos, monotone decreasing on [0, pi]; outside that range the enclosure is [-1, 1].
  Interval cos() const {
    Interval r(precision());
    Interval p = pi(precision());
    if (mpfr_sgn(lo_) >= 0 && mpfr_cmp(hi_, p.lo_) <= 0) {
      mpfr_cos(r.lo_, hi_, MPFR_RNDD);
      mpfr_cos(r.hi_, lo_, MPFR_RNDU);
      return r;
    }
    mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }

  /// base^e for base > 0 via exp(e log base).
  static Interval pow(const Interval& base, const Interval& e) { return (e * base.log()).exp(); }

  /// Decimal rendering of the midpoint with `digits` significant digits.
  std::string to_decimal(int digits = 10) const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, m);
    std::string s(buf);
    mpfr_free_str(buf);
    mpfr_clear(m);
    return s;
  }

  std::string to_string() const {
    char* a = nullptr;
    char* b = nullptr;
    mpfr_asprintf(&a, "%.17RDg", lo_);
    mpfr_asprintf(&b, "%.17RUg", hi_);
    std::string s = std::string("[") + a + ", " + b + "]";
    mpfr_free_str(a);
    mpfr_free_str(b);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.to_string(); }

 private:
  using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  void init(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }

  Interval monotone(UnaryFn f) const {
    Interval r(precision());
    f(r.lo_, lo_, MPFR_RNDD);
    f(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  static Rational to_rational(mpfr_srcptr x) {
    if (!mpfr_number_p(x)) throw DomainError("non-finite interval endpoint");
    BigInt m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Rational q(m);
    if (e > 0) {
      mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else if (e < 0) {
      mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    q.canonicalize();
    return q;
  }

  mpfr_t lo_;
  mpfr_t hi_;
};

inline Interval sqrt(const Interval& x) { return x.sqrt(); }
inline Interval log(const Interval& x) { return x.log(); }
inline Interval exp(const Interval& x) { return x.exp(); }
inline Interval cosh(const Interval& x) { return x.cosh(); }
inline Interval sinh(const Interval& x) { return x.sinh(); }
inline Interval cos(const Interval& x) { return x.cos(); }
inline Interval abs(const Interval& x) { return x.abs(); }

/// Evaluates `f(prec)` at doubling precision until the enclosure is no wider than `width`.
template <class F>
Interval evaluate_to_width(F&& f, double width, const PrecisionPolicy& policy = {}) {
  for (mpfr_prec_t p = policy.start; p <= policy.cap; p *= 2) {
    Interval v = f(p);
    if (v.width() <= width) return v;
  }
  throw PrecisionExhausted("enclosure wider than requested at precision cap");
}

}  // namespace smallgen::exact
