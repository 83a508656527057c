#pragma once

#include <string>

#include "smallgen/error.hpp"
#include "smallgen/exact/interval.hpp"
#include "smallgen/exact/polynomial.hpp"
#include "smallgen/exact/real_algebraic.hpp"
#include "smallgen/exact/real_roots.hpp"

namespace smallgen::bounds {

using exact::Interval;
using exact::IntPolynomial;
using exact::Rational;
using exact::RealAlgebraic;

/// (log log n / log n) at working precision; negative for n = 2.
inline Interval loglog_ratio(unsigned long n, mpfr_prec_t prec) {
  const Interval ln = Interval(Rational(static_cast<long>(n)), prec).log();
  return ln.log() / ln;
}

struct VoutierBound {
  unsigned long n = 0;
  Interval value;
  bool informative = false;  // certainly positive
};

/// 1/4 (log log n / log n)^3, the lower bound for log M(theta) over algebraic integers theta of
/// degree at most n that are not roots of unity.
inline VoutierBound voutier_lower_bound(unsigned long n, mpfr_prec_t prec = Interval::kDefaultPrecision) {
  if (n < 2) throw DomainError("voutier_lower_bound needs n >= 2");
  const Interval r = loglog_ratio(n, prec);
  VoutierBound v{n, r * r * r / Interval::from_int(4, prec), false};
  v.informative = v.value.certain_sign() == 1;
  return v;
}

/// 2 cos(pi / m) as an exact algebraic number: the largest root of the trace polynomial of the
/// 2m-th cyclotomic polynomial.
inline RealAlgebraic two_cos_pi_over(unsigned long m) {
  if (m == 0) throw DomainError("two_cos_pi_over needs m >= 1");
  if (m == 1) return RealAlgebraic(Rational(-2));
  if (m == 2) return RealAlgebraic(Rational(0));
  if (m == 3) return RealAlgebraic(Rational(1));
  const IntPolynomial t = exact::trace_polynomial(exact::cyclotomic(static_cast<unsigned>(2 * m)));
  const auto roots = exact::isolate_real_roots(t, Rational(1, 1 << 10));
  return RealAlgebraic::root_of(t, roots.size() - 1);
}

/// max{2 cos(pi/m) : phi(2m) <= 4d}; phi(n) >= sqrt(n/2) bounds m by 16 d^2.
struct EllipticTraceMax {
  RealAlgebraic value;
  unsigned long m = 1;
};

inline EllipticTraceMax elliptic_trace_max(unsigned long d) {
  if (d < 1) throw DomainError("elliptic_trace_max needs d >= 1");
  unsigned long best = 1;
  const unsigned long limit = 16 * d * d;
  for (unsigned long m = 1; m <= limit; ++m)
    if (exact::euler_phi(2 * m) <= 4 * d) best = m;  // 2cos(pi/m) increases with m
  return {two_cos_pi_over(best), best};
}

struct TraceWindow {
  unsigned long d = 1;
  RealAlgebraic lower;         // 2 cos(pi / 2d)
  Interval upper;              // 2 cosh((1/16) (log log 2d / log 2d)^3)
  Interval upper_argument;     // (1/16) (log log 2d / log 2d)^3, negative for d = 1
  EllipticTraceMax elliptic_max;
};

/// Upper endpoint 2 cosh(k (log log 2d / log 2d)^3) for a given coefficient k.
inline Interval window_upper(unsigned long d, const Rational& coefficient, mpfr_prec_t prec) {
  const Interval r = loglog_ratio(2 * d, prec);
  const Interval arg = Interval(coefficient, prec) * r * r * r;
  return Interval::from_int(2, prec) * arg.cosh();
}

inline TraceWindow trace_window(unsigned long d, mpfr_prec_t prec = Interval::kDefaultPrecision) {
  if (d < 1) throw DomainError("trace_window needs d >= 1");
  TraceWindow w;
  w.d = d;
  w.lower = two_cos_pi_over(2 * d);
  const Interval r = loglog_ratio(2 * d, prec);
  w.upper_argument = r * r * r / Interval::from_int(16, prec);
  w.upper = Interval::from_int(2, prec) * w.upper_argument.cosh();
  w.elliptic_max = elliptic_trace_max(d);
  return w;
}

}  // namespace smallgen::bounds
