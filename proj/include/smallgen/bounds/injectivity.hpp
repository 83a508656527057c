#pragma once

#include <optional>
#include <string>

#include "smallgen/error.hpp"
#include "smallgen/bounds/window.hpp"

namespace smallgen::bounds {

/// The two candidates for delta_0(d): cosh((1/16)(log log 2d / log 2d)^3) - 1, evaluated as
/// 2 sinh^2(x/2) to avoid cancellation, and 1 - cos(pi/2d) = 2 sin^2(pi/4d).
struct DeltaZero {
  Interval hyperbolic_term;
  Interval elliptic_term;
  Interval value;
};

inline DeltaZero delta_zero_terms(unsigned long d, mpfr_prec_t prec = Interval::kDefaultPrecision) {
  if (d < 1) throw DomainError("delta_zero needs d >= 1");
  const Interval two = Interval::from_int(2, prec);
  const Interval r = loglog_ratio(2 * d, prec);
  const Interval x = r * r * r / Interval::from_int(16, prec);
  const Interval sh = (x / two).sinh();
  const Interval hyp = two * sh.square();
  const Interval c = (Interval::pi(prec) / Interval(Rational(static_cast<long>(2 * d)), prec)).cos();
  const Interval ell = Interval::from_int(1, prec) - c;
  return {hyp, ell, Interval::min(hyp, ell)};
}

inline Interval delta_zero(unsigned long d, mpfr_prec_t prec = Interval::kDefaultPrecision) {
  return delta_zero_terms(d, prec).value;
}

struct SafetyConstant {
  Interval c;              // (1/5) min d^2 delta_0(d)
  Interval minimum;        // min d^2 delta_0(d)
  unsigned long argmin = 1;
  unsigned long d_max = 1;
  bool argmin_unique = true;  // certified: every other d has a larger enclosure
};

namespace detail {

/// Certified enclosure of d^2 delta_0(d) at 64-bit-class precision. The elliptic term needs no
/// transcendental evaluation when its Taylor lower bound y^2/2 - y^4/24 (y = pi/2d) already
/// exceeds the hyperbolic term.
inline Interval scaled_delta_zero(unsigned long d, mpfr_prec_t prec) {
  const Interval two = Interval::from_int(2, prec);
  const Interval dd(Rational(static_cast<long>(d)), prec);
  const Interval d2 = dd.square();
  const Interval ln = (two * dd).log();
  const Interval r = ln.log() / ln;
  const Interval x = r * r * r / Interval::from_int(16, prec);
  const Interval sh = (x / two).sinh();
  Interval value = d2 * two * sh.square();
  const Interval y = Interval::pi(prec) / (two * dd);
  const Interval y2 = y.square();
  const Interval taylor_lo = y2 / two - y2.square() / Interval::from_int(24, prec);
  if (d < 4 || (d2 * taylor_lo).less_than(value) != Decision::no)
    value = Interval::min(value, d2 * (Interval::from_int(1, prec) - y.cos()));
  return value;
}

/// Lower bound of d^2 delta_0(d) over lo <= d <= hi for lo >= 8, where loglog(2d)/log(2d) is
/// positive and decreasing: the hyperbolic term is at least lo^2 x(hi)^2 / 2 with x(d) =
/// r(d)^3 / 16, and the elliptic term at least pi^2/8 - pi^4/(384 lo^2).
inline Interval block_lower_bound(unsigned long lo, unsigned long hi, mpfr_prec_t prec) {
  const Interval two = Interval::from_int(2, prec);
  const Interval l(Rational(static_cast<long>(lo)), prec);
  const Interval ln = (two * Interval(Rational(static_cast<long>(hi)), prec)).log();
  const Interval r = ln.log() / ln;
  const Interval x = r * r * r / Interval::from_int(16, prec);
  const Interval hyp = l.square() * x.square() / two;
  const Interval pi2 = Interval::pi(prec).square();
  const Interval ell = pi2 / Interval::from_int(8, prec) - pi2.square() / (Interval::from_int(384, prec) * l.square());
  const Interval m = Interval::min(hyp, ell);
  return Interval(m.lo_rational(), prec);
}

}  // namespace detail

/// c = (1/5) min_{1 <= d <= d_max} d^2 delta_0(d). The 1/5 turns a delta-ball into a
/// delta_0-ball for quotients: |g1^-1 g2 - 1| <= 2(1 + delta)(2 delta) < 5 delta when delta < 1/4.
/// Beyond d = 64 the sweep proceeds in doubling blocks, skipping a block when its certified lower
/// bound exceeds the running minimum; `exhaustive` evaluates every d instead.
inline SafetyConstant compute_safety_constant(unsigned long d_max, bool exhaustive = false, mpfr_prec_t prec = 64) {
  if (d_max < 1) throw DomainError("compute_safety_constant needs d_max >= 1");
  SafetyConstant s;
  s.d_max = d_max;
  std::optional<Interval> best;
  std::optional<Interval> others;  // enclosure hull from below of every non-minimal candidate
  auto absorb_other = [&](const Interval& v) { others = others ? Interval::min(*others, v) : v; };
  auto consider = [&](unsigned long d) {
    const Interval value = detail::scaled_delta_zero(d, prec);
    if (!best || value.hi() < best->hi()) {
      if (best) absorb_other(*best);
      best = value;
      s.argmin = d;
    } else {
      absorb_other(value);
    }
  };

  const unsigned long dense = exhaustive ? d_max : std::min<unsigned long>(d_max, 64);
  for (unsigned long d = 1; d <= dense; ++d) consider(d);
  for (unsigned long lo = dense + 1; lo <= d_max;) {
    const unsigned long hi = std::min(d_max, 2 * lo - 1);
    const Interval bound = detail::block_lower_bound(lo, hi, prec);
    if (best->less_than(bound) == Decision::yes) {
      absorb_other(bound);
    } else {
      for (unsigned long d = lo; d <= hi; ++d) consider(d);
    }
    lo = hi + 1;
  }

  s.minimum = *best;
  if (others) {
    s.argmin_unique = best->less_than(*others) == Decision::yes;
    s.minimum = Interval::min(*best, *others);
  }
  s.c = s.minimum / Interval::from_int(5, prec);
  return s;
}

enum class DeltaVariant { general, torsion_free, salem };

inline std::string to_string(DeltaVariant v) {
  switch (v) {
    case DeltaVariant::general: return "general";
    case DeltaVariant::torsion_free: return "torsion_free";
    case DeltaVariant::salem: return "salem";
  }
  return "?";
}

struct DeltaConstants {
  DeltaVariant variant = DeltaVariant::general;
  Rational c;
  std::optional<Rational> m_salem;
  Interval delta0;
  Interval delta;
  Decision below_delta0 = Decision::undecided;  // delta < delta0 certified
};

/// delta = c d^-2 (general), c (log log 2d / log 2d)^6 (torsion free) or c log^2(m_S) (Salem).
inline DeltaConstants delta_constants(DeltaVariant variant, unsigned long d, const Rational& c,
                                      std::optional<Rational> m_salem = std::nullopt,
                                      mpfr_prec_t prec = Interval::kDefaultPrecision) {
  if (d < 1) throw DomainError("delta needs d >= 1");
  if (c <= 0) throw DomainError("safety constant c must be positive");
  DeltaConstants k;
  k.variant = variant;
  k.c = c;
  k.m_salem = m_salem;
  k.delta0 = delta_zero(d, prec);
  const Interval ci(c, prec);
  switch (variant) {
    case DeltaVariant::general:
      k.delta = ci / Interval(Rational(static_cast<long>(d)), prec).square();
      break;
    case DeltaVariant::torsion_free: {
      const Interval r = loglog_ratio(2 * d, prec);
      const Interval r3 = r * r * r;
      k.delta = ci * r3.square();
      break;
    }
    case DeltaVariant::salem: {
      if (!m_salem || *m_salem <= 1) throw DomainError("Salem variant needs m_S > 1");
      k.delta = ci * Interval(*m_salem, prec).log().square();
      break;
    }
  }
  k.below_delta0 = k.delta.less_than(k.delta0);
  return k;
}

}  // namespace smallgen::bounds
