#pragma once

#include <optional>
#include <string>

#include "smallgen/error.hpp"
#include "smallgen/exact/real_algebraic.hpp"
#include "smallgen/hyp/mat2.hpp"

namespace smallgen::hyp {

using exact::IntPolynomial;
using exact::RatPolynomial;
using exact::RealAlgebraic;

enum class IsometryKind { central, elliptic, parabolic, hyperbolic };

inline std::string to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::central: return "central";
    case IsometryKind::elliptic: return "elliptic";
    case IsometryKind::parabolic: return "parabolic";
    case IsometryKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

struct IsometryClass {
  IsometryKind kind = IsometryKind::central;
  Interval trace = Interval::from_int(0);
  std::optional<FieldElement> exact_trace;
  /// Hyperbolic: the eigenvalue with |u| > 1, exactly when the trace is exact.
  std::optional<RealAlgebraic> u;
  std::optional<Interval> u_enclosure;
  /// Central / elliptic: order in SL2 when found.
  std::optional<unsigned long> order;
  /// Elliptic with exact trace where the order search ran out (inexact input only).
  bool order_search_exhausted = false;
};

/// Integer polynomial with the eigenvalues u, 1/u of every conjugate of the trace t among its
/// roots: x^d * charpoly_t(x + 1/x), made primitive and squarefree.
inline IntPolynomial eigenvalue_polynomial(const FieldElement& t) {
  const RatPolynomial chi = t.charpoly();
  const int d = chi.degree();
  const RatPolynomial x2p1({Rational(1), Rational(0), Rational(1)});
  RatPolynomial acc;
  RatPolynomial power = RatPolynomial::constant(1);
  for (int k = 0; k <= d; ++k) {
    acc = acc + chi.coeff(static_cast<std::size_t>(k)) * power * RatPolynomial::monomial(1, static_cast<std::size_t>(d - k));
    power = power * x2p1;
  }
  return IntPolynomial::from_rational(acc).squarefree_part();
}

/// Least n with g^n = I for a non-central element with exact trace t, via
/// g^n = U_{n-1} g - U_{n-2} I, U_n = t U_{n-1} - U_{n-2}.
inline std::optional<unsigned long> elliptic_order(const FieldElement& t, unsigned long max_order) {
  const auto& k = t.field();
  FieldElement prev(k, Rational(0));  // U_{n-2}
  FieldElement cur(k, Rational(1));   // U_{n-1}
  const FieldElement minus_one(k, Rational(-1));
  for (unsigned long n = 1; n <= max_order; ++n) {
    if (cur.is_zero() && prev == minus_one) return n;
    FieldElement next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return std::nullopt;
}

/// Exact eigenvalue u with |u| > 1 for an exact hyperbolic trace.
inline RealAlgebraic hyperbolic_eigenvalue(const FieldElement& t, const PrecisionPolicy& policy = {}) {
  const IntPolynomial p = eigenvalue_polynomial(t);
  const int s = t.sign(policy);
  for (mpfr_prec_t prec = policy.start; prec <= policy.cap; prec *= 2) {
    const Interval tv = t.embed_at(t.field()->place_index(), prec).abs();
    const Interval disc = tv.square() - Interval::from_int(4, prec);
    if (disc.certain_sign() != 1) continue;
    Interval u = (tv + disc.sqrt()) / Interval::from_int(2, prec);
    if (s < 0) u = -u;
    try {
      return RealAlgebraic::root_in(p, u.lo_rational(), u.hi_rational());
    } catch (const DomainError&) {
      // enclosure not yet isolating
    }
  }
  throw PrecisionExhausted("eigenvalue not isolated at precision cap for trace " + t.to_string());
}

/// Classifies by |trace| against 2. Exact shadows decide every case; interval-only input is
/// decided when the enclosure separates |tr| from 2, and otherwise throws.
inline IsometryClass classify(const Mat2& m, const PrecisionPolicy& policy = {}) {
  IsometryClass c;
  c.trace = m.trace();
  c.exact_trace = m.exact_trace();

  if (c.exact_trace) {
    const FieldElement& t = *c.exact_trace;
    const auto& k = t.field();
    const int cmp_hi = (t - FieldElement(k, Rational(2))).sign(policy);
    const int cmp_lo = (t + FieldElement(k, Rational(2))).sign(policy);
    if (cmp_hi == 0 || cmp_lo == 0) {
      if (m.is_scalar(1)) {
        c.kind = IsometryKind::central;
        c.order = 1;
      } else if (m.is_scalar(-1)) {
        c.kind = IsometryKind::central;
        c.order = 2;
      } else {
        c.kind = IsometryKind::parabolic;
      }
      return c;
    }
    if (cmp_hi < 0 && cmp_lo > 0) {
      c.kind = IsometryKind::elliptic;
      const unsigned long d = static_cast<unsigned long>(k->degree());
      const unsigned long bound = 2 * (4 * d) * (4 * d);
      c.order = elliptic_order(t, bound);
      c.order_search_exhausted = !c.order.has_value();
      return c;
    }
    c.kind = IsometryKind::hyperbolic;
    c.u = hyperbolic_eigenvalue(t, policy);
    c.u_enclosure = c.u->enclosure(m.precision());
    return c;
  }

  const Interval at = c.trace.abs();
  const Interval two = Interval::from_int(2, at.precision());
  if (at.less_than(two) == Decision::yes) {
    c.kind = IsometryKind::elliptic;
    c.order_search_exhausted = true;
    return c;
  }
  if (two.less_than(at) == Decision::yes) {
    c.kind = IsometryKind::hyperbolic;
    const Interval disc = at.square() - Interval::from_int(4, at.precision());
    Interval u = (at + Interval::max(disc, Interval::from_int(0, at.precision())).sqrt()) / two;
    if (c.trace.certain_sign() < 0) u = -u;
    c.u_enclosure = u;
    return c;
  }
  throw PrecisionExhausted("trace enclosure " + c.trace.to_string() + " does not separate |tr| from 2");
}

/// 2 log |u| for a hyperbolic element.
inline Interval translation_length(const Mat2& m, const PrecisionPolicy& policy = {}) {
  const IsometryClass c = classify(m, policy);
  if (c.kind != IsometryKind::hyperbolic) throw DomainError("translation length of a " + to_string(c.kind) + " element");
  return Interval::from_int(2, c.u_enclosure->precision()) * c.u_enclosure->abs().log();
}

}  // namespace smallgen::hyp
