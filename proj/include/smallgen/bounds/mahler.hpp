#pragma once

#include <algorithm>
#include <cmath>

#include "smallgen/error.hpp"
#include "smallgen/exact/complex_roots.hpp"
#include "smallgen/exact/polynomial.hpp"

namespace smallgen::bounds {

using exact::BigInt;
using exact::Interval;
using exact::IntPolynomial;
using exact::PrecisionPolicy;
using exact::Rational;

namespace detail {

/// Enclosure of prod max(1, |root|) over the roots of a squarefree polynomial; disks that
/// straddle the unit circle contribute [1, max(1, |z| + r)].
inline Interval outside_product(const IntPolynomial& f, double max_radius, mpfr_prec_t prec,
                                const PrecisionPolicy& policy) {
  Interval acc = Interval::from_int(1, prec);
  if (f.degree() < 1) return acc;
  const Interval one = Interval::from_int(1, prec);
  for (const auto& disk : exact::certified_complex_roots(f, max_radius, policy)) {
    const Interval center_mod = disk.center.modulus().with_precision(prec);
    const Interval r = disk.radius.with_precision(prec);
    const Interval upper = Interval::max(one, center_mod + r);
    Interval lower = center_mod - r;
    lower = Interval::max(one, lower);
    acc = acc * Interval::hull(Interval(lower.lo_rational(), prec), Interval(upper.hi_rational(), prec));
  }
  return acc;
}

}  // namespace detail

/// Mahler measure |lead| * prod max(1, |theta_i|) over all complex roots with multiplicity,
/// enclosed to at most `width`.
inline Interval mahler_measure(const IntPolynomial& p, double width, const PrecisionPolicy& policy = {}) {
  if (p.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  const auto factors = p.squarefree_decomposition();  // factors[i] has multiplicity i + 1
  BigInt lead = abs(p.leading());
  for (double max_radius = 1e-6; max_radius >= 1e-60; max_radius *= 1e-6) {
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(128, static_cast<mpfr_prec_t>(-std::log2(max_radius)) + 64);
    Interval m(Rational(lead), prec);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Interval part = detail::outside_product(factors[i], max_radius, prec, policy);
      for (std::size_t k = 0; k <= i; ++k) m = m * part;
    }
    if (m.width() <= width) return m;
  }
  throw PrecisionExhausted("Mahler measure enclosure wider than requested for " + p.to_string());
}

}  // namespace smallgen::bounds
