#pragma once

#include "smallgen/error.hpp"
#include "smallgen/hyp/mat2.hpp"

namespace smallgen::hyp {

/// x + i y in the upper half-plane.
struct Point {
  Interval x;
  Interval y;

  static Point i(mpfr_prec_t prec = Interval::kDefaultPrecision) {
    return {Interval::from_int(0, prec), Interval::from_int(1, prec)};
  }
};

/// (a z + b) / (c z + d).
inline Point mobius_act(const Mat2& m, const Point& z) {
  if (z.y.certain_sign() != 1) throw DomainError("point is not certainly in the upper half-plane");
  const Interval& a = m(0, 0);
  const Interval& b = m(0, 1);
  const Interval& c = m(1, 0);
  const Interval& d = m(1, 1);
  const Interval cx_d = c * z.x + d;
  const Interval cy = c * z.y;
  const Interval den = cx_d.square() + cy.square();
  const Interval re = ((a * z.x + b) * cx_d + a * c * z.y.square()) / den;
  const Interval im = z.y / den;  // determinant 1
  return {re, im};
}

/// arccosh(1 + |z - w|^2 / (2 Im z Im w)).
inline Interval hyp_dist(const Point& z, const Point& w) {
  if (z.y.certain_sign() != 1 || w.y.certain_sign() != 1) throw DomainError("points must lie in the upper half-plane");
  const Interval num = (z.x - w.x).square() + (z.y - w.y).square();
  const Interval arg = Interval::from_int(1, z.x.precision()) + num / (Interval::from_int(2, z.x.precision()) * z.y * w.y);
  return arg.acosh();
}

/// cosh d(g i, i) = |g|_F^2 / 2 for g in SL2(R).
inline Interval cosh_dist_from_i(const Mat2& m) {
  Interval f = m(0, 0).square() + m(0, 1).square() + m(1, 0).square() + m(1, 1).square();
  return f / Interval::from_int(2, f.precision());
}

}  // namespace smallgen::hyp
