#pragma once

#include <optional>
#include <string>

#include "smallgen/error.hpp"
#include "smallgen/exact/number_field.hpp"
#include "smallgen/exact/real_algebraic.hpp"
#include "smallgen/exact/real_roots.hpp"

namespace smallgen::bounds {

using exact::IntPolynomial;
using exact::RealAlgebraic;

struct SalemResult {
  bool is_salem = false;
  std::optional<RealAlgebraic> theta;
  std::string note;
};

/// Salem test by the literal definition: a real root theta > 1 whose inverse is also a root,
/// all other roots on the unit circle. Decided exactly: for reciprocal p = x^m q(x + 1/x), roots on
/// the circle correspond to real roots of q in (-2, 2) and theta to a single root of q above 2.
inline SalemResult is_salem(const IntPolynomial& p) {
  if (p.degree() < 1) throw DomainError("is_salem needs a nonconstant polynomial");
  if (p.leading() != 1) throw DomainError("is_salem needs a monic polynomial: " + p.to_string());
  if (!(p.squarefree_part() == p)) throw DomainError("is_salem needs an irreducible polynomial: " + p.to_string());
  if (p.degree() <= 4) {
    if (p.degree() > 1 && exact::detail::has_rational_root(p))
      throw DomainError("is_salem needs an irreducible polynomial: " + p.to_string());
    if (p.degree() == 4 && exact::detail::has_quadratic_factor(p))
      throw DomainError("is_salem needs an irreducible polynomial: " + p.to_string());
  }

  SalemResult r;
  if (p.degree() % 2 != 0 || !p.is_reciprocal()) {
    r.note = "not reciprocal: no root has its inverse as a conjugate";
    return r;
  }
  const IntPolynomial q = exact::trace_polynomial(p);
  const int m = q.degree();
  const exact::SturmChain sturm(q.squarefree_part());
  const exact::Rational two(2), minus_two(-2);
  if (q.eval(two) == 0 || q.eval(minus_two) == 0) {
    r.note = "root at +1 or -1";
    return r;
  }
  const int above = sturm.count(two, exact::root_bound(q));
  const int inside = sturm.count(minus_two, two);
  if (!(q.squarefree_part() == q) || above != 1 || inside != m - 1) {
    r.note = "conjugates off the unit circle";
    return r;
  }
  const auto roots = exact::isolate_real_roots(p, exact::Rational(1, 1 << 10));
  r.is_salem = true;
  r.theta = RealAlgebraic::root_of(p, roots.size() - 1);
  if (p.degree() < 4) r.note = "degree < 4: nonstandard Salem by some conventions";
  return r;
}

}  // namespace smallgen::bounds
