#pragma once

#include "smallgen/error.hpp"
#include "smallgen/hyp/mat2.hpp"
#include "smallgen/quat/algebra.hpp"

namespace smallgen::quat {

using exact::Surd;
using hyp::Mat2;

/// rho(x) = [[x0 + x1 sqrt a, x2 + x3 sqrt a], [b (x2 - x3 sqrt a), x0 - x1 sqrt a]] for a > 0 at the
/// distinguished place; det rho(x) = nrd(x), tr rho(x) = trd(x). Requires nrd(x) = 1.
inline Mat2 embed_matrix(const QuatElement& x, mpfr_prec_t prec = exact::Interval::kDefaultPrecision) {
  const auto& alg = *x.algebra();
  const FieldElement& a = alg.a();
  const FieldElement& b = alg.b();
  if (a.sign() <= 0) throw DomainError("embedding needs a > 0 at the distinguished place; normalize the presentation");
  const auto& [x0, x1, x2, x3] = x.coords();
  return Mat2(Mat2::Exact{Surd(x0, x1, a), Surd(x2, x3, a), Surd(b * x2, -(b * x3), a), Surd(x0, -x1, a)}, prec);
}

}  // namespace smallgen::quat
