#pragma once

#include <vector>

#include "smallgen/error.hpp"
#include "smallgen/exact/interval.hpp"
#include "smallgen/exact/polynomial.hpp"

namespace smallgen::exact {

/// Sturm chain of a squarefree polynomial, kept primitive to bound coefficient growth.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p) {
    if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
    chain_.push_back(p);
    if (p.degree() == 0) return;
    chain_.push_back(p.derivative());
    while (chain_.back().degree() > 0) {
      const auto& a = chain_[chain_.size() - 2];
      const auto& b = chain_.back();
      auto r = RatPolynomial::divmod(a.to_rational(), b.to_rational()).second;
      if (r.is_zero()) break;
      // Next term is -rem; from_rational returns a positive multiple's primitive part with
      // positive leading coefficient, so restore the sign of -rem explicitly.
      IntPolynomial next = IntPolynomial::from_rational(r);
      if (sgn(r.leading()) > 0) next = BigInt(-1) * next;
      chain_.push_back(std::move(next));
    }
  }

  /// Sign variations at a rational point (zeros skipped).
  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& q : chain_) {
      const int s = q.sign_at(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Sign variations at +infinity (positive = true) or -infinity.
  int variations_at_infinity(bool positive) const {
    int count = 0, last = 0;
    for (const auto& q : chain_) {
      int s = sgn(q.leading());
      if (!positive && q.degree() % 2 == 1) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Number of distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }
  int count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Isolating interval for one real root: either lo == hi (exact dyadic root) or p(lo) p(hi) < 0
/// with exactly one root of the squarefree polynomial in (lo, hi).
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// Power of two strictly exceeding the modulus of every complex root (Cauchy bound).
inline Rational root_bound(const IntPolynomial& p) {
  Rational m(0);
  const Rational lead = abs(Rational(p.leading()));
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(Rational(p.coeff(static_cast<std::size_t>(i)))) / lead;
    if (r > m) m = r;
  }
  Rational bound(1);
  while (bound <= m + 1) bound *= 2;
  return bound;
}

/// Halves an isolating interval until its width is at most `width`.
inline RootInterval refine_root(const IntPolynomial& p, RootInterval r, const Rational& width) {
  if (r.exact()) return r;
  int slo = p.sign_at(r.lo);
  while (r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / 2;
    const int s = p.sign_at(mid);
    if (s == 0) return {mid, mid};
    if (s == slo) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }
  return r;
}

/// Isolates every distinct real root of p in ascending order, each to width <= `width`.
/// Endpoints are dyadic rationals, so they convert to MPFR without rounding at modest precision.
inline std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p, const Rational& width) {
  if (p.is_zero()) throw DomainError("poly_real_roots: zero polynomial");
  if (width <= 0) throw DomainError("poly_real_roots: width must be positive");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const IntPolynomial sf = p.squarefree_part();
  const SturmChain sturm(sf);
  const Rational b = root_bound(sf);

  struct Piece {
    Rational lo, hi;
    int count;
  };
  std::vector<Piece> stack{{-b, b, sturm.count(-b, b)}};
  while (!stack.empty()) {
    Piece piece = std::move(stack.back());
    stack.pop_back();
    if (piece.count == 0) continue;
    if (piece.count == 1 && sf.sign_at(piece.lo) * sf.sign_at(piece.hi) < 0) {
      out.push_back(refine_root(sf, {piece.lo, piece.hi}, width));
      continue;
    }
    Rational mid = (piece.lo + piece.hi) / 2;
    if (sf.sign_at(mid) == 0) {
      out.push_back({mid, mid});
      // Step away from the exact root until [mid - eps, mid + eps] holds no other root.
      Rational eps = (piece.hi - piece.lo) / 4;
      while (sf.sign_at(mid - eps) == 0 || sf.sign_at(mid + eps) == 0 || sturm.count(mid - eps, mid + eps) != 1)
        eps /= 2;
      stack.push_back({piece.lo, mid - eps, sturm.count(piece.lo, mid - eps)});
      stack.push_back({mid + eps, piece.hi, sturm.count(mid + eps, piece.hi)});
      continue;
    }
    stack.push_back({piece.lo, mid, sturm.count(piece.lo, mid)});
    stack.push_back({mid, piece.hi, sturm.count(mid, piece.hi)});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

/// Enclosures of the distinct real roots, ascending, each of width <= `width`.
inline std::vector<Interval> poly_real_roots(const IntPolynomial& p, const Rational& width,
                                             mpfr_prec_t prec = Interval::kDefaultPrecision) {
  std::vector<Interval> out;
  for (const auto& r : isolate_real_roots(p, width)) out.emplace_back(r.lo, r.hi, prec);
  return out;
}

/// Number of distinct real roots (Sturm).
inline int count_real_roots(const IntPolynomial& p) {
  if (p.degree() <= 0) return 0;
  return SturmChain(p.squarefree_part()).count_all();
}

}  // namespace smallgen::exact
