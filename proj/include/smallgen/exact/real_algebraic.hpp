#pragma once

#include <compare>
#include <string>
#include <utility>

#include "smallgen/error.hpp"
#include "smallgen/exact/interval.hpp"
#include "smallgen/exact/polynomial.hpp"
#include "smallgen/exact/real_roots.hpp"

namespace smallgen::exact {

/// A real algebraic number: a squarefree primitive integer polynomial together with a rational
/// isolating interval holding exactly one of its roots.
///
/// The defining polynomial is the minimal polynomial whenever it was constructed from one; values
/// produced internally from resultant-style constructions may carry a squarefree multiple of it.
/// Equality and ordering are exact either way.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}

  explicit RealAlgebraic(const Rational& q)
      : poly_(IntPolynomial({BigInt(-q.get_num()), BigInt(q.get_den())})), lo_(q), hi_(q) {}

  /// The `index`-th real root (ascending) of p.
  static RealAlgebraic root_of(const IntPolynomial& p, std::size_t index) {
    auto roots = isolate_real_roots(p, Rational(1, 1 << 10));
    if (index >= roots.size()) throw DomainError("root index out of range for " + p.to_string());
    return RealAlgebraic(p.squarefree_part(), roots[index]);
  }

  /// The unique real root of p inside the closed interval [lo, hi]; throws if not unique.
  static RealAlgebraic root_in(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
    IntPolynomial sf = p.squarefree_part();
    auto roots = isolate_real_roots(sf, (hi - lo) / 4 + Rational(1, 1 << 20));
    int found = 0;
    RootInterval pick{};
    for (auto& r : roots) {
      // refine until the root is certainly inside or outside [lo, hi]
      while (!(r.hi < lo || r.lo > hi || (r.lo >= lo && r.hi <= hi))) {
        if (r.exact()) break;
        r = refine_root(sf, r, r.width() / 2);
      }
      if (r.lo >= lo && r.hi <= hi) {
        ++found;
        pick = r;
      }
    }
    if (found != 1) throw DomainError("root_in: interval does not isolate a single root of " + p.to_string());
    return RealAlgebraic(std::move(sf), pick);
  }

  const IntPolynomial& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_rational() const { return lo_ == hi_; }

  /// Copy refined so that the isolating interval is no wider than `width`.
  RealAlgebraic refined(const Rational& width) const {
    RealAlgebraic r = *this;
    if (is_rational()) return r;
    RootInterval ri = refine_root(poly_, {lo_, hi_}, width);
    r.lo_ = ri.lo;
    r.hi_ = ri.hi;
    return r;
  }

  /// Enclosure no wider than 2^-(prec-8) relative to the magnitude scale used.
  Interval enclosure(mpfr_prec_t prec = Interval::kDefaultPrecision) const {
    Rational w(1);
    mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), static_cast<mp_bitcnt_t>(prec > 8 ? prec - 8 : 1));
    RealAlgebraic r = refined(w);
    return Interval(r.lo_, r.hi_, prec);
  }

  int sign() const {
    if (lo_ > 0) return 1;
    if (hi_ < 0) return -1;
    if (poly_.sign_at(Rational(0)) == 0) return 0;
    // 0 is not a root, and the interval either touches or straddles zero: refine until it does not.
    RealAlgebraic r = *this;
    while (r.lo_ <= 0 && r.hi_ >= 0) r = r.refined(r.width() / 2);
    return r.lo_ > 0 ? 1 : -1;
  }

  Rational width() const { return hi_ - lo_; }

  RealAlgebraic operator-() const {
    RealAlgebraic r;
    r.poly_ = poly_.negate_variable().primitive_part();
    r.lo_ = -hi_;
    r.hi_ = -lo_;
    return r;
  }

  /// Exact three-way comparison. Terminates: equal values share a root of gcd(p, q) in the overlap,
  /// distinct values separate after finitely many refinements.
  friend std::strong_ordering operator<=>(const RealAlgebraic& x, const RealAlgebraic& y) {
    if (x.hi_ < y.lo_) return std::strong_ordering::less;
    if (y.hi_ < x.lo_) return std::strong_ordering::greater;
    if (shares_root(x, y)) return std::strong_ordering::equal;
    RealAlgebraic a = x, b = y;
    for (;;) {
      if (a.hi_ < b.lo_) return std::strong_ordering::less;
      if (b.hi_ < a.lo_) return std::strong_ordering::greater;
      if (!a.is_rational()) a = a.refined(a.width() / 2);
      if (!b.is_rational()) b = b.refined(b.width() / 2);
    }
  }
  friend bool operator==(const RealAlgebraic& x, const RealAlgebraic& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

  std::string to_string() const {
    return "root of " + poly_.to_string() + " in [" + lo_.get_str() + ", " + hi_.get_str() + "]";
  }

 private:
  RealAlgebraic(IntPolynomial p, const RootInterval& r) : poly_(std::move(p)), lo_(r.lo), hi_(r.hi) {}

  static bool shares_root(const RealAlgebraic& x, const RealAlgebraic& y) {
    const Rational lo = x.lo_ > y.lo_ ? x.lo_ : y.lo_;
    const Rational hi = x.hi_ < y.hi_ ? x.hi_ : y.hi_;
    if (lo > hi) return false;
    IntPolynomial g = IntPolynomial::gcd(x.poly_, y.poly_);
    if (g.degree() <= 0) return false;
    if (g.sign_at(lo) == 0 || g.sign_at(hi) == 0) return true;
    if (lo == hi) return false;
    return SturmChain(g).count(lo, hi) > 0;
  }

  IntPolynomial poly_;
  Rational lo_;
  Rational hi_;
};

}  // namespace smallgen::exact
