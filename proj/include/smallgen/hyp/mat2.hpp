#pragma once

#include <array>
#include <optional>
#include <string>

#include "smallgen/error.hpp"
#include "smallgen/exact/interval.hpp"
#include "smallgen/exact/surd.hpp"

namespace smallgen::hyp {

using smallgen::Decision;
using exact::FieldElement;
using exact::Interval;
using exact::PrecisionPolicy;
using exact::Rational;
using exact::Surd;

enum class NormComparison { below, equal, above, undecided };

inline std::string to_string(NormComparison c) {
  switch (c) {
    case NormComparison::below: return "below";
    case NormComparison::equal: return "equal";
    case NormComparison::above: return "above";
    case NormComparison::undecided: return "undecided";
  }
  return "?";
}

/// 2x2 real matrix of determinant 1 with entries e11, e12, e21, e22 (row major).
/// Interval entries always; an exact shadow over k(sqrt r) when available.
class Mat2 {
 public:
  using Entries = std::array<Interval, 4>;
  using Exact = std::array<Surd, 4>;

  explicit Mat2(Entries e) : e_(std::move(e)) {
    if (!det().contains(Rational(1))) throw DomainError("matrix determinant enclosure excludes 1");
  }

  Mat2(const Exact& x, mpfr_prec_t prec) : exact_(x) {
    if (!(x[0] * x[3] - x[1] * x[2] == one_like(x[0]))) throw DomainError("exact matrix determinant is not 1");
    for (int i = 0; i < 4; ++i) e_[i] = x[i].enclosure(prec);
  }

  static Mat2 identity(mpfr_prec_t prec = Interval::kDefaultPrecision) {
    const Surd one = Surd::from_rational(1), zero = Surd::from_rational(0);
    return Mat2(Exact{one, zero, zero, one}, prec);
  }

  /// Rational matrix, exact.
  static Mat2 rational(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                       mpfr_prec_t prec = Interval::kDefaultPrecision) {
    return Mat2(Exact{Surd::from_rational(a), Surd::from_rational(b), Surd::from_rational(c), Surd::from_rational(d)},
                prec);
  }

  const Entries& entries() const { return e_; }
  const Interval& operator()(int r, int c) const { return e_[2 * r + c]; }
  const std::optional<Exact>& exact() const { return exact_; }
  bool has_exact() const { return exact_.has_value(); }
  mpfr_prec_t precision() const { return e_[0].precision(); }

  Interval trace() const { return e_[0] + e_[3]; }
  Interval det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

  /// Exact trace when it lies in the base field k.
  std::optional<FieldElement> exact_trace() const {
    if (!exact_) return std::nullopt;
    const Surd t = (*exact_)[0] + (*exact_)[3];
    if (!t.in_base_field()) return std::nullopt;
    return t.p();
  }

  /// Inverse of a determinant-1 matrix.
  Mat2 adjugate() const {
    Mat2 r = *this;
    r.e_ = {e_[3], -e_[1], -e_[2], e_[0]};
    if (exact_) r.exact_ = Exact{(*exact_)[3], -(*exact_)[1], -(*exact_)[2], (*exact_)[0]};
    return r;
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r = x;
    const auto& a = x.e_;
    const auto& b = y.e_;
    r.e_ = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    if (x.exact_ && y.exact_) {
      const auto& p = *x.exact_;
      const auto& q = *y.exact_;
      r.exact_ = Exact{p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
                       p[2] * q[1] + p[3] * q[3]};
    } else {
      r.exact_.reset();
    }
    return r;
  }

  Mat2 operator-() const {
    Mat2 r = *this;
    for (auto& v : r.e_) v = -v;
    if (exact_)
      for (auto& v : *r.exact_) v = -v;
    return r;
  }

  /// Entries re-enclosed at another precision (only meaningful with an exact shadow).
  Mat2 at_precision(mpfr_prec_t prec) const {
    if (!exact_) {
      Mat2 r = *this;
      for (auto& v : r.e_) v = v.with_precision(prec);
      return r;
    }
    return Mat2(*exact_, prec);
  }

  /// Exact test for +I (sign = 1) or -I (sign = -1); false without a shadow.
  bool is_scalar(int sign) const {
    if (!exact_) return false;
    const Surd s = Surd::from_rational(sign);
    const auto& x = *exact_;
    return x[1].sign() == 0 && x[2].sign() == 0 && (x[0] - rebase(s, x[0])).sign() == 0 &&
           (x[3] - rebase(s, x[3])).sign() == 0;
  }
  bool is_plus_minus_identity() const { return is_scalar(1) || is_scalar(-1); }

  /// L-infinity norm: the largest absolute entry.
  Interval sup_norm() const {
    return Interval::max(Interval::max(e_[0].abs(), e_[1].abs()), Interval::max(e_[2].abs(), e_[3].abs()));
  }

  /// Certified comparison of sup_norm against a rational cap: exact with a shadow, otherwise
  /// by enclosure with precision doubling when the shadow allows re-evaluation.
  NormComparison compare_norm(const Rational& cap) const {
    if (exact_) {
      bool any_equal = false;
      for (const auto& v : *exact_) {
        const int s = (v.abs() - rebase(Surd::from_rational(cap), v)).sign();
        if (s > 0) return NormComparison::above;
        if (s == 0) any_equal = true;
      }
      return any_equal ? NormComparison::equal : NormComparison::below;
    }
    const Interval n = sup_norm();
    const Interval c(cap, n.precision());
    if (n.less_than(c) == Decision::yes) return NormComparison::below;
    if (c.less_than(n) == Decision::yes) return NormComparison::above;
    return NormComparison::undecided;
  }

  std::string to_string() const {
    return "[[" + e_[0].to_decimal() + ", " + e_[1].to_decimal() + "], [" + e_[2].to_decimal() + ", " +
           e_[3].to_decimal() + "]]";
  }

 private:
  static Surd one_like(const Surd& s) {
    const auto& k = s.p().field();
    return Surd(FieldElement(k, Rational(1)), FieldElement(k, Rational(0)), s.radicand());
  }
  /// A rational surd re-expressed over the field and radicand of `like`.
  static Surd rebase(const Surd& rational, const Surd& like) {
    const auto& k = like.p().field();
    return Surd(FieldElement(k, rational.p().rational_part()), FieldElement(k, Rational(0)), like.radicand());
  }

  Entries e_;
  std::optional<Exact> exact_;
};

}  // namespace smallgen::hyp
