#pragma once

#include <string>

#include "smallgen/error.hpp"
#include "smallgen/exact/interval.hpp"
#include "smallgen/exact/number_field.hpp"

namespace smallgen::exact {

/// p + q * sqrt(r) with p, q, r in a totally real field k and r > 0 at the distinguished place;
/// the square root is the positive one there. Exact arithmetic and exact sign.
class Surd {
 public:
  Surd() = default;
  Surd(FieldElement p, FieldElement q, FieldElement r) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {}

  static Surd rational(const FieldElement& p, const FieldElement& r) { return Surd(p, FieldElement(p.field(), Rational(0)), r); }
  static Surd from_rational(const Rational& v) {
    auto q = NumberField::rationals();
    return Surd(FieldElement(q, v), FieldElement(q, Rational(0)), FieldElement(q, Rational(1)));
  }

  const FieldElement& p() const { return p_; }
  const FieldElement& q() const { return q_; }
  const FieldElement& radicand() const { return r_; }
  bool in_base_field() const { return q_.is_zero(); }

  friend Surd operator+(const Surd& a, const Surd& b) { return Surd(a.p_ + b.p_, a.q_ + b.q_, common_radicand(a, b)); }
  friend Surd operator-(const Surd& a, const Surd& b) { return Surd(a.p_ - b.p_, a.q_ - b.q_, common_radicand(a, b)); }
  friend Surd operator-(const Surd& a) { return Surd(-a.p_, -a.q_, a.r_); }
  friend Surd operator*(const Surd& a, const Surd& b) {
    const FieldElement r = common_radicand(a, b);
    return Surd(a.p_ * b.p_ + r * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_, r);
  }
  friend bool operator==(const Surd& a, const Surd& b) {
    // Representation is unique when r is not a square in k; otherwise compare the difference.
    return (a - b).sign() == 0;
  }

  /// Exact sign at the distinguished place.
  int sign(const PrecisionPolicy& policy = {}) const {
    const int sp = p_.sign(policy);
    const int sq = q_.sign(policy);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // opposite signs: compare p^2 with q^2 r
    const int d = (p_ * p_ - q_ * q_ * r_).sign(policy);
    if (d == 0) return 0;
    return d > 0 ? sp : sq;
  }

  Surd abs() const { return sign() < 0 ? -*this : *this; }

  Interval enclosure(mpfr_prec_t prec) const {
    if (q_.is_zero()) return p_.embed_at(p_.field()->place_index(), prec);
    const std::size_t place = p_.field()->place_index();
    return p_.embed_at(place, prec) + q_.embed_at(place, prec) * r_.embed_at(place, prec).sqrt();
  }

  std::string to_string() const {
    if (q_.is_zero()) return p_.to_string();
    return p_.to_string() + " + (" + q_.to_string() + ")*sqrt(" + r_.to_string() + ")";
  }

 private:
  /// Elements of k carry no radicand of their own and adopt the other operand's.
  static const FieldElement& common_radicand(const Surd& a, const Surd& b) {
    if (a.q_.is_zero()) return b.r_;
    if (b.q_.is_zero() || a.r_ == b.r_) return a.r_;
    throw DomainError("surds with different radicands");
  }

  FieldElement p_;
  FieldElement q_;
  FieldElement r_;
};

}  // namespace smallgen::exact
