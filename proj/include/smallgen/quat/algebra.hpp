#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "smallgen/error.hpp"
#include "smallgen/exact/number_field.hpp"
#include "smallgen/quat/hilbert.hpp"

namespace smallgen::quat {

using exact::FieldElement;
using exact::FieldPtr;
using exact::NumberField;

/// The quaternion algebra (a, b / k): basis 1, i, j, ij with i^2 = a, j^2 = b, ij = -ji.
class QuatAlgebra {
 public:
  QuatAlgebra(FieldElement a, FieldElement b) : field_(a.field()), a_(std::move(a)), b_(std::move(b)) {
    if (!field_->same_as(*b_.field())) throw DomainError("a and b must lie in the same field");
    if (a_.is_zero() || b_.is_zero()) throw DomainError("quaternion algebra parameters must be nonzero");
  }

  static std::shared_ptr<const QuatAlgebra> over_rationals(const Rational& a, const Rational& b) {
    auto q = NumberField::rationals();
    return std::make_shared<const QuatAlgebra>(FieldElement(q, a), FieldElement(q, b));
  }

  const FieldPtr& field() const { return field_; }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }

  /// Split at a real place iff a > 0 or b > 0 there.
  bool split_at(std::size_t place) const { return a_.sign_at(place) > 0 || b_.sign_at(place) > 0; }
  bool split_at_distinguished() const { return split_at(field_->place_index()); }

  /// Split at the distinguished real place and ramified (a < 0, b < 0) at every other one.
  bool has_fuchsian_signature() const {
    if (!split_at_distinguished()) return false;
    for (std::size_t v = 0; v < field_->place_count(); ++v) {
      if (v == field_->place_index()) continue;
      if (split_at(v)) return false;
    }
    return true;
  }

  /// Finite and infinite ramification; available over Q only.
  std::optional<RamificationSet> ramification() const {
    if (!field_->is_rational_field()) return std::nullopt;
    return ramification_set(a_.rational_part(), b_.rational_part());
  }

  /// Division algebra test. Over Q via Hilbert symbols; over larger k any ramified real place
  /// suffices; otherwise the caller's assertion is used.
  std::optional<bool> is_division(std::optional<bool> asserted = std::nullopt) const {
    if (auto r = ramification()) return r->is_division();
    for (std::size_t v = 0; v < field_->place_count(); ++v)
      if (!split_at(v)) return true;
    return asserted;
  }

  /// Cocompact when k != Q, or k = Q and the algebra is a division algebra.
  std::optional<bool> is_cocompact(std::optional<bool> asserted_division = std::nullopt) const {
    if (!field_->is_rational_field()) return true;
    return is_division(asserted_division);
  }

  bool same_as(const QuatAlgebra& o) const { return this == &o || (a_ == o.a_ && b_ == o.b_); }

  std::string to_string() const { return "(" + a_.to_string() + ", " + b_.to_string() + ")"; }

 private:
  FieldPtr field_;
  FieldElement a_;
  FieldElement b_;
};

using AlgebraPtr = std::shared_ptr<const QuatAlgebra>;

/// x0 + x1 i + x2 j + x3 ij.
class QuatElement {
 public:
  using Coords = std::array<FieldElement, 4>;

  QuatElement(AlgebraPtr algebra, Coords coords) : algebra_(std::move(algebra)), x_(std::move(coords)) {
    for (const auto& c : x_)
      if (!c.field()->same_as(*algebra_->field())) throw DomainError("quaternion coordinate outside the base field");
  }

  static QuatElement from_rationals(AlgebraPtr algebra, const std::array<Rational, 4>& c) {
    const auto& k = algebra->field();
    return QuatElement(algebra, {FieldElement(k, c[0]), FieldElement(k, c[1]), FieldElement(k, c[2]), FieldElement(k, c[3])});
  }
  static QuatElement scalar(AlgebraPtr algebra, const FieldElement& s) {
    const auto& k = algebra->field();
    FieldElement z(k, Rational(0));
    return QuatElement(std::move(algebra), {s, z, z, z});
  }
  static QuatElement one(AlgebraPtr algebra) {
    auto k = algebra->field();
    return scalar(std::move(algebra), FieldElement(k, Rational(1)));
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const Coords& coords() const { return x_; }
  const FieldElement& operator[](std::size_t i) const { return x_[i]; }

  friend QuatElement operator*(const QuatElement& x, const QuatElement& y) {
    x.check_same(y);
    const auto& a = x.algebra_->a();
    const auto& b = x.algebra_->b();
    const auto ab = a * b;
    const auto& [x0, x1, x2, x3] = x.x_;
    const auto& [y0, y1, y2, y3] = y.x_;
    return QuatElement(x.algebra_, {x0 * y0 + a * x1 * y1 + b * x2 * y2 - ab * x3 * y3,
                                    x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
                                    x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
                                    x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1});
  }
  friend QuatElement operator+(const QuatElement& x, const QuatElement& y) {
    x.check_same(y);
    return QuatElement(x.algebra_, {x.x_[0] + y.x_[0], x.x_[1] + y.x_[1], x.x_[2] + y.x_[2], x.x_[3] + y.x_[3]});
  }
  friend QuatElement operator-(const QuatElement& x, const QuatElement& y) {
    x.check_same(y);
    return QuatElement(x.algebra_, {x.x_[0] - y.x_[0], x.x_[1] - y.x_[1], x.x_[2] - y.x_[2], x.x_[3] - y.x_[3]});
  }
  friend QuatElement operator-(const QuatElement& x) { return QuatElement(x.algebra_, {-x.x_[0], -x.x_[1], -x.x_[2], -x.x_[3]}); }
  friend QuatElement operator*(const FieldElement& s, const QuatElement& x) {
    return QuatElement(x.algebra_, {s * x.x_[0], s * x.x_[1], s * x.x_[2], s * x.x_[3]});
  }
  friend bool operator==(const QuatElement& x, const QuatElement& y) {
    x.check_same(y);
    return x.x_ == y.x_;
  }

  QuatElement conj() const { return QuatElement(algebra_, {x_[0], -x_[1], -x_[2], -x_[3]}); }

  /// Reduced trace x + conj(x) = 2 x0.
  FieldElement trd() const { return Rational(2) * x_[0]; }

  /// Reduced norm x conj(x) = x0^2 - a x1^2 - b x2^2 + ab x3^2.
  FieldElement nrd() const {
    const auto& a = algebra_->a();
    const auto& b = algebra_->b();
    return x_[0] * x_[0] - a * x_[1] * x_[1] - b * x_[2] * x_[2] + a * b * x_[3] * x_[3];
  }

  QuatElement inverse() const {
    const FieldElement n = nrd();
    if (n.is_zero()) throw DomainError("quaternion of reduced norm zero is not invertible");
    return n.inverse() * conj();
  }

  bool is_scalar() const { return x_[1].is_zero() && x_[2].is_zero() && x_[3].is_zero(); }

  std::string to_string() const {
    return "[" + x_[0].to_string() + ", " + x_[1].to_string() + ", " + x_[2].to_string() + ", " + x_[3].to_string() + "]";
  }

 private:
  void check_same(const QuatElement& o) const {
    if (!algebra_->same_as(*o.algebra_)) throw DomainError("quaternions from different algebras");
  }

  AlgebraPtr algebra_;
  Coords x_;
};

/// A presentation with a > 0 at the distinguished place, and the coordinate map into it.
struct NormalizedAlgebra {
  AlgebraPtr algebra;
  bool swapped = false;  // (a, b) -> (b, a): i' = j, j' = i, i'j' = -ij

  QuatElement map(const QuatElement& x) const {
    if (!swapped) return QuatElement(algebra, x.coords());
    const auto& c = x.coords();
    return QuatElement(algebra, {c[0], c[2], c[1], -c[3]});
  }
};

/// Rotates (a, b) into the canonical split presentation used by the matrix embedding.
inline NormalizedAlgebra normalize(const AlgebraPtr& algebra) {
  if (algebra->a().sign() > 0) return {algebra, false};
  if (algebra->b().sign() > 0) return {std::make_shared<const QuatAlgebra>(algebra->b(), algebra->a()), true};
  throw DomainError("algebra " + algebra->to_string() + " is ramified at the distinguished real place");
}

}  // namespace smallgen::quat
