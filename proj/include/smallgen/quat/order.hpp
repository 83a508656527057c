#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "smallgen/error.hpp"
#include "smallgen/quat/algebra.hpp"

namespace smallgen::quat {

using RationalMatrix4 = std::array<std::array<Rational, 4>, 4>;

namespace detail {

/// Inverse of a 4x4 rational matrix by Gauss-Jordan elimination; nullopt when singular.
inline std::optional<RationalMatrix4> invert(const RationalMatrix4& m) {
  RationalMatrix4 a = m;
  RationalMatrix4 inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = 1;
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rational p = a[col][col];
    for (int c = 0; c < 4; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < 4; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace detail

/// Lattice in A spanned over the integers of k by four basis elements, given as rational
/// coordinate rows in 1, i, j, ij.
class QuatOrder {
 public:
  QuatOrder(AlgebraPtr algebra, const RationalMatrix4& basis) : algebra_(std::move(algebra)), basis_(basis) {
    auto inv = detail::invert(basis_);
    if (!inv) throw DomainError("order basis is singular");
    inverse_ = *inv;
    for (const auto& row : basis_) elements_.push_back(QuatElement::from_rationals(algebra_, row));
    if (!contains(QuatElement::one(algebra_))) throw DomainError("order lattice does not contain 1");
    for (int s = 0; s < 4; ++s)
      for (int t = 0; t < 4; ++t) {
        const auto c = coordinates(elements_[s] * elements_[t]);
        for (int u = 0; u < 4; ++u) {
          if (!c[u].is_algebraic_integer())
            throw DomainError("order basis is not closed under multiplication (product " + std::to_string(s) + "," +
                              std::to_string(t) + ")");
          if (algebra_->field()->is_rational_field()) structure_[s][t][u] = c[u].rational_part().get_num();
        }
      }
  }

  /// Z<1, i, j, ij>; an order when a and b are integral.
  static QuatOrder natural(AlgebraPtr algebra) {
    RationalMatrix4 id{};
    for (int i = 0; i < 4; ++i) id[i][i] = 1;
    return QuatOrder(std::move(algebra), id);
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const RationalMatrix4& basis_matrix() const { return basis_; }
  const std::vector<QuatElement>& basis() const { return elements_; }
  bool is_natural() const {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (basis_[r][c] != (r == c ? 1 : 0)) return false;
    return true;
  }

  /// Coordinates of x in the order basis.
  std::array<FieldElement, 4> coordinates(const QuatElement& x) const {
    if (!x.algebra()->same_as(*algebra_)) throw DomainError("element from a different algebra");
    const auto& k = algebra_->field();
    std::array<FieldElement, 4> out{FieldElement(k, Rational(0)), FieldElement(k, Rational(0)),
                                    FieldElement(k, Rational(0)), FieldElement(k, Rational(0))};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (inverse_[r][c] != 0) out[c] = out[c] + inverse_[r][c] * x[r];
    return out;
  }

  bool contains(const QuatElement& x) const {
    for (const auto& c : coordinates(x))
      if (!c.is_algebraic_integer()) return false;
    return true;
  }

  /// sum_t n_t basis_t for integer n.
  QuatElement element(const std::array<BigInt, 4>& n) const {
    std::array<Rational, 4> c{};
    for (int t = 0; t < 4; ++t)
      for (int u = 0; u < 4; ++u) c[u] += Rational(n[t]) * basis_[t][u];
    return QuatElement::from_rationals(algebra_, c);
  }

  /// Integer structure constants e_s e_t = sum_u C[s][t][u] e_u (base field Q only).
  const std::array<std::array<std::array<BigInt, 4>, 4>, 4>& structure_constants() const {
    if (!algebra_->field()->is_rational_field()) throw DomainError("structure constants are integral over Q only");
    return structure_;
  }

 private:
  AlgebraPtr algebra_;
  RationalMatrix4 basis_;
  RationalMatrix4 inverse_{};
  std::vector<QuatElement> elements_;
  std::array<std::array<std::array<BigInt, 4>, 4>, 4> structure_{};
};

}  // namespace smallgen::quat
