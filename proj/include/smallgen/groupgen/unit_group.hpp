#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "smallgen/error.hpp"
#include "smallgen/hyp/mat2.hpp"
#include "smallgen/quat/embedding.hpp"
#include "smallgen/quat/order.hpp"

namespace smallgen::groupgen {

using exact::BigInt;
using exact::Interval;
using exact::Rational;
using hyp::Mat2;
using hyp::NormComparison;
using quat::AlgebraPtr;
using quat::QuatAlgebra;
using quat::QuatElement;
using quat::QuatOrder;
using quat::RationalMatrix4;

using int128 = __int128;

/// Coordinates in the order basis.
using Coords = std::array<std::int64_t, 4>;

struct CoordsHash {
  std::size_t operator()(const Coords& c) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : c) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h;
  }
};

inline std::int64_t narrow(int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("integer overflow in unit arithmetic");
  return static_cast<std::int64_t>(v);
}

inline std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw Error("integer overflow converting " + z.get_str());
  return z.get_si();
}

/// Exact sign of p + q sqrt(r), r >= 0.
inline int surd_sign(int128 p, int128 q, std::int64_t r) {
  const int sp = (p > 0) - (p < 0);
  const int sq = (q > 0) - (q < 0);
  if (sq == 0 || r == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const int128 lhs = p * p;
  const int128 rhs = q * q * r;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

/// Canonical sign in projective mode: first nonzero coordinate positive.
inline Coords projective_canonical(Coords c) {
  for (auto v : c) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : c) w = -w;
    break;
  }
  return c;
}

/// Integer model of the unit group O^1 for an order over Q, presented with a > 0.
///
/// Every quantity the search needs is an integer form in the order coordinates c:
/// - products through structure constants;
/// - D_n nrd(c) with D_n clearing denominators;
/// - matrix entries as (P_i(c) + Q_i(c) sqrt r) / D_e, where r = num(a) den(a);
/// - the Frobenius norm |rho(c)|_F^2 = (A(c) + B(c) sqrt r) / D_e^2, which equals 2 cosh d(rho(c) i, i).
class UnitGroup {
 public:
  /// `order` may use any presentation with a or b positive; the basis is rotated so that a > 0.
  explicit UnitGroup(const QuatOrder& order) : original_(order.algebra()) {
    const auto& alg = *order.algebra();
    if (!alg.field()->is_rational_field()) throw DomainError("unit enumeration is implemented over Q only");
    const quat::NormalizedAlgebra norm = quat::normalize(order.algebra());
    swapped_ = norm.swapped;
    RationalMatrix4 basis = order.basis_matrix();
    if (swapped_)
      for (auto& row : basis) row = {row[0], row[2], row[1], -row[3]};
    order_ = std::make_shared<const QuatOrder>(norm.algebra, basis);
    const Rational a = norm.algebra->a().rational_part();
    const Rational b = norm.algebra->b().rational_part();
    a_ = a;
    b_ = b;
    one_ = identity_coords(*order_);

    // structure constants
    const auto& sc = order_->structure_constants();
    for (int s = 0; s < 4; ++s)
      for (int t = 0; t < 4; ++t)
        for (int u = 0; u < 4; ++u)
          if (sc[s][t][u] != 0) terms_.push_back({s, t, u, to_int64(sc[s][t][u])});

    // conjugation as an integer matrix on coordinates
    for (int t = 0; t < 4; ++t) {
      const auto c = order_->coordinates(order_->basis()[static_cast<std::size_t>(t)].conj());
      for (int u = 0; u < 4; ++u) conj_[t][u] = to_int64(c[u].rational_part().get_num());
    }

    // sqrt a = sqrt(r) / q with r = num * den
    const BigInt an = a.get_num(), ad = a.get_den();
    r_ = to_int64(an * ad);
    const Rational inv_q = Rational(1) / Rational(ad);

    // natural coordinates x_u = sum_t c_t B[t][u]; entries as alpha + beta sqrt r, rational forms
    std::array<std::array<Rational, 4>, 4> alpha{}, beta{};
    for (int t = 0; t < 4; ++t) {
      const auto& row = basis[t];
      alpha[0][t] = row[0];
      beta[0][t] = row[1] * inv_q;
      alpha[1][t] = row[2];
      beta[1][t] = row[3] * inv_q;
      alpha[2][t] = b * row[2];
      beta[2][t] = -b * row[3] * inv_q;
      alpha[3][t] = row[0];
      beta[3][t] = -row[1] * inv_q;
    }
    BigInt de = 1;
    for (int i = 0; i < 4; ++i)
      for (int t = 0; t < 4; ++t) {
        mpz_lcm(de.get_mpz_t(), de.get_mpz_t(), alpha[i][t].get_den_mpz_t());
        mpz_lcm(de.get_mpz_t(), de.get_mpz_t(), beta[i][t].get_den_mpz_t());
      }
    de_ = to_int64(de);
    for (int i = 0; i < 4; ++i)
      for (int t = 0; t < 4; ++t) {
        entry_p_[i][t] = to_int64(Rational(alpha[i][t] * Rational(de)).get_num());
        entry_q_[i][t] = to_int64(Rational(beta[i][t] * Rational(de)).get_num());
      }

    // reduced norm as a quadratic form in c: nrd = sum_{s,t} N[s][t] c_s c_t (symmetric)
    std::array<Rational, 4> diag{Rational(1), -a, -b, a * b};
    std::array<std::array<Rational, 4>, 4> nform{};
    for (int s = 0; s < 4; ++s)
      for (int t = 0; t < 4; ++t)
        for (int u = 0; u < 4; ++u) nform[s][t] += basis[s][u] * basis[t][u] * diag[u];
    BigInt dn = 1;
    for (int s = 0; s < 4; ++s)
      for (int t = 0; t < 4; ++t) {
        const Rational v = s == t ? nform[s][t] : 2 * nform[s][t];
        mpz_lcm(dn.get_mpz_t(), dn.get_mpz_t(), v.get_den_mpz_t());
      }
    dn_ = to_int64(dn);
    for (int s = 0; s < 4; ++s)
      for (int t = 0; t < 4; ++t) {
        const Rational v = (s == t ? nform[s][t] : 2 * nform[s][t]) * Rational(dn);
        nrd_[s][t] = to_int64(v.get_num());  // diagonal: coefficient of c_s^2; off-diagonal: of c_s c_t
      }
  }

  const std::shared_ptr<const QuatOrder>& order() const { return order_; }
  const AlgebraPtr& original_algebra() const { return original_; }
  const AlgebraPtr& algebra() const { return order_->algebra(); }
  bool swapped() const { return swapped_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t radicand() const { return r_; }
  std::int64_t entry_denominator() const { return de_; }
  std::int64_t nrd_denominator() const { return dn_; }
  const std::array<std::array<std::int64_t, 4>, 4>& nrd_form() const { return nrd_; }
  const std::array<std::array<std::int64_t, 4>, 4>& entry_p() const { return entry_p_; }
  const std::array<std::array<std::int64_t, 4>, 4>& entry_q() const { return entry_q_; }

  static Coords identity_coords(const QuatOrder& order) {
    const auto c = order.coordinates(QuatElement::one(order.algebra()));
    Coords out{};
    for (int u = 0; u < 4; ++u) out[u] = to_int64(c[u].rational_part().get_num());
    return out;
  }
  const Coords& identity() const { return one_; }

  Coords multiply(const Coords& x, const Coords& y) const {
    std::array<int128, 4> z{};
    for (const auto& t : terms_) z[t.u] += static_cast<int128>(x[t.s]) * y[t.t] * t.c;
    return {narrow(z[0]), narrow(z[1]), narrow(z[2]), narrow(z[3])};
  }

  /// conj(x) = x^-1 for reduced norm 1.
  Coords inverse(const Coords& x) const {
    std::array<int128, 4> z{};
    for (int t = 0; t < 4; ++t)
      for (int u = 0; u < 4; ++u) z[u] += static_cast<int128>(x[t]) * conj_[t][u];
    return {narrow(z[0]), narrow(z[1]), narrow(z[2]), narrow(z[3])};
  }

  /// D_n nrd(c).
  int128 scaled_nrd(const Coords& c) const {
    int128 acc = 0;
    for (int s = 0; s < 4; ++s) {
      acc += static_cast<int128>(nrd_[s][s]) * c[s] * c[s];
      for (int t = s + 1; t < 4; ++t) acc += static_cast<int128>(nrd_[s][t]) * c[s] * c[t];
    }
    return acc;
  }
  bool is_unit(const Coords& c) const { return scaled_nrd(c) == dn_; }

  /// D_e * entry_i = P + Q sqrt r.
  std::pair<int128, int128> entry(const Coords& c, int i) const {
    int128 p = 0, q = 0;
    for (int t = 0; t < 4; ++t) {
      p += static_cast<int128>(entry_p_[i][t]) * c[t];
      q += static_cast<int128>(entry_q_[i][t]) * c[t];
    }
    return {p, q};
  }

  /// Exact comparison of the sup norm with cap = n/m.
  NormComparison compare_norm(const Coords& c, const Rational& cap) const {
    const int128 m = static_cast<int128>(to_int64(cap.get_den()));
    const int128 t = static_cast<int128>(to_int64(cap.get_num())) * de_;
    bool equal = false;
    for (int i = 0; i < 4; ++i) {
      auto [p, q] = entry(c, i);
      if (surd_sign(p, q, r_) < 0) {
        p = -p;
        q = -q;
      }
      const int s = surd_sign(m * p - t, m * q, r_);
      if (s > 0) return NormComparison::above;
      if (s == 0) equal = true;
    }
    return equal ? NormComparison::equal : NormComparison::below;
  }

  /// D_e^2 |rho(c)|_F^2 = A + B sqrt r.
  std::pair<int128, int128> frobenius(const Coords& c) const {
    int128 A = 0, B = 0;
    for (int i = 0; i < 4; ++i) {
      const auto [p, q] = entry(c, i);
      A += p * p + q * q * r_;
      B += 2 * p * q;
    }
    return {A, B};
  }

  /// Sign of frobenius(x) - frobenius(y).
  int compare_frobenius(const std::pair<int128, int128>& x, const std::pair<int128, int128>& y) const {
    return surd_sign(x.first - y.first, x.second - y.second, r_);
  }

  bool is_identity(const Coords& c, bool projective) const {
    const Coords& one = one_;
    if (c == one) return true;
    if (!projective) return false;
    return c == Coords{-one[0], -one[1], -one[2], -one[3]};
  }

  /// The element in the presentation the order was given in.
  QuatElement element(const Coords& c) const {
    const QuatElement x = order_->element({BigInt(c[0]), BigInt(c[1]), BigInt(c[2]), BigInt(c[3])});
    if (!swapped_) return x;
    const auto& v = x.coords();
    return QuatElement(original_, {v[0], v[2], v[1], -v[3]});
  }

  /// rho(c) in the normalized presentation.
  Mat2 matrix(const Coords& c, mpfr_prec_t prec = Interval::kDefaultPrecision) const {
    const QuatElement x = order_->element({BigInt(c[0]), BigInt(c[1]), BigInt(c[2]), BigInt(c[3])});
    return quat::embed_matrix(x, prec);
  }

 private:
  struct Term {
    int s, t, u;
    std::int64_t c;
  };

  AlgebraPtr original_;
  std::shared_ptr<const QuatOrder> order_;
  bool swapped_ = false;
  Coords one_{};
  Rational a_, b_;
  std::vector<Term> terms_;
  std::array<std::array<std::int64_t, 4>, 4> conj_{};
  std::int64_t r_ = 1;
  std::int64_t de_ = 1;
  std::int64_t dn_ = 1;
  std::array<std::array<std::int64_t, 4>, 4> entry_p_{};
  std::array<std::array<std::int64_t, 4>, 4> entry_q_{};
  std::array<std::array<std::int64_t, 4>, 4> nrd_{};
};

}  // namespace smallgen::groupgen
