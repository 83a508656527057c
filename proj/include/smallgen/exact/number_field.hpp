#pragma once

#include <cmath>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "smallgen/error.hpp"
#include "smallgen/exact/complex_roots.hpp"
#include "smallgen/exact/interval.hpp"
#include "smallgen/exact/polynomial.hpp"
#include "smallgen/exact/real_algebraic.hpp"
#include "smallgen/exact/real_roots.hpp"

namespace smallgen::exact {

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline bool has_rational_root(const IntPolynomial& p) {
  if (p.coeff(0) == 0) return true;
  for (const auto& num : positive_divisors(p.coeff(0))) {
    for (const auto& den : positive_divisors(p.leading())) {
      Rational q = make_rational(num, den);
      if (p.sign_at(q) == 0 || p.sign_at(-q) == 0) return true;
    }
  }
  return false;
}

/// Quartic with no rational root: reducible iff it has an integer quadratic factor.
inline bool has_quadratic_factor(const IntPolynomial& p) {
  auto disks = certified_complex_roots(p.squarefree_part(), 1e-20);
  if (p.squarefree_part().degree() != 4) return true;  // repeated roots imply a nontrivial gcd factor
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const auto& a = disks[static_cast<std::size_t>(i)].center;
      const auto& b = disks[static_cast<std::size_t>(j)].center;
      ComplexInterval s = a + b;
      ComplexInterval prod = a * b;
      if (std::abs(s.im.mid()) > 1e-9 || std::abs(prod.im.mid()) > 1e-9) continue;
      for (const auto& l : positive_divisors(p.leading())) {
        const double ld = l.get_d();
        const double c1 = -ld * s.re.mid();
        const double c0 = ld * prod.re.mid();
        if (std::abs(c1 - std::round(c1)) > 1e-6 || std::abs(c0 - std::round(c0)) > 1e-6) continue;
        IntPolynomial q(std::vector<BigInt>{BigInt(static_cast<long>(std::lround(c0))), BigInt(static_cast<long>(std::lround(c1))), l});
        if (IntPolynomial::divide_exact(p, q)) return true;
      }
    }
  }
  return false;
}

}  // namespace detail

/// A totally real number field Q(alpha), alpha the `place_index`-th real root (ascending) of an
/// irreducible integer polynomial, with that root as the distinguished real embedding.
class NumberField {
 public:
  enum class Irreducibility { verified, trusted };

  NumberField(IntPolynomial minpoly, std::size_t place_index, bool trust_irreducible = false)
      : minpoly_(minpoly.primitive_part()), place_(place_index) {
    const int d = minpoly_.degree();
    if (d < 1) throw DomainError("number field polynomial must have degree >= 1");
    if (d <= 4) {
      if (d >= 2 && detail::has_rational_root(minpoly_))
        throw DomainError("field polynomial " + minpoly_.to_string() + " has a rational root");
      if (d == 4 && detail::has_quadratic_factor(minpoly_))
        throw DomainError("field polynomial " + minpoly_.to_string() + " has a quadratic factor");
      irreducibility_ = Irreducibility::verified;
    } else {
      if (!trust_irreducible)
        throw DomainError("irreducibility of degree > 4 polynomials is not checked; set the trusted flag");
      if (minpoly_.squarefree_part().degree() != d) throw DomainError("field polynomial is not squarefree");
      irreducibility_ = Irreducibility::trusted;
    }
    if (count_real_roots(minpoly_) != d) throw DomainError("field polynomial " + minpoly_.to_string() + " is not totally real");
    if (place_ >= static_cast<std::size_t>(d)) throw DomainError("place index out of range");
    for (int i = 0; i < d; ++i) roots_.push_back(RealAlgebraic::root_of(minpoly_, static_cast<std::size_t>(i)));
    monic_ = minpoly_.to_rational().monic();
  }

  /// The rational field, presented by x.
  static std::shared_ptr<const NumberField> rationals() {
    static const auto q = std::make_shared<const NumberField>(IntPolynomial({0, 1}), 0);
    return q;
  }

  const IntPolynomial& minpoly() const { return minpoly_; }
  const RatPolynomial& monic_minpoly() const { return monic_; }
  std::size_t place_index() const { return place_; }
  int degree() const { return minpoly_.degree(); }
  std::size_t place_count() const { return roots_.size(); }
  const RealAlgebraic& root(std::size_t place) const { return roots_.at(place); }
  Irreducibility irreducibility() const { return irreducibility_; }
  bool is_rational_field() const { return degree() == 1; }

  bool same_as(const NumberField& o) const { return this == &o || (minpoly_ == o.minpoly_ && place_ == o.place_); }

 private:
  IntPolynomial minpoly_;
  RatPolynomial monic_;
  std::size_t place_;
  std::vector<RealAlgebraic> roots_;
  Irreducibility irreducibility_ = Irreducibility::verified;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field in the power basis 1, alpha, ..., alpha^(d-1).
class FieldElement {
 public:
  FieldElement() : FieldElement(NumberField::rationals(), Rational(0)) {}

  FieldElement(FieldPtr field, const Rational& q) : field_(std::move(field)) {
    coords_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
    coords_[0] = q;
  }

  FieldElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() != static_cast<std::size_t>(field_->degree()))
      throw DomainError("field element needs exactly degree-many coordinates");
  }

  static FieldElement generator(FieldPtr field) {
    if (field->degree() == 1) {
      // alpha is the root of the linear polynomial
      const auto& p = field->minpoly();
      return FieldElement(field, make_rational(-p.coeff(0), p.coeff(1)));
    }
    std::vector<Rational> c(static_cast<std::size_t>(field->degree()), Rational(0));
    c[1] = 1;
    return FieldElement(std::move(field), std::move(c));
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }
  const Rational& rational_part() const { return coords_[0]; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.needs_lift(b)) return lifted(a, b) == lifted(b, a);
    a.check_same(b);
    return a.coords_ == b.coords_;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    if (a.needs_lift(b)) return lifted(a, b) + lifted(b, a);
    a.check_same(b);
    FieldElement r = a;
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    if (a.needs_lift(b)) return lifted(a, b) - lifted(b, a);
    a.check_same(b);
    FieldElement r = a;
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
    return r;
  }
  friend FieldElement operator-(const FieldElement& a) {
    FieldElement r = a;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.needs_lift(b)) return lifted(a, b) * lifted(b, a);
    a.check_same(b);
    if (a.field_->degree() == 1) return FieldElement(a.field_, a.coords_[0] * b.coords_[0]);
    return from_polynomial(a.field_, a.as_polynomial() * b.as_polynomial());
  }
  friend FieldElement operator*(const Rational& s, const FieldElement& a) {
    FieldElement r = a;
    for (auto& c : r.coords_) c *= s;
    return r;
  }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in a number field");
    if (field_->degree() == 1) return FieldElement(field_, Rational(1) / coords_[0]);
    auto [g, s, t] = RatPolynomial::ext_gcd(as_polynomial(), field_->monic_minpoly());
    if (g.degree() != 0) throw DomainError("element shares a factor with the field polynomial");
    return from_polynomial(field_, s);
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

  FieldElement pow(unsigned k) const {
    FieldElement r(field_, Rational(1)), base = *this;
    while (k) {
      if (k & 1u) r = r * base;
      base = base * base;
      k >>= 1u;
    }
    return r;
  }

  RatPolynomial as_polynomial() const { return RatPolynomial(coords_); }

  /// Enclosure of the image under the real embedding `place`, evaluated at precision `prec`.
  Interval embed_at(std::size_t place, mpfr_prec_t prec) const {
    if (is_rational()) return Interval(coords_[0], prec);
    Interval alpha = field_->root(place).enclosure(prec);
    Interval acc = Interval::from_int(0, prec);
    for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) acc = acc * alpha + Interval(*it, prec);
    return acc;
  }

  /// Enclosure under `place` no wider than `width`.
  Interval embed_at(std::size_t place, double width, const PrecisionPolicy& policy) const {
    return evaluate_to_width([&](mpfr_prec_t p) { return embed_at(place, p); }, width, policy);
  }

  /// Image under the distinguished embedding, enclosure no wider than `width`.
  Interval embed(double width, const PrecisionPolicy& policy = {}) const {
    return embed_at(field_->place_index(), width, policy);
  }

  /// Exact sign under a real embedding (0 iff the element is zero).
  int sign_at(std::size_t place, const PrecisionPolicy& policy = {}) const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(coords_[0]);
    for (mpfr_prec_t p = policy.start;; p *= 2) {
      const int s = embed_at(place, p).certain_sign();
      if (s == 1 || s == -1) return s;
      // nonzero elements separate from zero eventually; the cap guards against runaway cost only
      if (p > policy.cap * 8) throw PrecisionExhausted("sign of nonzero field element undecided");
    }
  }
  int sign(const PrecisionPolicy& policy = {}) const { return sign_at(field_->place_index(), policy); }

  /// Matrix of multiplication by this element on the power basis (row i = alpha^i * x).
  std::vector<std::vector<Rational>> multiplication_matrix() const {
    const std::size_t d = coords_.size();
    std::vector<std::vector<Rational>> m;
    FieldElement basis(field_, Rational(1));
    const FieldElement alpha = generator(field_);
    for (std::size_t i = 0; i < d; ++i) {
      m.push_back((basis * *this).coords_);
      basis = basis * alpha;
    }
    return m;
  }

  /// Characteristic polynomial of multiplication (monic, degree d), via Faddeev-LeVerrier.
  RatPolynomial charpoly() const {
    const auto a = multiplication_matrix();
    const std::size_t n = a.size();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 1; k <= n; ++k) {
      // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
      std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Rational s(0);
          for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
          next[i][j] = s;
        }
      for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
      m = std::move(next);
      Rational tr(0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
      c[n - k] = -tr / static_cast<long>(k);
    }
    return RatPolynomial(std::move(c));
  }

  Rational norm() const {
    const auto cp = charpoly();
    const Rational c0 = cp.coeff(0);
    return (coords_.size() % 2 == 0) ? c0 : -c0;
  }
  Rational trace() const { return -charpoly().coeff(coords_.size() - 1); }

  /// True iff the element is an algebraic integer (its characteristic polynomial is integral).
  bool is_algebraic_integer() const {
    const RatPolynomial cp = charpoly();
    for (const auto& v : cp.coeffs())
      if (!is_integer(v)) return false;
    return true;
  }

  std::string to_string() const {
    if (field_->degree() == 1) return coords_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      if (!first) os << " + ";
      os << '(' << coords_[i].get_str() << ')';
      if (i >= 1) os << "*a";
      if (i >= 2) os << '^' << i;
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  static FieldElement from_polynomial(const FieldPtr& field, const RatPolynomial& p) {
    auto r = RatPolynomial::divmod(p, field->monic_minpoly()).second;
    std::vector<Rational> c(static_cast<std::size_t>(field->degree()), Rational(0));
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
    return FieldElement(field, std::move(c));
  }

  /// Rational constants from a degree-one field combine with elements of any field.
  bool needs_lift(const FieldElement& o) const {
    return (field_->degree() == 1) != (o.field_->degree() == 1);
  }
  static FieldElement lifted(const FieldElement& x, const FieldElement& other) {
    if (x.field_->degree() == 1 && other.field_->degree() != 1) return FieldElement(other.field_, x.coords_[0]);
    return x;
  }

  void check_same(const FieldElement& o) const {
    if (!field_->same_as(*o.field_)) throw DomainError("field elements from different fields");
  }

  FieldPtr field_;
  std::vector<Rational> coords_;
};

}  // namespace smallgen::exact
