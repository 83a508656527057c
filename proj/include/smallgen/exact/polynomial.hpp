#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "smallgen/error.hpp"
#include "smallgen/exact/interval.hpp"
#include "smallgen/exact/rational.hpp"

namespace smallgen::exact {

/// Dense univariate polynomial with rational coefficients, constant term first.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RatPolynomial constant(const Rational& v) { return RatPolynomial({v}); }
  static RatPolynomial monomial(const Rational& v, std::size_t k) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = v;
    return RatPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPolynomial(std::move(c));
  }
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return RatPolynomial(std::move(c));
  }
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPolynomial(std::move(c));
  }
  friend RatPolynomial operator*(const Rational& s, const RatPolynomial& a) {
    std::vector<Rational> c = a.c_;
    for (auto& v : c) v *= s;
    return RatPolynomial(std::move(c));
  }
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = a.c_;
    if (a.degree() < b.degree()) return {RatPolynomial(), a};
    std::vector<Rational> q(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational inv = Rational(1) / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const Rational f = r[k + b.degree()] * inv;
      q[k] = f;
      if (f == 0) continue;
      for (int j = 0; j <= b.degree(); ++j) r[k + j] -= f * b.c_[j];
    }
    r.resize(b.c_.size() - 1);
    return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
  }

  RatPolynomial monic() const {
    if (is_zero()) return {};
    return (Rational(1) / leading()) * *this;
  }

  /// Monic gcd (zero when both inputs are zero).
  static RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Returns (g, s, t) with s*a + t*b = g, g monic.
  static std::tuple<RatPolynomial, RatPolynomial, RatPolynomial> ext_gcd(const RatPolynomial& a,
                                                                         const RatPolynomial& b) {
    RatPolynomial r0 = a, r1 = b;
    RatPolynomial s0 = constant(1), s1;
    RatPolynomial t0, t1 = constant(1);
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      RatPolynomial s2 = s0 - q * s1;
      RatPolynomial t2 = t0 - q * t1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = Rational(1) / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  RatPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return RatPolynomial(std::move(d));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Dense univariate polynomial over the integers, constant term first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial x() { return IntPolynomial({0, 1}); }
  static IntPolynomial constant(const BigInt& v) { return IntPolynomial(std::vector<BigInt>{v}); }

  /// Clears denominators and returns the primitive integer polynomial with the same roots.
  static IntPolynomial from_rational(const RatPolynomial& p) {
    if (p.is_zero()) return {};
    BigInt l = 1;
    for (const auto& q : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigInt> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) {
      Rational s = q * l;
      c.push_back(s.get_num());
    }
    return IntPolynomial(std::move(c)).primitive_part();
  }

  RatPolynomial to_rational() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.emplace_back(v);
    return RatPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) {
    std::vector<BigInt> c = a.c_;
    for (auto& v : c) v *= s;
    return IntPolynomial(std::move(c));
  }

  IntPolynomial pow(unsigned k) const {
    IntPolynomial r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
  }

  /// Divides out the content and normalizes the leading coefficient to be positive.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> c = c_;
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(c));
  }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPolynomial(std::move(d));
  }

  /// p(-x).
  IntPolynomial negate_variable() const {
    std::vector<BigInt> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPolynomial(std::move(c));
  }

  /// x^deg * p(1/x).
  IntPolynomial reversed() const {
    std::vector<BigInt> c(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(c));
  }

  /// p(x) == x^deg p(1/x) exactly.
  bool is_reciprocal() const {
    for (std::size_t i = 0, j = c_.size(); i < j; ++i) {
      if (c_[i] != c_[c_.size() - 1 - i]) return false;
    }
    return !is_zero();
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }

  int sign_at(const Rational& x) const { return sgn(eval(x)); }

  Interval eval(const Interval& x) const {
    Interval acc = Interval::from_int(0, x.precision());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Interval(Rational(*it), x.precision());
    return acc;
  }

  /// Exact quotient a / b when b divides a over the integers.
  static std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    auto [q, r] = RatPolynomial::divmod(a.to_rational(), b.to_rational());
    if (!r.is_zero()) return std::nullopt;
    std::vector<BigInt> c;
    for (const auto& v : q.coeffs()) {
      if (!is_integer(v)) return std::nullopt;
      c.push_back(v.get_num());
    }
    return IntPolynomial(std::move(c));
  }

  /// Primitive gcd with positive leading coefficient.
  static IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    return from_rational(RatPolynomial::gcd(a.to_rational(), b.to_rational()));
  }

  /// Primitive squarefree part p / gcd(p, p').
  IntPolynomial squarefree_part() const {
    if (degree() <= 0) return primitive_part();
    IntPolynomial g = gcd(*this, derivative());
    auto q = RatPolynomial::divmod(to_rational(), g.to_rational()).first;
    return from_rational(q);
  }

  /// Yun's squarefree decomposition: primitive factors f_k with p = c * prod f_k^k.
  /// Entry k-1 of the result holds f_k (possibly the constant 1).
  std::vector<IntPolynomial> squarefree_decomposition() const {
    std::vector<IntPolynomial> out;
    if (degree() <= 0) return out;
    RatPolynomial f = to_rational().monic();
    RatPolynomial df = f.derivative();
    RatPolynomial a = RatPolynomial::gcd(f, df);
    RatPolynomial b = RatPolynomial::divmod(f, a).first;
    RatPolynomial c = RatPolynomial::divmod(df, a).first;
    RatPolynomial d = c - b.derivative();
    while (b.degree() > 0) {
      RatPolynomial g = RatPolynomial::gcd(b, d);
      out.push_back(from_rational(g));
      b = RatPolynomial::divmod(b, g).first;
      c = RatPolynomial::divmod(d, g).first;
      d = c - b.derivative();
    }
    return out;
  }

  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      BigInt mag = abs(v);
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      if (mag != 1 || i == 0) os << mag.get_str();
      if (i >= 1) os << var;
      if (i >= 2) os << '^' << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// n-th cyclotomic polynomial, built by exact division of x^n - 1 by the lower ones.
inline IntPolynomial cyclotomic(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic index must be positive");
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = -1;
  c[n] = 1;
  IntPolynomial p(std::move(c));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = *IntPolynomial::divide_exact(p, cyclotomic(d));
  }
  return p;
}

/// Given a reciprocal polynomial p of even degree 2m, returns q of degree m with p(x) = x^m q(x + 1/x).
inline IntPolynomial trace_polynomial(const IntPolynomial& p) {
  if (!p.is_reciprocal() || p.degree() % 2 != 0) throw DomainError("trace_polynomial needs an even-degree reciprocal polynomial");
  const int m = p.degree() / 2;
  // Work with the symmetric Laurent coefficients a_k of z^k (k = -m..m), stored at index k + m.
  std::vector<BigInt> lau(p.coeffs());
  std::vector<BigInt> q(static_cast<std::size_t>(m + 1), BigInt(0));
  // binomials on the fly: (z + 1/z)^k = sum_j C(k,j) z^{k-2j}
  for (int k = m; k >= 0; --k) {
    const BigInt coef = lau[static_cast<std::size_t>(k + m)];
    q[static_cast<std::size_t>(k)] = coef;
    if (coef == 0) continue;
    BigInt binom = 1;
    for (int j = 0; j <= k; ++j) {
      lau[static_cast<std::size_t>(k - 2 * j + m)] -= coef * binom;
      binom = binom * (k - j) / (j + 1);
    }
  }
  for (const auto& v : lau) {
    if (v != 0) throw DomainError("trace_polynomial: residual after reduction");
  }
  return IntPolynomial(std::move(q));
}

inline unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace smallgen::exact
