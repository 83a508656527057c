#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "smallgen/error.hpp"
#include "smallgen/exact/rational.hpp"

namespace smallgen::quat {

using exact::BigInt;
using exact::Rational;

/// A place of Q: a rational prime or the real place.
struct Place {
  BigInt prime;  // 0 encodes the infinite place

  static Place infinity() { return Place{BigInt(0)}; }
  static Place finite(const BigInt& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw DomainError("place " + p.get_str() + " is not a prime");
    return Place{p};
  }
  bool is_infinite() const { return prime == 0; }
  std::string to_string() const { return is_infinite() ? "inf" : prime.get_str(); }
};

namespace detail {

/// p-adic valuation of a nonzero integer; strips the factor from n.
inline unsigned long strip(BigInt& n, const BigInt& p) {
  return mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

/// Odd integer u: (u - 1)/2 mod 2.
inline int epsilon(const BigInt& u) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 4);
  return r == 3 ? 1 : 0;
}

/// Odd integer u: (u^2 - 1)/8 mod 2.
inline int omega(const BigInt& u) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

/// a = num * den has the same square class as num/den.
inline BigInt square_class_integer(const Rational& q) { return q.get_num() * q.get_den(); }

}  // namespace detail

/// Hilbert symbol (a, b)_v over Q: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution in Q_v.
inline int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw DomainError("hilbert_symbol: arguments must be nonzero");
  if (place.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const BigInt& p = place.prime;
  BigInt u = detail::square_class_integer(a);
  BigInt v = detail::square_class_integer(b);
  const unsigned long alpha = detail::strip(u, p);
  const unsigned long beta = detail::strip(v, p);
  if (p == 2) {
    const int e = detail::epsilon(u) * detail::epsilon(v) + static_cast<int>(alpha % 2) * detail::omega(v) +
                  static_cast<int>(beta % 2) * detail::omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int result = 1;
  // (-1)^(alpha beta (p-1)/2)
  if ((alpha * beta) % 2 == 1 && detail::epsilon(p) == 1) result = -result;
  if (beta % 2 == 1) result *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2 == 1) result *= mpz_legendre(v.get_mpz_t(), p.get_mpz_t());
  return result;
}

/// Prime factors of |n| by trial division (desk-scale inputs).
inline std::vector<BigInt> prime_factors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> out;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Places where (a, b / Q) ramifies.
struct RamificationSet {
  std::vector<BigInt> finite_places;  // sorted
  bool infinite_ramified = false;

  std::size_t size() const { return finite_places.size() + (infinite_ramified ? 1 : 0); }
  bool is_division() const { return size() > 0; }
  /// Reduced discriminant: product of the ramified primes.
  BigInt discriminant() const {
    BigInt d = 1;
    for (const auto& p : finite_places) d *= p;
    return d;
  }
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < finite_places.size(); ++i) s += (i ? ", " : "") + finite_places[i].get_str();
    if (infinite_ramified) s += std::string(finite_places.empty() ? "" : ", ") + "inf";
    return s + "}";
  }
};

/// Ramification of (a, b / Q), checking only primes dividing 2ab and the real place.
inline RamificationSet ramification_set(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw DomainError("ramification_set: arguments must be nonzero");
  RamificationSet r;
  BigInt m = 2 * detail::square_class_integer(a) * detail::square_class_integer(b);
  for (const auto& p : prime_factors(m)) {
    if (hilbert_symbol(a, b, Place{p}) == -1) r.finite_places.push_back(p);
  }
  std::sort(r.finite_places.begin(), r.finite_places.end());
  r.infinite_ramified = hilbert_symbol(a, b, Place::infinity()) == -1;
  if (r.size() % 2 != 0) throw Error("ramification set of odd size: Hilbert reciprocity violated");
  return r;
}

}  // namespace smallgen::quat
