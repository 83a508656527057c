#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "smallgen/error.hpp"

namespace smallgen::exact {

using BigInt = mpz_class;
/// mpq_class keeps values in lowest terms with a positive denominator once canonicalized.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q", "p", or a finite decimal such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.pop_back();
    std::size_t i = 0;
    while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
    v.erase(0, i);
  };
  trim(s);
  if (s.empty()) throw DomainError("empty rational literal");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos && s.find('/') == std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac = s.size() - dot - 1;
      if (digits == "-" || digits == "+" || digits.empty()) throw DomainError("bad decimal");
      if (digits[0] == '+') digits.erase(0, 1);
      BigInt num(digits, 10);
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      return make_rational(num, den);
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal '" + std::string(text) + "'");
    if (q.get_den() == 0) throw DomainError("rational with zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("bad rational literal '" + std::string(text) + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }
inline std::string to_string(const BigInt& z) { return z.get_str(10); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const BigInt& z) { return sgn(z); }

/// Exact rational power with integer exponent (negative allowed for nonzero base).
inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rational(num, den);
}

/// Square root when q is the square of a rational; otherwise false.
inline bool exact_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = make_rational(n, d);
  return true;
}

inline BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace smallgen::exact
