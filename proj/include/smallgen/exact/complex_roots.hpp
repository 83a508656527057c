#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "smallgen/error.hpp"
#include "smallgen/exact/interval.hpp"
#include "smallgen/exact/polynomial.hpp"
#include "smallgen/exact/real_roots.hpp"

namespace smallgen::exact {

/// Rectangular complex interval.
struct ComplexInterval {
  Interval re;
  Interval im;

  static ComplexInterval from_real(const Interval& x) { return {x, Interval::from_int(0, x.precision())}; }

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
    Interval den = b.re.square() + b.im.square();
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  Interval norm_squared() const { return re.square() + im.square(); }
  Interval modulus() const { return norm_squared().sqrt(); }
  ComplexInterval midpoint() const { return {re.midpoint(), im.midpoint()}; }
};

inline ComplexInterval evaluate(const IntPolynomial& p, const ComplexInterval& z) {
  const mpfr_prec_t prec = z.re.precision();
  ComplexInterval acc = ComplexInterval::from_real(Interval::from_int(0, prec));
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * z + ComplexInterval::from_real(Interval(Rational(*it), prec));
  return acc;
}

/// Disk {z : |z - center| <= radius} certified to contain exactly one root.
struct RootDisk {
  ComplexInterval center;  // point intervals
  Interval radius;         // upper bound is what matters
};

namespace detail {

inline std::vector<ComplexInterval> initial_guesses(const IntPolynomial& p, mpfr_prec_t prec) {
  const int n = p.degree();
  const double bound = root_bound(p).get_d();
  const double radius = std::max(0.5, bound / 2.0);
  std::vector<ComplexInterval> z;
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z.push_back({Interval(radius * std::cos(angle), prec).midpoint(), Interval(radius * std::sin(angle), prec).midpoint()});
  }
  return z;
}

/// Aberth-Ehrlich iteration on point values; returns the last correction size.
inline double aberth_iterate(const IntPolynomial& p, std::vector<ComplexInterval>& z, int max_iter, double tol) {
  const IntPolynomial dp = p.derivative();
  const std::size_t n = z.size();
  double last = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    last = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ComplexInterval pv = evaluate(p, z[i]).midpoint();
      if (pv.re.certain_sign() == 0 && pv.im.certain_sign() == 0) continue;
      ComplexInterval dv = evaluate(dp, z[i]).midpoint();
      try {
        ComplexInterval w = (pv / dv).midpoint();
        ComplexInterval s = ComplexInterval::from_real(Interval::from_int(0, z[i].re.precision()));
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          ComplexInterval one = ComplexInterval::from_real(Interval::from_int(1, z[i].re.precision()));
          s = (s + one / (z[i] - z[j])).midpoint();
        }
        ComplexInterval one = ComplexInterval::from_real(Interval::from_int(1, z[i].re.precision()));
        ComplexInterval step = (w / (one - w * s)).midpoint();
        z[i] = (z[i] - step).midpoint();
        last = std::max(last, std::hypot(step.re.mid(), step.im.mid()));
      } catch (const PrecisionExhausted&) {
        // coincident approximations or vanishing derivative: nudge and continue
        z[i] = {(z[i].re + Interval(1e-3 * (static_cast<double>(i) + 1), z[i].re.precision())).midpoint(),
                (z[i].im + Interval(7e-4, z[i].re.precision())).midpoint()};
        last = 1.0;
      }
    }
    if (last < tol) break;
  }
  return last;
}

}  // namespace detail

/// Certified inclusion disks for all complex roots of a squarefree polynomial.
///
/// Approximations come from Aberth-Ehrlich iteration; certification uses the Weierstrass
/// corrections W_i = p(z_i) / (a_n prod_{j!=i} (z_i - z_j)): the disks of radius n|W_i| cover all
/// roots, and a disk disjoint from the others holds exactly one root.
inline std::vector<RootDisk> certified_complex_roots(const IntPolynomial& p, double max_radius,
                                                     const PrecisionPolicy& policy = {}) {
  if (p.degree() < 1) return {};
  const int n = p.degree();
  std::vector<ComplexInterval> z;
  for (mpfr_prec_t prec = policy.start; prec <= policy.cap; prec *= 2) {
    if (z.empty()) {
      z = detail::initial_guesses(p, prec);
    } else {
      for (auto& v : z) v = {v.re.with_precision(prec), v.im.with_precision(prec)};
    }
    const double tol = std::ldexp(1.0, -static_cast<int>(std::min<mpfr_prec_t>(prec, 1000)) + 8);
    detail::aberth_iterate(p, z, 60 + 4 * n, tol);

    std::vector<RootDisk> disks;
    bool ok = true;
    const Interval lead(Rational(p.leading()), prec);
    for (int i = 0; i < n && ok; ++i) {
      try {
        ComplexInterval denom = ComplexInterval::from_real(lead);
        for (int j = 0; j < n; ++j) {
          if (j != i) denom = denom * (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
        }
        ComplexInterval w = evaluate(p, z[static_cast<std::size_t>(i)]) / denom;
        Interval r = w.modulus() * Interval::from_int(n, prec);
        disks.push_back({z[static_cast<std::size_t>(i)], Interval(r.hi(), prec)});
      } catch (const PrecisionExhausted&) {
        ok = false;
      }
    }
    if (!ok) continue;
    for (int i = 0; i < n && ok; ++i) {
      if (disks[static_cast<std::size_t>(i)].radius.hi() > max_radius) ok = false;
      for (int j = i + 1; j < n && ok; ++j) {
        const auto& a = disks[static_cast<std::size_t>(i)];
        const auto& b = disks[static_cast<std::size_t>(j)];
        Interval dist = (a.center - b.center).modulus();
        if (dist.less_equal(a.radius + b.radius) != Decision::no) ok = false;
      }
    }
    if (ok) return disks;
  }
  throw PrecisionExhausted("complex root inclusion not certified at precision cap for " + p.to_string());
}

}  // namespace smallgen::exact
