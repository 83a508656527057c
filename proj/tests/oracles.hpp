#pragma once

// Reference implementations used only by the tests. They share no code with the library:
// plain long double, std::complex and machine integers.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using ld = long double;

inline ld loglog_ratio(unsigned long n) {
  const ld l = std::log(static_cast<ld>(n));
  return std::log(l) / l;
}

inline ld voutier(unsigned long n) {
  const ld r = loglog_ratio(n);
  return r * r * r / 4;
}

inline ld window_lower(unsigned long d) { return 2 * std::cos(std::numbers::pi_v<ld> / (2 * d)); }

inline ld window_upper(unsigned long d) {
  const ld r = loglog_ratio(2 * d);
  return 2 * std::cosh(r * r * r / 16);
}

inline ld delta0(unsigned long d) {
  const ld r = loglog_ratio(2 * d);
  const ld x = r * r * r / 16;
  const ld sh = std::sinh(x / 2);
  return std::min(2 * sh * sh, 1 - std::cos(std::numbers::pi_v<ld> / (2 * d)));
}

/// Plain sweep of d^2 delta_0(d) over 1..d_max.
inline std::pair<ld, unsigned long> safety_sweep(unsigned long d_max) {
  ld best = 0;
  unsigned long arg = 0;
  for (unsigned long d = 1; d <= d_max; ++d) {
    const ld v = static_cast<ld>(d) * d * delta0(d);
    if (arg == 0 || v < best) {
      best = v;
      arg = d;
    }
  }
  return {best, arg};
}

inline unsigned long phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

/// max 2cos(pi/m) over phi(2m) <= 4d by direct search.
inline std::pair<ld, unsigned long> elliptic_max(unsigned long d) {
  unsigned long best = 1;
  for (unsigned long m = 1; m <= 64 * d * d; ++m)
    if (phi(2 * m) <= 4 * d) best = m;
  return {2 * std::cos(std::numbers::pi_v<ld> / best), best};
}

/// Roots by Durand-Kerner; coefficients constant term first.
inline std::vector<std::complex<ld>> roots(const std::vector<long long>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<ld>> z(n);
  const std::complex<ld> seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
  const ld lead = static_cast<ld>(c.back());
  auto eval = [&](std::complex<ld> x) {
    std::complex<ld> v = 0;
    for (int k = n; k >= 0; --k) v = v * x + static_cast<ld>(c[k]);
    return v / lead;
  };
  for (int it = 0; it < 5000; ++it) {
    ld change = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<ld> den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const auto step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

inline ld mahler(const std::vector<long long>& c) {
  ld m = std::abs(static_cast<ld>(c.back()));
  for (const auto& z : roots(c)) m *= std::max<ld>(1, std::abs(z));
  return m;
}

inline std::vector<long long> multiply(const std::vector<long long>& f, const std::vector<long long>& g) {
  std::vector<long long> h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
  return h;
}

// Quaternion algebra (a, b / Q) with a > 0, natural order Z<1, i, j, ij>.
using Q4 = std::array<long long, 4>;

inline Q4 qmul(const Q4& x, const Q4& y, long long a, long long b) {
  return {x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
          x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
          x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

inline long long qnrd(const Q4& x, long long a, long long b) {
  return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
}

/// Sup norm of [[x0 + x1 s, x2 + x3 s], [b (x2 - x3 s), x0 - x1 s]], s = sqrt(a).
inline ld qnorm(const Q4& x, long long a, long long b) {
  const ld s = std::sqrt(static_cast<ld>(a));
  const ld e[4] = {x[0] + x[1] * s, x[2] + x[3] * s, b * (x[2] - x[3] * s), x[0] - x[1] * s};
  ld m = 0;
  for (ld v : e) m = std::max(m, std::fabs(v));
  return m;
}

inline Q4 canon(Q4 x) {
  for (auto v : x) {
    if (v > 0) return x;
    if (v < 0) {
      for (auto& w : x) w = -w;
      return x;
    }
  }
  return x;
}

/// Every unit with sup norm <= N in the box [-R, R]^4.
inline std::set<Q4> naive_units(long long a, long long b, ld N, int R, bool projective) {
  std::set<Q4> out;
  for (long long x1 = -R; x1 <= R; ++x1)
    for (long long x2 = -R; x2 <= R; ++x2)
      for (long long x3 = -R; x3 <= R; ++x3)
        for (long long x0 = -R; x0 <= R; ++x0) {
          const Q4 x{x0, x1, x2, x3};
          if (qnrd(x, a, b) != 1) continue;
          if (qnorm(x, a, b) > N + 1e-12L) continue;
          out.insert(projective ? canon(x) : x);
        }
  return out;
}

/// Word-length distances from 1 in the Cayley graph of S (projective), restricted to norm <= M.
inline std::map<Q4, int> bfs_lengths(const std::vector<Q4>& gens, long long a, long long b, ld M, int max_len) {
  std::vector<Q4> s;
  for (const auto& g : gens) {
    s.push_back(g);
    s.push_back({g[0], -g[1], -g[2], -g[3]});
  }
  std::map<Q4, int> dist{{Q4{1, 0, 0, 0}, 0}};
  std::vector<Q4> frontier{{1, 0, 0, 0}};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Q4> next;
    for (const auto& x : frontier)
      for (const auto& g : s) {
        const Q4 y = canon(qmul(x, g, a, b));
        if (dist.count(y) || qnorm(y, a, b) > M) continue;
        dist[y] = len;
        next.push_back(y);
      }
    frontier = std::move(next);
  }
  return dist;
}

/// (a, b)_p for squarefree nonzero a, b by searching primitive zeros of z^2 - a x^2 - b y^2 mod p^k
/// that lift by Hensel's lemma; p = 0 is the real place.
inline int hilbert(long long a, long long b, long long p) {
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  const int v2 = p == 2 ? 1 : 0;
  const int k = 2 * (v2 + 1) + 1;
  long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  auto mod = [&](long long v) { return ((v % pk) + pk) % pk; };
  auto val = [&](long long v) {
    v = mod(v);
    if (v == 0) return k;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    return e;
  };
  std::map<long long, std::vector<long long>> sqrt_of;
  for (long long z = 0; z < pk; ++z) sqrt_of[mod(z * z)].push_back(z);
  for (long long x = 0; x < pk; ++x)
    for (long long y = 0; y < pk; ++y) {
      const auto it = sqrt_of.find(mod(a * x * x + b * y * y));
      if (it == sqrt_of.end()) continue;
      for (long long z : it->second) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        const int e = std::min({val(2 * z), val(2 * a * x), val(2 * b * y)});
        if (2 * e + 1 <= k) return 1;
      }
    }
  return -1;
}

}  // namespace oracle
