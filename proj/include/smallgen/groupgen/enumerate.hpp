#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>
#include <vector>

#include "smallgen/error.hpp"
#include "smallgen/groupgen/unit_group.hpp"
#include "smallgen/hyp/classify.hpp"

namespace smallgen::groupgen {

struct EnumerationJob {
  Rational cap = 1;                      // N
  bool projective = true;                // one representative of +-x
  unsigned workers = 1;
  double candidate_budget = 1e8;
  mpfr_prec_t precision = Interval::kDefaultPrecision;
};

/// An enumerated unit with its matrix data.
struct ElementRecord {
  Coords coords{};  // order basis
  QuatElement element;
  Mat2 matrix;
  Interval norm = Interval::from_int(0);
  bool boundary = false;  // sup norm exactly N
  Rational trace = 0;
  hyp::IsometryClass isometry{};
  std::optional<Interval> translation_length{};
};

struct EnumerationResult {
  std::vector<ElementRecord> records;
  std::array<std::int64_t, 4> box{};  // |c_j| <= box[j]
  int solved_index = 3;               // coordinate obtained from nrd = 1 instead of scanned
  double candidates = 0;              // scanned coordinate triples
  std::size_t boundary_count = 0;
};

namespace detail {

/// floor(sqrt(v)) for v >= 0.
inline int128 isqrt(int128 v) {
  if (v < 0) throw DomainError("isqrt of a negative value");
  int128 s = static_cast<int128>(std::sqrt(static_cast<long double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

/// Integer box containing every c with sup norm of rho(c) at most N: invert the entry map,
/// x0 = (e11 + e22)/2, x1 = (e11 - e22)/(2 sqrt a), x2 = (e12 + e21/b)/2, x3 = (e12 - e21/b)/(2 sqrt a),
/// and push the bounds through the inverse basis with outward rounding.
inline std::array<std::int64_t, 4> coefficient_box(const UnitGroup& g, const Rational& cap) {
  const mpfr_prec_t prec = 128;
  const Interval n(cap, prec);
  const Interval inv_sqrt_a = Interval::from_int(1, prec) / Interval(g.a(), prec).sqrt();
  const Interval half_spread = n * (Interval::from_int(1, prec) + Interval(abs(Rational(1) / g.b()), prec)) /
                               Interval::from_int(2, prec);
  const std::array<Interval, 4> xb{n, n * inv_sqrt_a, half_spread, half_spread * inv_sqrt_a};
  const auto inv = quat::detail::invert(g.order()->basis_matrix());
  std::array<std::int64_t, 4> box{};
  for (int j = 0; j < 4; ++j) {
    Interval s = Interval::from_int(0, prec);
    for (int u = 0; u < 4; ++u) s = s + xb[u] * Interval(abs((*inv)[u][j]), prec);
    const Rational hi = s.hi_rational();
    box[j] = to_int64(exact::floor(hi));
  }
  return box;
}

}  // namespace detail

/// Builds the full record (matrix, norm, trace, classification) for a unit.
inline ElementRecord make_record(const UnitGroup& g, const Coords& c, const Rational* cap, mpfr_prec_t prec) {
  ElementRecord r{c, g.element(c), g.matrix(c, prec)};
  r.norm = r.matrix.sup_norm();
  if (cap) r.boundary = g.compare_norm(c, *cap) == NormComparison::equal;
  r.trace = r.element.trd().rational_part();
  r.isometry = hyp::classify(r.matrix);
  if (r.isometry.kind == hyp::IsometryKind::hyperbolic)
    r.translation_length = Interval::from_int(2, prec) * r.isometry.u_enclosure->abs().log();
  return r;
}

/// Exhaustive list of units with sup norm at most N, sorted lexicographically by order
/// coordinates. Three coordinates are scanned over the box; the fourth solves nrd = 1.
inline EnumerationResult enumerate_unit_ball(const UnitGroup& g, const EnumerationJob& job) {
  if (job.cap < 1) throw DomainError("norm cap N must be at least 1");
  EnumerationResult out;
  out.box = detail::coefficient_box(g, job.cap);

  const auto& nf = g.nrd_form();
  int j = -1;
  for (int t = 0; t < 4; ++t)
    if (nf[t][t] != 0 && (j < 0 || out.box[t] >= out.box[j])) j = t;
  if (j < 0) throw DomainError("reduced norm form has no square terms in the order basis");
  out.solved_index = j;

  std::array<int, 3> scan{};
  for (int t = 0, k = 0; t < 4; ++t)
    if (t != j) scan[k++] = t;
  out.candidates = 1;
  for (int t : scan) out.candidates *= 2.0 * static_cast<double>(out.box[t]) + 1.0;
  if (out.candidates > job.candidate_budget)
    throw BudgetExceeded("coefficient box needs " + std::to_string(static_cast<long long>(out.candidates)) +
                         " candidates, above the budget of " +
                         std::to_string(static_cast<long long>(job.candidate_budget)));

  const int128 dn = g.nrd_denominator();
  const int128 alpha = nf[j][j];
  const std::int64_t k0 = out.box[scan[0]], k1 = out.box[scan[1]], k2 = out.box[scan[2]], kj = out.box[j];

  const unsigned workers = std::max(1u, job.workers);
  auto worker = [&](unsigned w, std::vector<Coords>& found) {
    std::int64_t step = 0;
    for (std::int64_t v0 = -k0; v0 <= k0; ++v0, ++step) {
      if (static_cast<unsigned>(step % workers) != w) continue;
      for (std::int64_t v1 = -k1; v1 <= k1; ++v1)
        for (std::int64_t v2 = -k2; v2 <= k2; ++v2) {
          Coords c{};
          c[scan[0]] = v0;
          c[scan[1]] = v1;
          c[scan[2]] = v2;
          c[j] = 0;
          int128 beta = 0;
          for (int s : scan) beta += static_cast<int128>(nf[s][j]) * c[s];
          const int128 gamma = g.scaled_nrd(c);
          const int128 disc = beta * beta - 4 * alpha * (gamma - dn);
          if (disc < 0) continue;
          const int128 root = detail::isqrt(disc);
          if (root * root != disc) continue;
          for (int sign : {-1, 1}) {
            if (sign == 1 && root == 0) break;
            const int128 num = -beta + sign * root;
            if (num % (2 * alpha) != 0) continue;
            const int128 cj = num / (2 * alpha);
            if (cj < -kj || cj > kj) continue;
            c[j] = static_cast<std::int64_t>(cj);
            if (job.projective && c != projective_canonical(c)) continue;
            if (g.compare_norm(c, job.cap) == NormComparison::above) continue;
            found.push_back(c);
          }
        }
    }
  };

  std::vector<std::vector<Coords>> parts(workers);
  if (workers == 1) {
    worker(0, parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker, w, std::ref(parts[w]));
    for (auto& t : threads) t.join();
  }
  std::vector<Coords> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());

  out.records.reserve(all.size());
  for (const auto& c : all) {
    if (!g.is_unit(c)) throw Error("internal: enumerated element is not a unit");
    out.records.push_back(make_record(g, c, &job.cap, job.precision));
    if (out.records.back().boundary) ++out.boundary_count;
  }
  return out;
}

}  // namespace smallgen::groupgen
