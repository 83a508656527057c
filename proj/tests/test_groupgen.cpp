#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "smallgen/groupgen/census.hpp"
#include "smallgen/groupgen/generation.hpp"

using namespace smallgen;
using namespace smallgen::groupgen;

namespace {

UnitGroup natural_group(long a, long b) { return UnitGroup(quat::QuatOrder::natural(QuatAlgebra::over_rationals(Rational(a), Rational(b)))); }

std::vector<ElementRecord> ball(const UnitGroup& g, const Rational& cap, bool projective = true, unsigned workers = 1) {
  EnumerationJob job;
  job.cap = cap;
  job.projective = projective;
  job.workers = workers;
  return enumerate_unit_ball(g, job).records;
}

std::set<oracle::Q4> as_set(const std::vector<ElementRecord>& rs) {
  std::set<oracle::Q4> out;
  for (const auto& r : rs) out.insert({r.coords[0], r.coords[1], r.coords[2], r.coords[3]});
  return out;
}

std::vector<Coords> nontrivial(const UnitGroup& g, const std::vector<ElementRecord>& rs) {
  std::vector<Coords> out;
  for (const auto& c : coords_of(rs))
    if (!g.is_identity(c, true)) out.push_back(c);
  return out;
}

}  // namespace

TEST(Enumerate, MatchesNaiveBox) {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 3}, {3, 5}, {3, -1}, {6, 5}}) {
    const auto g = natural_group(a, b);
    for (long n : {2, 5, 10}) {
      for (bool projective : {true, false}) {
        const auto got = as_set(ball(g, Rational(n), projective));
        const auto want = oracle::naive_units(a, b, n, 20, projective);
        EXPECT_EQ(got, want) << "(" << a << ", " << b << ") N=" << n << " projective=" << projective;
      }
    }
  }
}

TEST(Enumerate, SwappedPresentationGivesTheSameGroup) {
  // (-1, 3) is rotated to (3, -1): the same units with coordinates permuted
  const auto g = natural_group(-1, 3);
  EXPECT_TRUE(g.swapped());
  const auto rs = ball(g, 10);
  const auto h = natural_group(3, -1);
  EXPECT_EQ(rs.size(), ball(h, 10).size());
  for (const auto& r : rs) EXPECT_EQ(r.element.nrd(), exact::FieldElement(r.element.algebra()->field(), Rational(1)));
}

TEST(Enumerate, SoundMonotoneAndWorkerIndependent) {
  const auto g = natural_group(2, 3);
  const auto small = ball(g, 3), large = ball(g, 6);
  const auto ss = as_set(small), ls = as_set(large);
  EXPECT_TRUE(std::includes(ls.begin(), ls.end(), ss.begin(), ss.end()));
  for (const auto& r : large) {
    EXPECT_TRUE(g.is_unit(r.coords));
    EXPECT_NE(r.matrix.compare_norm(6), hyp::NormComparison::above);
  }
  EXPECT_EQ(as_set(ball(g, 20, true, 1)), as_set(ball(g, 20, true, 3)));
}

TEST(Enumerate, BudgetIsEnforced) {
  EnumerationJob job;
  job.cap = 1000;
  job.candidate_budget = 10;
  EXPECT_THROW(enumerate_unit_ball(natural_group(2, 3), job), BudgetExceeded);
}

TEST(Census, NaturalOrderOfTwoThree) {
  const auto g = natural_group(2, 3);
  const auto rs = ball(g, 50);
  const auto rep = trace_census(rs, 1);
  EXPECT_EQ(rep.element_count, 1025u);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_EQ(rep.undecided, 0u);
  EXPECT_EQ(rep.min_hyperbolic_abs_trace, std::optional<Rational>(4));
  EXPECT_EQ(rep.max_elliptic_abs_trace, std::optional<Rational>(0));
  EXPECT_TRUE(rep.hyperbolic_window_holds);
  EXPECT_TRUE(rep.all_traces_integral);
  for (const auto& [t, n] : rep.trace_counts) EXPECT_TRUE(exact::is_integer(t / 2)) << t;
  for (const auto& r : rs) {
    if (r.isometry.kind == hyp::IsometryKind::elliptic) {
      EXPECT_EQ(r.isometry.order, std::optional<unsigned long>(4));
    }
  }
  EXPECT_TRUE(rep.half_identity_holds);
  EXPECT_FALSE(rep.quarter_identity_holds);
}

TEST(Census, TraceIdentityReadings) {
  const auto rep = trace_census(ball(natural_group(2, 3), 10), 1);
  bool seen = false;
  for (const auto& id : rep.identities) {
    const double t = std::fabs(id.trace.get_d());
    // M(x^2 - (t^2 - 2) x + 1) = u^2 with u + 1/u = t
    const double u = (t + std::sqrt(t * t - 4)) / 2;
    EXPECT_NEAR(id.mahler.mid(), u * u, 1e-9 * u * u);
    EXPECT_NEAR(id.half.mid(), t, 1e-9);
    if (id.trace == 6 || id.trace == -6) {
      seen = true;
      EXPECT_NEAR(id.quarter.mid(), 2 * std::sqrt(2.0), 1e-9);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Census, ParabolicElementsAreFlagged) {
  // (1, 1 / Q) is M2(Q); 1 + i + j + ij maps to a unipotent matrix
  const auto g = natural_group(1, 1);
  const auto rep = trace_census(ball(g, 3), 1);
  EXPECT_GT(rep.class_counts.count("parabolic"), 0u);
  bool flagged = false;
  for (const auto& v : rep.violations) flagged = flagged || v.check == "parabolic";
  EXPECT_TRUE(flagged);
}

TEST(Census, InvariantTraces) {
  const auto rep = invariant_trace_check(ball(natural_group(2, 3), 50));
  EXPECT_TRUE(rep.all_integral);
  EXPECT_TRUE(rep.violations.empty());
  ASSERT_GE(rep.square_traces.size(), 5u);
  EXPECT_EQ(rep.square_traces[0], -2);
  EXPECT_EQ(rep.square_traces[1], 2);
  EXPECT_EQ(rep.invariant_field_degree, 1);
}

TEST(Generation, TrivialCases) {
  const auto g = natural_group(2, 3);
  const auto s = nontrivial(g, ball(g, 8));
  ASSERT_FALSE(s.empty());
  const Coords one = UnitGroup::identity_coords(*g.order());
  // first hyperbolic generator, so that its square is not +-1
  std::size_t h = 0;
  while (g.matrix(s[h]).trace().abs().hi() <= 2) ++h;
  const int idx = static_cast<int>(h) + 1;
  const Coords sq = g.multiply(s[h], s[h]);
  const auto cert = verify_generation(g, s, {one, sq, s[h]}, GenerationJob{});
  ASSERT_EQ(cert.certified, 3u);
  EXPECT_TRUE(cert.results[0].word.empty());
  EXPECT_EQ(cert.results[1].word.size(), 2u);
  EXPECT_TRUE(verify_word(g, s, cert.results[1].word, sq, true));
  EXPECT_EQ(cert.results[2].word, (Word{idx}));
}

TEST(Generation, CertificatesReMultiplyToTheirTargets) {
  const auto g = natural_group(2, 3);
  const auto s = nontrivial(g, ball(g, Rational(29, 4)));
  const auto targets = coords_of(ball(g, 50));
  const auto cert = verify_generation(g, s, targets, GenerationJob{});
  EXPECT_EQ(cert.certified, targets.size());
  for (const auto& r : cert.results) {
    ASSERT_EQ(r.status, CertificateStatus::certified);
    EXPECT_TRUE(verify_word(g, s, r.word, r.target, true));
    EXPECT_LE(static_cast<int>(r.word.size()), 20);
  }
  // a corrupted word fails verification
  auto bad = cert.results.back();
  bad.word.push_back(1);
  EXPECT_FALSE(verify_word(g, s, bad.word, bad.target, true));
}

TEST(Generation, ShortestWordsMatchBreadthFirstOracle) {
  const auto g = natural_group(2, 3);
  const auto s = nontrivial(g, ball(g, 8));
  std::vector<oracle::Q4> os;
  for (const auto& c : s) os.push_back({c[0], c[1], c[2], c[3]});
  const auto dist = oracle::bfs_lengths(os, 2, 3, 1e9, 3);
  GenerationJob job;
  job.greedy = false;
  job.max_length = 3;
  job.forward_depth = 3;
  std::vector<Coords> targets;
  std::vector<int> expect;
  for (const auto& [q, len] : dist) {
    targets.push_back({q[0], q[1], q[2], q[3]});
    expect.push_back(len);
  }
  const auto cert = verify_generation(g, s, targets, job);
  ASSERT_EQ(cert.certified, targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) EXPECT_EQ(static_cast<int>(cert.results[i].word.size()), expect[i]);

  // a larger generating set never needs longer words
  const auto bigger = nontrivial(g, ball(g, 12));
  const auto cert2 = verify_generation(g, bigger, targets, job);
  ASSERT_EQ(cert2.certified, targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) EXPECT_LE(cert2.results[i].word.size(), cert.results[i].word.size());
}

TEST(Generation, DeterministicAcrossWorkers) {
  const auto g = natural_group(2, 3);
  const auto s = nontrivial(g, ball(g, 6));
  const auto targets = coords_of(ball(g, 20));
  GenerationJob job;
  job.target_node_cap = 2000;
  std::vector<GenerationCertificate> runs;
  for (unsigned w : {1u, 2u, 8u}) {
    job.workers = w;
    runs.push_back(verify_generation(g, s, targets, job));
  }
  for (std::size_t k = 1; k < runs.size(); ++k) {
    ASSERT_EQ(runs[k].results.size(), runs[0].results.size());
    for (std::size_t i = 0; i < runs[0].results.size(); ++i) {
      EXPECT_EQ(runs[k].results[i].word, runs[0].results[i].word);
      EXPECT_EQ(runs[k].results[i].status, runs[0].results[i].status);
    }
  }
}

TEST(Generation, RejectsNonUnits) {
  const auto g = natural_group(2, 3);
  EXPECT_THROW(verify_generation(g, {Coords{2, 0, 0, 0}}, {}, GenerationJob{}), DomainError);
}
