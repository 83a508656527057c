#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "smallgen/bounds/generator_bound.hpp"
#include "smallgen/bounds/mahler.hpp"
#include "smallgen/bounds/salem.hpp"
#include "smallgen/bounds/window.hpp"

using namespace smallgen;
using namespace smallgen::bounds;

namespace {

IntPolynomial poly(const std::vector<long long>& c) {
  std::vector<exact::BigInt> z;
  for (long long v : c) z.emplace_back(static_cast<long>(v));
  return IntPolynomial(z);
}

const std::vector<long long> kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

}  // namespace

TEST(Mahler, LehmerPolynomial) {
  const Interval m = mahler_measure(poly(kLehmer), 1e-12);
  EXPECT_GE(m.lo(), 1.1762808);
  EXPECT_LE(m.hi(), 1.1762809);
  EXPECT_NEAR(m.mid(), static_cast<double>(oracle::mahler(kLehmer)), 1e-12);
}

TEST(Mahler, CyclotomicsHaveMeasureOne) {
  for (unsigned n : {1u, 2u, 3u, 5u, 12u, 30u}) {
    const Interval m = mahler_measure(exact::cyclotomic(n), 1e-12);
    EXPECT_TRUE(m.contains(Rational(1))) << n;
    EXPECT_LE(m.width(), 1e-12);
  }
}

TEST(Mahler, MultiplicativeAndMatchesOracle) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3), deg(1, 4);
  auto random_monic = [&] {
    std::vector<long long> c(deg(rng) + 1);
    for (auto& v : c) v = coef(rng);
    c.back() = 1;
    if (c.front() == 0) c.front() = 1;
    return c;
  };
  for (int i = 0; i < 25; ++i) {
    const auto f = random_monic(), g = random_monic();
    const Interval mf = mahler_measure(poly(f), 1e-12);
    const Interval mg = mahler_measure(poly(g), 1e-12);
    const Interval mfg = mahler_measure(poly(oracle::multiply(f, g)), 1e-12);
    EXPECT_NEAR(mfg.mid(), (mf * mg).mid(), 1e-9 * mfg.mid());
    EXPECT_NEAR(mf.mid(), static_cast<double>(oracle::mahler(f)), 1e-9 * mf.mid());
  }
  // repeated factors count with multiplicity
  const auto sq = oracle::multiply({-3, 1}, {-3, 1});
  EXPECT_TRUE(mahler_measure(poly(sq), 1e-12).contains(Rational(9)));
  EXPECT_THROW(mahler_measure(IntPolynomial(), 1e-12), DomainError);
}

TEST(Salem, RecognisesSalemPolynomials) {
  const auto lehmer = is_salem(poly(kLehmer));
  EXPECT_TRUE(lehmer.is_salem);
  EXPECT_NEAR(lehmer.theta->enclosure().mid(), 1.17628081825991750, 1e-14);
  const auto quartic = is_salem(poly({1, -1, -1, -1, 1}));
  EXPECT_TRUE(quartic.is_salem);
  EXPECT_NEAR(quartic.theta->enclosure().mid(), static_cast<double>(oracle::mahler({1, -1, -1, -1, 1})), 1e-12);
  EXPECT_FALSE(is_salem(exact::cyclotomic(5)).is_salem);
  EXPECT_FALSE(is_salem(poly({-1, -1, 1})).is_salem);  // golden ratio: Pisot, not reciprocal
  EXPECT_THROW(is_salem(poly({1, 0, 2})), DomainError);
}

TEST(Window, MatchesOracle) {
  for (unsigned long d = 1; d <= 12; ++d) {
    const auto w = trace_window(d);
    EXPECT_NEAR(w.lower.enclosure().mid(), static_cast<double>(oracle::window_lower(d)), 1e-15) << d;
    EXPECT_NEAR(w.upper.mid(), static_cast<double>(oracle::window_upper(d)), 1e-15) << d;
    const auto [emax, m] = oracle::elliptic_max(d);
    EXPECT_EQ(w.elliptic_max.m, m) << d;
    EXPECT_NEAR(w.elliptic_max.value.enclosure().mid(), static_cast<double>(emax), 1e-15) << d;
  }
  const auto w2 = trace_window(2);
  EXPECT_NEAR(w2.lower.enclosure().mid(), 1.4142136, 1e-7);
  EXPECT_NEAR(w2.upper.mid(), 2.0000007, 1e-7);
  EXPECT_NEAR(trace_window(1).upper.mid(), 2.0000854, 1e-7);
  EXPECT_LT(trace_window(1).upper_argument.hi(), 0);
}

TEST(Window, TwoCosPiOverM) {
  for (unsigned long m = 1; m <= 40; ++m)
    EXPECT_NEAR(two_cos_pi_over(m).enclosure().mid(), 2 * std::cos(M_PI / static_cast<double>(m)), 1e-14) << m;
}

TEST(Voutier, MatchesOracleAndFlagsSmallN) {
  for (unsigned long n = 2; n <= 200; ++n) {
    const auto v = voutier_lower_bound(n);
    EXPECT_NEAR(v.value.mid(), static_cast<double>(oracle::voutier(n)), 1e-15) << n;
    EXPECT_EQ(v.informative, n > 2) << n;
  }
  EXPECT_NEAR(voutier_lower_bound(4).value.mid(), 0.0032701, 1e-7);
  EXPECT_THROW(voutier_lower_bound(1), DomainError);
}

TEST(Injectivity, DeltaZeroMatchesOracle) {
  for (unsigned long d = 1; d <= 50; ++d)
    EXPECT_NEAR(delta_zero(d).mid(), static_cast<double>(oracle::delta0(d)), 1e-12 * static_cast<double>(oracle::delta0(d))) << d;
  EXPECT_NEAR(delta_zero(2).mid(), 3.342e-7, 0.01 * 3.342e-7);
}

TEST(Injectivity, SafetyConstantAgreesWithPlainSweep) {
  for (unsigned long d_max : {1ul, 10ul, 100ul, 3000ul}) {
    const auto s = compute_safety_constant(d_max);
    const auto [best, arg] = oracle::safety_sweep(d_max);
    EXPECT_EQ(s.argmin, arg) << d_max;
    EXPECT_NEAR(s.c.mid(), static_cast<double>(best / 5), 1e-6 * static_cast<double>(best)) << d_max;
  }
  // block pruning gives the same answer as the exhaustive sweep
  const auto pruned = compute_safety_constant(5000);
  const auto full = compute_safety_constant(5000, true);
  EXPECT_EQ(pruned.argmin, full.argmin);
  EXPECT_NEAR(pruned.c.mid(), full.c.mid(), 1e-12 * full.c.mid());
}

TEST(Spectral, DecayExponent) {
  const auto s = decay_exponent(SpectralData::congruence_lambda());
  ASSERT_TRUE(s.exact.has_value());
  EXPECT_EQ(*s.exact, Rational(25, 32));
  EXPECT_EQ(decay_exponent(Rational(1, 4)).exact, std::optional<Rational>(Rational(1)));
  const auto irr = decay_exponent(Rational(1, 8));  // 1 - sqrt(1/2)
  EXPECT_FALSE(irr.exact.has_value());
  EXPECT_NEAR(irr.value.mid(), 1 - std::sqrt(0.5), 1e-15);
  EXPECT_THROW(decay_exponent(Rational(1, 3)), DomainError);
  EXPECT_EQ(SpectralData::from_lambda1(Rational(1, 2)).lambda, Rational(1, 4));
}

TEST(GeneratorBound, CongruenceExponentsAreExact) {
  BoundInput in;
  in.variant = BoundVariant::congruence;
  const auto r = generator_bound(in);
  EXPECT_EQ(*r.s.exact, Rational(25, 32));
  EXPECT_EQ(*r.main_exponent.exact, Rational(384, 5));
  EXPECT_EQ(*r.vol_exponent.exact, Rational(192, 25));
  EXPECT_EQ(r.bound_exact, std::optional<Rational>(Rational(1)));
}

TEST(GeneratorBound, SubstitutionReproducesTheStatedExponent) {
  BoundInput in;
  in.d = 2;
  const auto r = generator_bound(in);
  EXPECT_TRUE(r.substitution.matches);
  EXPECT_EQ(r.substitution.derived_numerator, Rational(60));
  exact::Rational two60(1);
  for (int i = 0; i < 60; ++i) two60 *= 2;
  EXPECT_EQ(r.bound_exact, std::optional<Rational>(two60));
  // the internal form vol^(6/s) delta^(-30/s) with delta = d^-2 is the same number
  EXPECT_TRUE(r.internal_bound.contains(two60));
}

TEST(GeneratorBound, MonotoneInVolumeAndDegree) {
  Rational prev = 0;
  for (long d = 1; d <= 6; ++d) {
    BoundInput in;
    in.d = static_cast<unsigned long>(d);
    in.vol = Rational(3, 2);
    const auto r = generator_bound(in);
    ASSERT_TRUE(r.bound_exact.has_value());
    EXPECT_GT(*r.bound_exact, prev);
    prev = *r.bound_exact;
  }
}

TEST(GeneratorBound, TorsionFreeReportsBothExponents) {
  BoundInput in;
  in.d = 3;
  in.variant = BoundVariant::torsion_free;
  const auto r = generator_bound(in);
  EXPECT_EQ(*r.main_exponent.exact, Rational(180));
  EXPECT_EQ(*r.alternative_exponent->exact, Rational(120));
  EXPECT_FALSE(r.substitution.matches);
  EXPECT_NEAR(std::log(r.bound.mid()), 180 * std::log(std::log(3.0)), 1e-9);
}

TEST(GeneratorBound, SalemVariantNeedsMs) {
  BoundInput in;
  in.variant = BoundVariant::salem;
  EXPECT_THROW(generator_bound(in), DomainError);
  in.m_salem = Rational(11762808, 10000000);
  const auto r = generator_bound(in);
  EXPECT_EQ(*r.main_exponent.exact, Rational(-60));
  EXPECT_GT(r.bound.lo(), 1);
}
