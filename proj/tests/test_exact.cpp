#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "smallgen/exact/complex_roots.hpp"
#include "smallgen/exact/number_field.hpp"
#include "smallgen/exact/real_algebraic.hpp"
#include "smallgen/exact/surd.hpp"

using namespace smallgen;
using namespace smallgen::exact;

namespace {

FieldPtr q_sqrt2(std::size_t place = 1) { return std::make_shared<const NumberField>(IntPolynomial({-2, 0, 1}), place); }

}  // namespace

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational(" -7 "), Rational(-7));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("+2"), Rational(2));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Interval, RoundsOutward) {
  const Interval third(Rational(1, 3), 53);
  EXPECT_TRUE(third.contains(Rational(1, 3)));
  EXPECT_FALSE(third.is_point());
  const Interval two = Interval::from_int(2, 64).sqrt().square();
  EXPECT_TRUE(two.contains(Rational(2)));
  EXPECT_TRUE((Interval::pi(80).cos() + Interval::from_int(1, 80)).contains_zero());
}

TEST(Interval, CertifiedComparisons) {
  const Interval a(Rational(1), 64), b(Rational(2), 64);
  EXPECT_EQ(a.less_than(b), Decision::yes);
  EXPECT_EQ(b.less_than(a), Decision::no);
  const Interval wide(Rational(0), Rational(3), 64);
  EXPECT_EQ(a.less_than(wide), Decision::undecided);
}

TEST(Interval, TranscendentalsAgreeWithLongDouble) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    const Interval X(x, 128);
    EXPECT_TRUE(X.log().inflate(Interval(1e-15, 64)).contains(static_cast<double>(std::log(static_cast<long double>(x)))));
    EXPECT_NEAR(X.cosh().mid(), std::cosh(x), 1e-12 * std::cosh(x));
    EXPECT_NEAR(X.sinh().mid(), std::sinh(x), 1e-12 * std::cosh(x));
    const Interval c = X.cos();
    EXPECT_TRUE(c.inflate(Interval(1e-15, 64)).contains(std::cos(x)));
    if (x < 3.14) {
      EXPECT_NEAR(c.mid(), std::cos(x), 1e-14);  // tight on [0, pi]
    }
  }
}

TEST(Polynomial, CyclotomicAndPhi) {
  EXPECT_EQ(cyclotomic(1).to_string(), IntPolynomial({-1, 1}).to_string());
  EXPECT_EQ(cyclotomic(12).to_string(), IntPolynomial({1, 0, -1, 0, 1}).to_string());
  for (unsigned n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic(n).degree(), static_cast<int>(oracle::phi(n))) << n;
}

TEST(Polynomial, TracePolynomialOfReciprocal) {
  // x^4 - x^3 - x^2 - x + 1 = x^2 q(x + 1/x) with q = y^2 - y - 3
  const auto q = trace_polynomial(IntPolynomial({1, -1, -1, -1, 1}));
  EXPECT_EQ(q.to_string(), IntPolynomial({-3, -1, 1}).to_string());
}

TEST(Polynomial, SquarefreeDecomposition) {
  const IntPolynomial f = IntPolynomial({-1, 1}).pow(3) * IntPolynomial({1, 0, 1});
  const auto parts = f.squarefree_decomposition();
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].degree(), 2);
  EXPECT_EQ(parts[1].degree(), 0);
  EXPECT_EQ(parts[2].degree(), 1);
}

TEST(RealRoots, SturmCountMatchesDistinctIntegerRoots) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> root(-30, 30), deg(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<int> roots;
    const int n = deg(rng);
    while (static_cast<int>(roots.size()) < n) roots.insert(root(rng));
    IntPolynomial p({1});
    for (int r : roots) p = p * IntPolynomial({-r, 1});
    p = p * IntPolynomial({1, 0, 1});  // no real roots added
    EXPECT_EQ(count_real_roots(p), n);
    const auto iso = isolate_real_roots(p, Rational(1, 1000));
    ASSERT_EQ(iso.size(), roots.size());
    auto it = roots.begin();
    for (const auto& r : iso) {
      EXPECT_LE(r.lo, Rational(*it));
      EXPECT_GE(r.hi, Rational(*it));
      ++it;
    }
  }
}

TEST(RealAlgebraic, ComparesExactly) {
  const auto sqrt2 = RealAlgebraic::root_of(IntPolynomial({-2, 0, 1}), 1);
  EXPECT_GT(sqrt2, RealAlgebraic(Rational(141421356, 100000000)));
  EXPECT_LT(sqrt2, RealAlgebraic(Rational(141421357, 100000000)));
  // the same number from a multiple of its minimal polynomial
  const auto same = RealAlgebraic::root_of(IntPolynomial({-2, 0, 1}) * IntPolynomial({-3, 1}), 1);
  EXPECT_EQ(sqrt2, same);
  EXPECT_FALSE(sqrt2.enclosure(200).contains(parse_rational("1.414213562373095")));
  EXPECT_NEAR(sqrt2.enclosure().mid(), std::sqrt(2.0), 1e-15);
}

TEST(ComplexRoots, DisksAreCertifiedAndSmall) {
  const auto disks = certified_complex_roots(IntPolynomial({1, 0, 1}), 1e-10);
  ASSERT_EQ(disks.size(), 2u);
  for (const auto& d : disks) {
    EXPECT_TRUE(d.center.modulus().inflate(d.radius).contains(Rational(1)));
    EXPECT_LE(d.radius.hi(), 1e-10);
  }
  const std::vector<long long> lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  std::vector<BigInt> c;
  for (long long v : lehmer) c.emplace_back(static_cast<long>(v));
  const auto ld = oracle::roots(lehmer);
  const auto cert = certified_complex_roots(IntPolynomial(c), 1e-12);
  ASSERT_EQ(cert.size(), ld.size());
  for (const auto& z : ld) {
    bool covered = false;
    for (const auto& d : cert) {
      const double dr = static_cast<double>(z.real()) - d.center.re.mid();
      const double di = static_cast<double>(z.imag()) - d.center.im.mid();
      covered = covered || std::hypot(dr, di) < 1e-9;
    }
    EXPECT_TRUE(covered);
  }
}

TEST(NumberField, ArithmeticInQuadraticField) {
  const auto k = q_sqrt2();
  const auto a = FieldElement::generator(k);
  const FieldElement one(k, Rational(1));
  EXPECT_EQ((one + a) * (one - a), FieldElement(k, Rational(-1)));
  EXPECT_EQ((one + a).inverse() * (one + a), one);
  EXPECT_EQ(a.norm(), Rational(-2));
  EXPECT_EQ(a.trace(), Rational(0));
  EXPECT_TRUE((one + a).is_algebraic_integer());
  EXPECT_FALSE((a * FieldElement(k, Rational(1, 2))).is_algebraic_integer());
  EXPECT_EQ(a.sign_at(1), 1);
  EXPECT_EQ(a.sign_at(0), -1);
}

TEST(NumberField, RejectsBadPolynomials) {
  EXPECT_THROW(NumberField(IntPolynomial({-4, 0, 1}), 0), DomainError);  // reducible
  EXPECT_THROW(NumberField(IntPolynomial({2, 0, 1}), 0), DomainError);   // not totally real
  EXPECT_THROW(NumberField(IntPolynomial({-2, 0, 1}), 2), DomainError);  // place out of range
}

TEST(NumberField, RationalElementsLiftIntoLargerFields) {
  const auto k = q_sqrt2();
  const FieldElement r(NumberField::rationals(), Rational(3));
  const auto a = FieldElement::generator(k);
  EXPECT_EQ(r * a + a, a * FieldElement(k, Rational(4)));
}

TEST(Surd, ExactSignNearCancellation) {
  const auto s = [](long p, long q, long r) { return Surd(FieldElement(NumberField::rationals(), Rational(p)),
                                                          FieldElement(NumberField::rationals(), Rational(q)),
                                                          FieldElement(NumberField::rationals(), Rational(r))); };
  EXPECT_EQ(s(99, -70, 2).sign(), 1);   // 99^2 - 2 * 70^2 = 1
  EXPECT_EQ(s(-99, 70, 2).sign(), -1);
  EXPECT_EQ(s(3, -1, 9).sign(), 0);
  EXPECT_EQ((s(1, 1, 2) * s(-1, 1, 2)).sign(), 1);  // (sqrt2 + 1)(sqrt2 - 1) = 1
}

TEST(Surd, SignMatchesFloatingPointAwayFromZero) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-50, 50), r(2, 30);
  for (int i = 0; i < 500; ++i) {
    const int p = c(rng), q = c(rng), rad = r(rng);
    const double v = p + q * std::sqrt(static_cast<double>(rad));
    if (std::fabs(v) < 1e-6) continue;
    const auto k = NumberField::rationals();
    const Surd s(FieldElement(k, Rational(p)), FieldElement(k, Rational(q)), FieldElement(k, Rational(rad)));
    EXPECT_EQ(s.sign(), v > 0 ? 1 : -1) << p << " " << q << " " << rad;
  }
}
