#include "brigkit/core.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <random>

namespace {

using namespace brigkit;
using Kind = SequenceClass::Kind;

SequenceParams sp(long a, long b, long p, long q) { return make_params(a, b, p, q); }

// Oracle: order of alpha/beta as a root of unity, by floating-point powers
// of the ratio of the complex roots.
int numeric_ratio_order(long a, long b) {
  const std::complex<double> disc = std::sqrt(std::complex<double>(static_cast<double>(a * a - 4 * b), 0));
  const std::complex<double> alpha = (static_cast<double>(a) + disc) / 2.0;
  const std::complex<double> beta = (static_cast<double>(a) - disc) / 2.0;
  if (std::abs(beta) < 1e-12) return 0;
  const std::complex<double> r = alpha / beta;
  std::complex<double> x = r;
  for (int m = 1; m <= 12; ++m) {
    if (std::abs(x - 1.0) < 1e-9) return m;
    x *= r;
  }
  return 0;
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(sp(1, -1, 0, 1)), SequenceClass::real());
  EXPECT_EQ(classify(sp(1, 2, 1, 1)), SequenceClass::non_real());
  EXPECT_EQ(classify(sp(1, 1, 1, 1)), SequenceClass::degenerate(DegenerateReason::RootOfUnityRatio, 3));
  EXPECT_EQ(classify(sp(2, 2, 0, 1)), SequenceClass::degenerate(DegenerateReason::RootOfUnityRatio, 4));
  EXPECT_EQ(classify(sp(3, 3, 0, 1)), SequenceClass::degenerate(DegenerateReason::RootOfUnityRatio, 6));
  EXPECT_EQ(classify(sp(0, 1, 1, 1)), SequenceClass::degenerate(DegenerateReason::AZero, 2));
  EXPECT_EQ(classify(sp(2, 1, 1, 1)), SequenceClass::degenerate(DegenerateReason::EqualRoots, 1));
  EXPECT_EQ(classify(sp(3, 0, 1, 1)), SequenceClass::degenerate(DegenerateReason::BZero));
  EXPECT_EQ(classify(sp(3, 2, 0, 0)), SequenceClass::degenerate(DegenerateReason::BothInitialZero));
  // u_n = 2^n: the beta-coefficient vanishes.
  EXPECT_EQ(classify(sp(3, 2, 1, 2)).reason, DegenerateReason::CoefficientBZero);
  // u_n = 1: the alpha-coefficient vanishes.
  EXPECT_EQ(classify(sp(3, 2, 1, 1)).reason, DegenerateReason::CoefficientAZero);
}

TEST(Classify, PriorityBothZeroFirst) {
  EXPECT_EQ(classify(sp(0, 0, 0, 0)).reason, DegenerateReason::BothInitialZero);
  EXPECT_EQ(classify(sp(0, 0, 1, 0)).reason, DegenerateReason::BZero);
}

TEST(Classify, Text) {
  EXPECT_EQ(classify(sp(1, 1, 1, 1)).to_string(), "degenerate: root-of-unity ratio, order 3");
  EXPECT_EQ(classify(sp(1, 2, 1, 1)).to_string(), "non-real");
  EXPECT_EQ(classify(sp(1, 1, 1, 1)).tag(), "degenerate:root-of-unity-3");
}

TEST(Classify, RootOrderMatchesNumericOracle) {
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      if (b == 0 || a == 0 || a * a == 4 * b) continue;
      EXPECT_EQ(root_of_unity_order(Integer(a), Integer(b)), numeric_ratio_order(a, b)) << a << "," << b;
    }
}

TEST(Classify, TotalAndKindMatchesDiscriminant) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> v(-40, 40);
  for (int i = 0; i < 20000; ++i) {
    const SequenceParams s = sp(v(rng), v(rng), v(rng), v(rng));
    const SequenceClass c = classify(s);
    if (c.is_degenerate()) continue;
    const long delta = s.a.get_si() * s.a.get_si() - 4 * s.b.get_si();
    EXPECT_EQ(c.is_real(), delta > 0) << s.to_string();
    EXPECT_EQ(c.is_non_real(), delta < 0) << s.to_string();
  }
}

TEST(Classify, CoefficientZeroMeansGeometric) {
  // Oracle: u_2 * u_0 == u_1^2 with P != 0 exactly when u is geometric.
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long p = -4; p <= 4; ++p)
        for (long q = -4; q <= 4; ++q) {
          const SequenceParams s = sp(a, b, p, q);
          const SequenceClass c = classify(s);
          if (b == 0 || a == 0 || (p == 0 && q == 0) || a * a == 4 * b || root_of_unity_order(s.a, s.b)) continue;
          const bool geometric = p != 0 && (a * q - b * p) * p == q * q;
          const bool coeff_zero =
              c.reason == DegenerateReason::CoefficientAZero || c.reason == DegenerateReason::CoefficientBZero;
          EXPECT_EQ(c.is_degenerate() && coeff_zero, geometric) << s.to_string();
        }
}

TEST(Reduce, Examples) {
  const ReducedParams r = reduce_d(sp(6, 9, 1, 1));
  EXPECT_EQ(r.d, 3);
  EXPECT_EQ(r.params, sp(2, 1, 3, 1));
  EXPECT_EQ(reduce_d(sp(15, 10, 0, 1)).d, 1);
  EXPECT_EQ(reduce_d(sp(12, 72, 0, 1)).d, 6);
}

TEST(Reduce, SquareDivisorRoot) {
  EXPECT_EQ(square_divisor_root(Integer(72)), 6);
  EXPECT_EQ(square_divisor_root(Integer(-50)), 5);
  EXPECT_EQ(square_divisor_root(Integer(1)), 1);
  EXPECT_EQ(square_divisor_root(Integer(1000003) * 1000003 * 7), 1000003);
  EXPECT_THROW(square_divisor_root(Integer(0)), DomainError);
}

TEST(Reduce, MaximalityProperty) {
  // Oracle: largest d by direct search over divisors of A (A != 0).
  for (long a = -30; a <= 30; ++a)
    for (long b = -200; b <= 200; b += 7) {
      if (a == 0) continue;
      long best = 1;
      for (long d = 1; d <= std::abs(a); ++d)
        if (a % d == 0 && b % (d * d) == 0) best = d;
      EXPECT_EQ(reduce_d(sp(a, b, 0, 1)).d, best) << a << "," << b;
    }
}

TEST(Reduce, TermsScaleByPowersOfD) {
  // u'_n * d^(n-1) = u_n
  const SequenceParams s = sp(6, 9 * 5, 2, -7);
  const ReducedParams r = reduce_d(s);
  ASSERT_EQ(r.d, 3);
  Integer u0 = s.p, u1 = s.q, v0 = r.params.p, v1 = r.params.q;
  Integer dp = 1;  // d^(n-1) for n = 1
  for (int n = 1; n < 40; ++n) {
    EXPECT_EQ(v1 * dp, u1);
    Integer u2 = s.a * u1 - s.b * u0, v2 = r.params.a * v1 - r.params.b * v0;
    u0 = u1, u1 = u2, v0 = v1, v1 = v2;
    dp *= r.d;
  }
}

TEST(Normalize, GcdAndSignFlip) {
  const GcdNormalized g = normalize_gcd(sp(3, 6, -45, -54));
  EXPECT_EQ(g.s, 9);
  EXPECT_EQ(g.params.p, -5);
  EXPECT_EQ(g.params.q, -6);
  EXPECT_THROW(normalize_gcd(sp(1, 1, 0, 0)), DomainError);
  EXPECT_EQ(with_positive_a(sp(-3, 2, 1, 5)), sp(3, 2, 1, -5));
  EXPECT_EQ(with_positive_a(sp(3, 2, 1, 5)), sp(3, 2, 1, 5));
}

TEST(Normalize, Idempotent) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> v(-300, 300);
  for (int i = 0; i < 5000; ++i) {
    SequenceParams s = sp(v(rng), v(rng), v(rng), v(rng));
    if (sgn(s.a) == 0 && sgn(s.b) == 0) continue;
    if (sgn(s.p) == 0 && sgn(s.q) == 0) continue;
    const SequenceParams n = normalize(s);
    EXPECT_EQ(normalize(n), n) << s.to_string();
    EXPECT_EQ(classify(n).kind, classify(s).kind) << s.to_string();
  }
}

}  // namespace
