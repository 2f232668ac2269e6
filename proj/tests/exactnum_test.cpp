#include "brigkit/exactnum.hpp"

#include <gtest/gtest.h>
#include <mpfr.h>

#include <cmath>
#include <random>

namespace {

using namespace brigkit;

// Independent oracle: sign of r + s*sqrt(delta) evaluated at 512 bits.
int mpfr_sign_oracle(const Rational& r, const Rational& s, const Integer& delta) {
  mpfr_t x, y;
  mpfr_inits2(512, x, y, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(x, delta.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(x, x, MPFR_RNDN);
  mpfr_mul_q(x, x, s.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(y, r.get_mpq_t(), MPFR_RNDN);
  mpfr_add(x, x, y, MPFR_RNDN);
  const int out = mpfr_sgn(x);
  mpfr_clears(x, y, static_cast<mpfr_ptr>(nullptr));
  return out;
}

TEST(Parse, AcceptsSignsAndHugeValues) {
  EXPECT_EQ(parse_integer("-17"), -17);
  EXPECT_EQ(parse_integer("+5"), 5);
  const std::string big = "123456789012345678901234567890123456789";
  EXPECT_EQ(parse_integer(big).get_str(), big);
}

TEST(Parse, RejectsMalformed) {
  for (const char* bad : {"", "-", "+", "1.5", "abc", "12x", " 3", "3 ", "--3", "+-3"}) EXPECT_THROW(parse_integer(bad), std::invalid_argument) << bad;
}

TEST(Parse, RationalsAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("1.44"), Rational(36, 25));
  EXPECT_EQ(parse_rational("50"), Rational(50));
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(IntegerHelpers, SquaresAndRounding) {
  EXPECT_TRUE(is_perfect_square(Integer(0)));
  EXPECT_TRUE(is_perfect_square(Integer(144)));
  EXPECT_FALSE(is_perfect_square(Integer(-4)));
  EXPECT_FALSE(is_perfect_square(Integer(145)));
  EXPECT_EQ(isqrt(Integer(145)), 12);
  EXPECT_EQ(ceil_of(Rational(7, 2)), 4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(pow_integer(3, 5), 243);
  EXPECT_EQ(to_index(Integer(-1)), 0u);
  EXPECT_THROW(to_index(pow_integer(2, 70)), DomainError);
}

TEST(QuadElem, FoldsSquareRadicand) {
  const QuadElem x(Rational(1), Rational(2), Integer(9));
  EXPECT_EQ(x.r(), 7);
  EXPECT_EQ(x.s(), 0);
}

TEST(QuadElem, ArithmeticAndNorm) {
  const QuadElem phi(Rational(1, 2), Rational(1, 2), Integer(5));
  const QuadElem sq = phi * phi;  // phi^2 = phi + 1
  EXPECT_EQ(sq, phi + QuadElem::rational(Rational(1), Integer(5)));
  EXPECT_EQ(phi.norm(), Rational(-1));
  EXPECT_EQ((phi * phi.conjugate()).r(), Rational(-1));
}

TEST(QuadElem, MismatchedRadicandsThrow) {
  EXPECT_THROW(QuadElem::surd(Integer(2)) + QuadElem::surd(Integer(3)), RadicandMismatch);
}

TEST(QuadSign, KnownValues) {
  EXPECT_EQ(quad_sign(Integer(-3), Integer(2), Integer(2)), -1);  // 2*sqrt2 ~ 2.83 < 3
  EXPECT_EQ(quad_sign(Integer(-2), Integer(1), Integer(4)), 0);
  EXPECT_EQ(quad_sign(Integer(3), Integer(-1), Integer(8)), 1);
  EXPECT_EQ(quad_sign(Rational(0), Rational(0), Integer(7)), 0);
}

TEST(QuadSign, PropertyMatchesHighPrecisionOracle) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> small(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000);
  std::uniform_int_distribution<long> rad(0, 100000);
  for (int i = 0; i < 20000; ++i) {
    Integer delta(rad(rng));
    Rational s(small(rng), den(rng));
    s.canonicalize();
    Rational r;
    if (i % 3 == 0 && !is_perfect_square(delta)) {
      // near-ties: r close to -s*sqrt(delta)
      const Integer approx = isqrt(Integer(delta * 1000000)) * s.get_num();
      r = Rational(-approx, Integer(s.get_den() * 1000));
      r.canonicalize();
    } else {
      r = Rational(small(rng), den(rng));
      r.canonicalize();
    }
    EXPECT_EQ(quad_sign(r, s, delta), mpfr_sign_oracle(r, s, delta)) << r << " + " << s << " sqrt " << delta;
  }
}

TEST(QuadSign, AntisymmetricUnderNegation) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> v(-500, 500);
  for (int i = 0; i < 5000; ++i) {
    const QuadElem x(Rational(v(rng)), Rational(v(rng)), Integer(std::abs(v(rng))));
    EXPECT_EQ(quad_sign(-x), -quad_sign(x));
    EXPECT_EQ(quad_compare(x, x), 0);
  }
}

TEST(Logs, EnclosuresContainDoubleLog) {
  for (long x : {2L, 3L, 6L, 10L, 1000L, 123456789L}) {
    const Enclosure e = ln_enclosure(Integer(x));
    const double l = std::log(static_cast<double>(x));
    EXPECT_LE(e.lo.get_d(), l + 1e-12);
    EXPECT_GE(e.hi.get_d(), l - 1e-12);
    EXPECT_LT(e.lo, e.hi);
  }
  const Enclosure one = ln_enclosure(Integer(1));
  EXPECT_EQ(one.lo, 0);
  EXPECT_EQ(one.hi, 0);
}

TEST(Logs, AffineComparison) {
  // 9 ln 6 + 12 = 28.13...
  EXPECT_EQ(compare_with_affine_ln(Rational(28), Rational(9), Rational(12), Rational(6)), -1);
  EXPECT_EQ(compare_with_affine_ln(Rational(29), Rational(9), Rational(12), Rational(6)), 1);
  // x = 1 is exact
  EXPECT_EQ(compare_with_affine_ln(Rational(12), Rational(9), Rational(12), Rational(1)), 0);
  // ln 2^10 = 10 ln 2, strictly between 6.93 and 6.94
  EXPECT_EQ(compare_with_affine_ln(Rational(693, 100), Rational(10), Rational(0), Rational(2)), -1);
  EXPECT_EQ(compare_with_affine_ln(Rational(694, 100), Rational(10), Rational(0), Rational(2)), 1);
}

}  // namespace
