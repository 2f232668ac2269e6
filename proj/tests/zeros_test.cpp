#include "brigkit/sweep.hpp"
#include "brigkit/zeros.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace brigkit;
using app::brute_force_zero_oracle;

SequenceParams sp(long a, long b, long p, long q) { return make_params(a, b, p, q); }

TEST(FindZero, Examples) {
  EXPECT_EQ(find_zero(sp(3, 6, 5, 6)), ZeroResult{ZeroAt{5}});
  EXPECT_EQ(find_zero(sp(1, -1, 0, 1)), ZeroResult{ZeroAt{0}});
  EXPECT_EQ(find_zero(sp(1, -1, 1, 2)), (ZeroResult{NoZero{19, true, false}}));
  EXPECT_EQ(find_zero(sp(2, -1, 1, 6)), (ZeroResult{NoZero{29, true, false}}));
}

TEST(FindZero, NonRealBoundUsesC4) {
  const SearchBound b = zero_search_bound(sp(1, 2, 1, 3), 500);
  EXPECT_EQ(b.n_max, 500u);
  EXPECT_EQ(b.basis, BoundBasis::NonRealLog);
  const ZeroResult r = find_zero_within(sp(1, 2, 1, 3), b);
  ASSERT_TRUE(std::holds_alternative<NoZero>(r));
  EXPECT_TRUE(std::get<NoZero>(r).assumes_c4);
  EXPECT_EQ(render(r), "no zero up to 500, conclusive under c4");
}

TEST(FindZero, UserOverrideIsInconclusive) {
  const ZeroResult r = find_zero_within(sp(1, -1, 1, 2), SearchBound{5, BoundBasis::UserOverride, 0});
  EXPECT_EQ(r, (ZeroResult{NoZero{5, false, false}}));
}

TEST(Degenerate, Cases) {
  EXPECT_EQ(find_zero(sp(1, 1, 1, 1)), (ZeroResult{PeriodicZeros{3, {2}}}));
  EXPECT_EQ(find_zero(sp(0, 1, 0, 1)), (ZeroResult{PeriodicZeros{2, {0}}}));
  EXPECT_EQ(find_zero(sp(5, 3, 0, 0)), ZeroResult{AllZero{}});
  EXPECT_EQ(find_zero(sp(3, 0, 1, 0)), (ZeroResult{EventuallyZero{1, {}}}));
  EXPECT_EQ(find_zero(sp(0, 0, 0, 4)), (ZeroResult{EventuallyZero{2, {0}}}));
  EXPECT_EQ(find_zero(sp(3, 0, 0, 4)), ZeroResult{ZeroAt{0}});
  // Equal roots t = 1: u_n = n(Q - P) + P vanishes at n = 3 for P = 3, Q = 2.
  EXPECT_EQ(find_zero(sp(2, 1, 3, 2)), ZeroResult{ZeroAt{3}});
  EXPECT_EQ(find_zero(sp(2, 1, 3, 3)), (ZeroResult{NoZero{0, true, false}}));
}

TEST(Degenerate, VerdictMatchesOracleOnGrid) {
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long p = -4; p <= 4; ++p)
        for (long q = -4; q <= 4; ++q) {
          const SequenceParams s = sp(a, b, p, q);
          if (!classify(s).is_degenerate()) continue;
          const ZeroResult r = degenerate_zeros(s);
          const auto oracle = brute_force_zero_oracle(s, 60);
          std::vector<Index> predicted;
          for (Index n = 0; n <= 60; ++n)
            if (predicts_zero(r, n)) predicted.push_back(n);
          EXPECT_EQ(predicted, oracle) << s.to_string() << " " << render(r);
        }
}

TEST(NonDegenerate, AtMostOneZeroAndOracleAgreement) {
  for (long a = -7; a <= 7; ++a)
    for (long b = -7; b <= 7; ++b)
      for (long p = -5; p <= 5; ++p)
        for (long q = -5; q <= 5; ++q) {
          const SequenceParams s = sp(a, b, p, q);
          if (classify(s).is_degenerate()) continue;
          const ZeroResult r = find_zero(s, 200);
          const auto oracle = brute_force_zero_oracle(s, 400);
          ASSERT_LE(oracle.size(), 1u) << s.to_string();
          if (oracle.empty())
            EXPECT_TRUE(std::holds_alternative<NoZero>(r)) << s.to_string();
          else
            EXPECT_EQ(r, ZeroResult{ZeroAt{oracle.front()}}) << s.to_string();
        }
}

TEST(Construct, Example) {
  EXPECT_EQ(construct_zero_at(Integer(3), Integer(6), 5), (ZeroPair{Integer(-5), Integer(-6)}));
  EXPECT_EQ(construct_zero_at(Integer(3), Integer(6), 2), (ZeroPair{Integer(1), Integer(2)}));
  EXPECT_THROW(construct_zero_at(Integer(0), Integer(6), 5), DomainError);
  EXPECT_THROW(construct_zero_at(Integer(3), Integer(6), 1), DomainError);
  // A^2 = B: U_3 = 0
  EXPECT_THROW(construct_zero_at(Integer(1), Integer(1), 3), DomainError);
}

TEST(Construct, RoundTripProperty) {
  for (long a = -9; a <= 9; ++a)
    for (long b = -9; b <= 9; ++b) {
      if (a == 0 || b == 0 || classify(sp(a, b, 0, 1)).is_degenerate()) continue;
      for (Index k = 2; k <= 25; ++k) {
        const ZeroPair z = construct_zero_at(Integer(a), Integer(b), k);
        const SequenceParams s{Integer(a), Integer(b), z.p, z.q};
        EXPECT_EQ(term_iter(s, k), 0);
        EXPECT_EQ(gcd(z.p, z.q), 1);
        EXPECT_EQ(find_zero(s), ZeroResult{ZeroAt{k}}) << s.to_string();
      }
    }
}

TEST(Family, ProportionalToConstruction) {
  const Integer a = 3, b = 6;
  const auto fam = zero_family(a, b, 12);
  ASSERT_EQ(fam.size(), 11u);
  EXPECT_EQ(fam.front().p, a);
  EXPECT_EQ(fam.front().q, b);
  for (const auto& e : fam) {
    EXPECT_EQ(term_iter(SequenceParams{a, b, e.p, e.q}, e.k), 0) << e.k;
    const ZeroPair z = construct_zero_at(a, b, e.k);
    EXPECT_EQ(e.p * z.q, e.q * z.p) << e.k;
  }
}

TEST(Render, Texts) {
  const SequenceParams s = sp(3, 6, 5, 6);
  const SearchBound bound = zero_search_bound(s);
  EXPECT_EQ(render(find_zero(s), &bound), "zero at k=5 (bound " + std::to_string(bound.n_max) + ", conclusive under c4)");
  const SequenceParams r = sp(2, -1, 1, 6);
  const SearchBound rb = zero_search_bound(r);
  EXPECT_EQ(render(find_zero(r), &rb), "no zero up to 29, conclusive");
  EXPECT_EQ(render(ZeroResult{PeriodicZeros{3, {2}}}), "periodic zeros: n mod 3 in {2}");
  EXPECT_EQ(render(ZeroResult{AllZero{}}), "all terms zero");
}

}  // namespace
