#include <gtest/gtest.h>

#include "avgnorm/error.hpp"
#include "avgnorm/powersum.hpp"
#include "support/bridge.hpp"

using namespace avgnorm;

TEST(CoefficientSet, ParsesLiterals) {
  EXPECT_EQ(CoefficientSet::parse("{-1, 0, 1}").literal(), "{-1,0,1}");
  EXPECT_EQ(CoefficientSet::parse("{1/2,-1/2,i}").literal(), "{1/2,-1/2,i}");
  EXPECT_EQ(CoefficientSet::parse("height:2").literal(), "{-2,-1,0,1,2}");
  EXPECT_EQ(CoefficientSet::parse("{ 0 , i }").size(), 2u);
  EXPECT_TRUE(CoefficientSet::parse("{0,i}").contains_zero());
  EXPECT_FALSE(CoefficientSet::parse("{0,i}").is_real());
  EXPECT_TRUE(CoefficientSet::parse("{3,-1,-2}").is_zero_sum());
  EXPECT_FALSE(CoefficientSet::parse("{1,2}").is_zero_sum());
}

TEST(CoefficientSet, RejectsBadLiterals) {
  EXPECT_THROW(CoefficientSet::parse("{1,1}"), ParseError);
  EXPECT_THROW(CoefficientSet::parse("{}"), Error);
  EXPECT_THROW(CoefficientSet::parse("{1,2"), ParseError);
  EXPECT_THROW(CoefficientSet::parse("height:x"), ParseError);
  try {
    CoefficientSet::parse("{1,2,q}");
    FAIL() << "no throw";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(CoefficientSet, Scaling) {
  const CoefficientSet t = CoefficientSet::parse("{0,1}");
  EXPECT_EQ(t.scaled(GaussianRational::i()).literal(), "{0,i}");
  EXPECT_THROW(t.scaled(GaussianRational()), InvalidArgument);
}

TEST(Ensemble, Sizes) {
  EXPECT_EQ(ensemble_size(CoefficientSet::parse("{-1,0,1}"), 3), 81);
  // degree exactly 3 with a nonzero leading coefficient: 2 * 3^3
  EXPECT_EQ(degree_exact_count(CoefficientSet::parse("{-1,0,1}"), 3), 54);
  EXPECT_EQ(degree_exact_count(CoefficientSet::parse("{-1,1}"), 3), 16);
}

TEST(PowerSums, SmallSets) {
  const CoefficientSet t = CoefficientSet::parse("{1,i}");
  EXPECT_EQ(power_sum(t, 1, 0).str(), "1+i");
  EXPECT_EQ(power_sum(t, 2, 0).str(), "0");
  EXPECT_EQ(power_sum(t, 1, 1).str(), "2");
  EXPECT_EQ(power_sum(t, 0, 0).str(), "2");
  const PowerSumCache cache(t);
  EXPECT_EQ(cache(2, 1).str(), "1+i");
  EXPECT_EQ(cache(2, 1).str(), "1+i");
  EXPECT_EQ(cache.cached(), 1u);
}

TEST(Oracle, MatchesHandCounts) {
  // {1,2}, n=1: p = a0 + a1 z, e(1,1,1,1) = mean of a0 conj(a1) = (3/2)^2
  const CoefficientSet t = CoefficientSet::parse("{1,2}");
  EXPECT_EQ(oracle_e(t, {1, 1, 1, 1}).str(), "9/4");
  // mu^4 at n=1: |p|^4 constant term (a0^2+a1^2)^2 + 2 a0^2 a1^2 averaged over 4 tuples
  EXPECT_EQ(oracle_mu(t, 1, 2).str(), "42");
  EXPECT_EQ(oracle_e(CoefficientSet::parse("{-1,1}"), {1, 2, 2, 2}).str(), "1");
  EXPECT_EQ(oracle_mu(CoefficientSet::parse("{0,1}"), 0, 1).str(), "1/2");
}

TEST(Oracle, AgreesWithNaiveReference) {
  for (const auto& elements : {naive::littlewood(), naive::height1(), naive::zero_i(), naive::halves_i()}) {
    const CoefficientSet t = bridge::to_set(elements);
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned s = 0; s <= 2; ++s)
        for (unsigned u = 0; u <= 2; ++u) {
          const auto all = oracle_e_all_m(t, n, s, u, {10'000'000, 2});
          for (long m = -static_cast<long>(n * s) - 1; m <= static_cast<long>(n * u) + 1; ++m) {
            auto it = all.find(m);
            const std::string got = it == all.end() ? "0" : it->second.str();
            EXPECT_EQ(got, naive::text(naive::average(elements, n, s, u, m)))
                << t.literal() << " n=" << n << " s=" << s << " t=" << u << " m=" << m;
          }
        }
  }
}

TEST(Oracle, ThreadCountDoesNotChangeTheSum) {
  const CoefficientSet t = CoefficientSet::parse("{1/2,-1/2,i}");
  const auto one = oracle_e_all_m(t, 5, 2, 2, {10'000'000, 1});
  const auto many = oracle_e_all_m(t, 5, 2, 2, {10'000'000, 5});
  EXPECT_EQ(one, many);
}

TEST(Oracle, BudgetIsAHardRefusal) {
  try {
    oracle_e(CoefficientSet::parse("{-1,0,1}"), {20, 1, 1, 0}, {1000, 1});
    FAIL() << "no throw";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), "enumeration");
    EXPECT_NE(std::string(e.what()).find("--method recursion"), std::string::npos);
  }
}
