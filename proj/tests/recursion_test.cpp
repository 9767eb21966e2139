#include <gtest/gtest.h>

#include <sstream>

#include "avgnorm/error.hpp"
#include "avgnorm/recursion.hpp"
#include "support/bridge.hpp"

using namespace avgnorm;

TEST(Recursion, TableCells) {
  const RecursionTable lw(CoefficientSet::parse("{-1,1}"), {4, 4, 4});
  EXPECT_EQ(dp_e(lw, {2, 3, 3, 0}).str(), "93");
  EXPECT_EQ(dp_e(lw, {1, 2, 2, 0}).str(), "6");
  EXPECT_EQ(dp_e(lw, {4, 1, 1, 0}).str(), "5");
  EXPECT_EQ(dp_e(lw, {3, 4, 4, 0}).str(), "2812");
  const RecursionTable h1(CoefficientSet::parse("{-1,0,1}"), {2, 2, 2});
  EXPECT_EQ(dp_e(h1, {2, 2, 2, 0}).str(), "22/3");  // printed 66/9
  EXPECT_EQ(dp_e(h1, {1, 1, 1, 0}).str(), "4/3");
}

TEST(Recursion, MuSequences) {
  const RecursionTable lw(CoefficientSet::parse("{-1,1}"), {4, 2, 2});
  std::vector<std::string> got;
  for (const auto& v : mu_sequence(lw, 2, 4)) got.push_back(v.str());
  EXPECT_EQ(got, (std::vector<std::string>{"1", "6", "15", "28", "45"}));

  const RecursionTable z(CoefficientSet::parse("{0,1}"), {3, 2, 2});
  got.clear();
  for (const auto& v : mu_sequence(z, 2, 3)) got.push_back(v.str());
  EXPECT_EQ(got, (std::vector<std::string>{"1/2", "2", "5", "19/2"}));
}

TEST(Recursion, AgreesWithNaiveReference) {
  for (const auto& elements : {naive::littlewood(), naive::zero_one(), naive::one_two(), naive::halves_i()}) {
    const CoefficientSet t = bridge::to_set(elements);
    const RecursionTable table(t, {4, 3, 3});
    for (unsigned n = 0; n <= 4; ++n)
      for (unsigned s = 0; s <= 3; ++s)
        for (unsigned u = 0; u <= 3; ++u) {
          if (n == 4 && s + u > 4) continue;  // keep the naive product small
          for (long m = -static_cast<long>(n * s) - 1; m <= static_cast<long>(n * u) + 1; ++m)
            EXPECT_EQ(dp_e(table, {n, s, u, m}).str(), naive::text(naive::average(elements, n, s, u, m)))
                << t.literal() << " (" << n << "," << s << "," << u << "," << m << ")";
        }
  }
}

TEST(Recursion, WeightedMu) {
  const RecursionTable t(CoefficientSet::parse("{1,2}"), {1, 1, 1});
  EXPECT_EQ(weighted_mu(t, 1, 1, 1).str(), "9/4");
  EXPECT_EQ(weighted_mu(t, 1, 1, 2).str(), "0");
}

TEST(Recursion, BoundsAndGrowth) {
  RecursionTable t(CoefficientSet::parse("{-1,1}"), {3, 2, 2});
  EXPECT_THROW(dp_e(t, {4, 2, 2, 0}), BoundsExceeded);
  EXPECT_THROW(dp_e(t, {1, 3, 3, 0}), BoundsExceeded);
  try {
    dp_e(t, {4, 2, 2, 0});
  } catch (const BoundsExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("grow"), std::string::npos);
  }
  const auto before = t.entries_computed();
  t.grow({6, 2, 2});
  EXPECT_GT(t.entries_computed(), before);
  EXPECT_EQ(dp_e(t, {6, 2, 2, 0}).str(), "91");
  t.grow({6, 3, 3});
  EXPECT_EQ(dp_e(t, {6, 3, 3, 0}).str(), "1645");
  // covered bounds are a no-op
  const auto settled = t.entries_computed();
  t.grow({2, 1, 1});
  EXPECT_EQ(t.entries_computed(), settled);
}

TEST(Recursion, SnapshotRoundTrip) {
  const RecursionTable t(CoefficientSet::parse("{1/2,-1/2,i}"), {4, 2, 3});
  std::stringstream buffer;
  t.save(buffer);
  const RecursionTable back = RecursionTable::load(buffer);
  EXPECT_EQ(back.set(), t.set());
  EXPECT_EQ(back.bounds(), t.bounds());
  EXPECT_EQ(back.entries_computed(), 0u);
  EXPECT_EQ(back.stored_entries(), t.stored_entries());
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned s = 0; s <= 2; ++s)
      for (unsigned u = 0; u <= 3; ++u) EXPECT_EQ(back.row(n, s, u), t.row(n, s, u));
}

TEST(Recursion, SnapshotRejectsDamage) {
  const RecursionTable t(CoefficientSet::parse("{0,1}"), {2, 1, 1});
  std::stringstream buffer;
  t.save(buffer);
  std::string text = buffer.str();
  {
    std::istringstream truncated(text.substr(0, text.size() - 4));
    EXPECT_THROW(RecursionTable::load(truncated), InvalidArgument);
  }
  {
    std::istringstream wrong("something else\n");
    EXPECT_THROW(RecursionTable::load(wrong), InvalidArgument);
  }
}
