#include <gtest/gtest.h>

#include "hwav/hwav.hpp"
#include "oracles.hpp"

using namespace hwav;

using Counts = std::vector<std::int64_t>;

TEST(Census, Examples) {
  auto su = width_census(HermitianType::su(4, 3));
  EXPECT_EQ(su.counts_by_width, (Counts{1, 6, 14, 14}));
  EXPECT_EQ(su.total, 35);
  EXPECT_TRUE(su.pass);
  auto sp = width_census(HermitianType::sp(3));
  EXPECT_EQ(sp.counts_by_width, (Counts{1, 4, 3, 0}));
  EXPECT_EQ(sp.total, 8);
  auto e7 = width_census(HermitianType::e7());
  EXPECT_EQ(e7.counts_by_width, (Counts{1, 7, 27, 21}));
  EXPECT_EQ(e7.total, 56);
  auto e6 = width_census(HermitianType::e6());
  EXPECT_EQ(e6.counts_by_width, (Counts{1, 6, 20}));
}

// Totals from exhaustive subset testing, independent of both the enumerator and the closed forms.
TEST(Census, TotalsMatchSubsetOracle) {
  for (auto t : {HermitianType::su(3, 4), HermitianType::sp(4), HermitianType::sp(5), HermitianType::sostar(5),
                 HermitianType::so_odd(5), HermitianType::so_even(6), HermitianType::e6()}) {
    Context ctx(t);
    auto c = width_census(ctx);
    EXPECT_EQ(c.total, oracle::downset_count(ctx.poset.roots)) << t.name();
    EXPECT_TRUE(c.pass) << t.name();
  }
}

TEST(Census, ClosedFormsAcrossRanks) {
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q) EXPECT_TRUE(width_census(HermitianType::su(p, q)).pass);
  for (int n = 2; n <= 9; ++n) EXPECT_TRUE(width_census(HermitianType::sp(n)).pass) << n;
  for (int n = 4; n <= 9; ++n) EXPECT_TRUE(width_census(HermitianType::sostar(n)).pass) << n;
  for (int n = 3; n <= 10; ++n) EXPECT_TRUE(width_census(HermitianType::so_odd(n)).pass) << n;
  for (int n = 4; n <= 10; ++n) EXPECT_TRUE(width_census(HermitianType::so_even(n)).pass) << n;
}

TEST(Census, FeasibilityGuards) {
  for (auto t : {HermitianType::su(9, 8), HermitianType::sp(21), HermitianType::sostar(22), HermitianType::so_odd(65),
                 HermitianType::so_even(65)}) {
    try {
      check_census_feasible(t);
      ADD_FAILURE() << t.name();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
      EXPECT_NE(std::string(e.what()).find("<="), std::string::npos);
    }
  }
  EXPECT_NO_THROW(check_census_feasible(HermitianType::su(8, 8)));
  EXPECT_NO_THROW(check_census_feasible(HermitianType::e7()));
}

TEST(Census, SpringerIdentities) {
  for (auto t : {HermitianType::su(4, 3), HermitianType::su(2, 6), HermitianType::sostar(6), HermitianType::sostar(7),
                 HermitianType::so_even(5), HermitianType::so_odd(4), HermitianType::sp(3), HermitianType::sp(6),
                 HermitianType::sp(7), HermitianType::e6(), HermitianType::e7()}) {
    auto rep = verify_springer_identities(width_census(t));
    EXPECT_TRUE(rep.pass) << t.name() << ": " << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_FALSE(rep.checks.empty());
  }
  auto sostar6 = width_census(HermitianType::sostar(6));
  EXPECT_EQ(sostar6.counts_by_width[3], 10);
  auto sp3 = width_census(HermitianType::sp(3));
  EXPECT_EQ(sp3.counts_by_width[2], springer_row(HermitianType::sp(3), 3).springer_dim);
}

TEST(Census, MismatchIsReported) {
  CensusReport fake = width_census(HermitianType::e6());
  fake.counts_by_width[1] = 5;
  EXPECT_FALSE(verify_springer_identities(fake).pass);
}

TEST(Census, BijectionExamples) {
  struct Case {
    HermitianType t;
    std::int64_t size;
  };
  for (const auto& c : std::vector<Case>{{HermitianType::su(2, 2), 6}, {HermitianType::sp(2), 4},
                                         {HermitianType::sostar(4), 8}, {HermitianType::so_odd(3), 6},
                                         {HermitianType::so_even(4), 8}}) {
    Context ctx(c.t);
    auto rep = verify_bijection_classical(ctx);
    EXPECT_TRUE(rep.pass) << c.t.name();
    EXPECT_EQ(rep.checks.front(), "|W^K| = " + std::to_string(c.size) + " vs " + std::to_string(c.size));
  }
  EXPECT_THROW(verify_bijection_classical(Context(HermitianType::e6())), Error);
  EXPECT_THROW(verify_bijection_classical(Context(HermitianType::sp(7))), Error);
}

TEST(Census, DistinguishedAntichainsGenerateWidthK) {
  for (auto t : {HermitianType::su(3, 4), HermitianType::sostar(6), HermitianType::so_even(6), HermitianType::e6(),
                 HermitianType::e7()}) {
    Context ctx(t);
    auto c = width_census(ctx);
    auto A = distinguished_antichains(ctx.rs, ctx.poset);
    for (int k = 0; k <= t.real_rank(); ++k) EXPECT_GT(c.counts_by_width[k], 0) << t.name();
    for (std::size_t k = 0; k < A.size(); ++k)
      EXPECT_EQ(width_of(ctx.poset, downset_of(ctx.poset, A[k])), static_cast<int>(k + 1)) << t.name();
  }
}
