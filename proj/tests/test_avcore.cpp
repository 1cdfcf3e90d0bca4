#include <gtest/gtest.h>

#include "hwav/hwav.hpp"

using namespace hwav;

namespace {

std::vector<HermitianType> all_families() {
  return {HermitianType::su(4, 3), HermitianType::su(2, 5), HermitianType::sp(5),     HermitianType::sp(6),
          HermitianType::sostar(6), HermitianType::sostar(7), HermitianType::so_odd(5), HermitianType::so_even(6),
          HermitianType::e6(),     HermitianType::e7()};
}

}  // namespace

TEST(AvCore, KOfLambdaExamples) {
  EXPECT_EQ(k_of_lambda(HermitianType::sp(11), Integrality::HalfIntegral, 3), 7);
  EXPECT_EQ(k_of_lambda(HermitianType::e6(), Integrality::Integral, 2), 2);
  EXPECT_EQ(k_of_lambda(HermitianType::sp(3), Integrality::Integral, 2), 3);
  EXPECT_EQ(k_of_lambda(HermitianType::sp(4), Integrality::Integral, 2), 4);
  EXPECT_EQ(k_of_lambda(HermitianType::sp(4), Integrality::HalfIntegral, 2), 4);
  EXPECT_EQ(k_of_lambda(HermitianType::so_odd(4), Integrality::Integral, 1), 2);
  EXPECT_EQ(k_of_lambda(HermitianType::so_odd(4), Integrality::HalfIntegral, 0), 1);
  EXPECT_EQ(k_of_lambda(HermitianType::su(3, 3), Integrality::Other, 0), 3);
  EXPECT_THROW(k_of_lambda(HermitianType::su(3, 3), Integrality::Integral, 4), Error);
  EXPECT_THROW(k_of_lambda(HermitianType::su(3, 3), Integrality::HalfIntegral, 1), Error);
}

TEST(AvCore, KOfLambdaMonotone) {
  for (const auto& t : all_families())
    for (auto cls : {Integrality::Integral, Integrality::HalfIntegral, Integrality::Other}) {
      if (cls == Integrality::HalfIntegral && t.simply_laced()) continue;
      int prev = -1;
      for (int m = 0; m <= t.real_rank(); ++m) {
        int k = k_of_lambda(t, cls, m);
        EXPECT_GE(k, prev);
        EXPECT_LE(k, t.real_rank());
        prev = k;
      }
    }
}

TEST(AvCore, OrbitData) {
  EXPECT_EQ(orbit_dimension(HermitianType::su(4, 3), 2), 10);
  EXPECT_EQ(orbit_label(HermitianType::su(4, 3), 2), "[2^2,1^3]");
  EXPECT_EQ(orbit_label(HermitianType::su(4, 3), 0), "[1^7]");
  EXPECT_EQ(orbit_dimension(HermitianType::sp(11), 7), 56);
  EXPECT_EQ(orbit_label(HermitianType::sp(11), 7), "[2^7,1^8]");
  EXPECT_EQ(orbit_dimension(HermitianType::e7(), 3), 27);
  EXPECT_EQ(orbit_label(HermitianType::e7(), 3), "(3A_1)''");
  EXPECT_EQ(orbit_label(HermitianType::e6(), 1), "A_1");
  EXPECT_EQ(orbit_label(HermitianType::sostar(6), 3), "[2^6]");
  EXPECT_EQ(orbit_label(HermitianType::so_odd(4), 1), "[2^2,1^5]");
  EXPECT_EQ(orbit_label(HermitianType::so_odd(4), 2), "[3,1^6]");
  EXPECT_EQ(orbit_label(HermitianType::so_even(4), 2), "[3,1^5]");
  EXPECT_EQ(orbit_dimension(HermitianType::so_even(6), 1), 9);
  EXPECT_THROW(orbit_dimension(HermitianType::e6(), 3), Error);
  EXPECT_THROW(orbit_label(HermitianType::su(2, 2), -1), Error);
}

TEST(AvCore, OrbitChain) {
  for (const auto& t : all_families()) {
    for (int k = 1; k <= t.real_rank(); ++k) EXPECT_LT(orbit_dimension(t, k - 1), orbit_dimension(t, k)) << t.name();
    EXPECT_EQ(orbit_dimension(t, t.real_rank()), t.noncompact_count()) << t.name();
  }
}

TEST(AvCore, SpringerTable) {
  auto e6 = springer_table(HermitianType::e6());
  ASSERT_EQ(e6.size(), 3u);
  EXPECT_EQ(e6[0].springer_dim, 1);
  EXPECT_EQ(e6[1].springer_dim, 6);
  EXPECT_EQ(e6[2].springer_dim, 20);
  for (int n : {5, 6, 7}) {
    auto sp = springer_table(HermitianType::sp(n));
    for (const auto& row : sp) {
      if (row.k % 2 == 1 && row.k < n) {
        EXPECT_FALSE(row.special);
      } else {
        EXPECT_TRUE(row.special);
      }
    }
  }
  EXPECT_EQ(springer_table(HermitianType::sostar(6))[3].springer_dim, 10);
  auto su = springer_table(HermitianType::su(4, 3));
  std::vector<std::int64_t> su_dims;
  for (const auto& r : su) su_dims.push_back(r.springer_dim);
  EXPECT_EQ(su_dims, (std::vector<std::int64_t>{1, 6, 14, 14}));
  auto so = springer_table(HermitianType::so_odd(5));
  EXPECT_FALSE(so[1].special);
  EXPECT_EQ(so[1].springer_dim, 4);
  EXPECT_EQ(so[2].springer_dim, 5);
}

TEST(AvCore, GkDimension) {
  Context sp(HermitianType::sp(11));
  Weight t = parse_weight("25/2,23/2,19/2,15/2,13/2,11/2,9/2,-3/2,-7/2,-9/2,-17/2");
  auto sub = integral_subsystem(t, sp.rs, sp.poset);
  EXPECT_EQ(gk_dimension(sp.type(), Integrality::HalfIntegral, 3, 7, &sub), 56);
  EXPECT_EQ((11 - 3) * (2 * 3 + 1), 56);
  Context so(HermitianType::so_odd(3));
  Weight h = parse_weight("1/2,2,1");
  auto so_sub = integral_subsystem(h, so.rs, so.poset);
  EXPECT_EQ(gk_dimension(so.type(), Integrality::HalfIntegral, 0, 1, &so_sub), 4);
  for (const auto& ty : all_families()) EXPECT_EQ(gk_dimension(ty, Integrality::Integral, 0, 0, nullptr), 0);
  // A deliberately wrong k trips the live consistency check.
  EXPECT_THROW(gk_dimension(sp.type(), Integrality::HalfIntegral, 3, 6, &sub), Error);
}

TEST(AvCore, AssociatedVarietyPipeline) {
  Context sp(HermitianType::sp(11));
  auto r = associated_variety(sp, parse_weight("25/2,23/2,19/2,15/2,13/2,11/2,9/2,-3/2,-7/2,-9/2,-17/2"));
  EXPECT_EQ(r.integrality, Integrality::HalfIntegral);
  EXPECT_EQ(r.width_m, 3);
  EXPECT_EQ(r.k, 7);
  EXPECT_EQ(r.orbit_dim, 56);
  EXPECT_EQ(r.gk_dim, 56);
  EXPECT_EQ(r.delta, 11);
  EXPECT_FALSE(r.w_word.has_value());

  Context su(HermitianType::su(4, 3));
  auto s = associated_variety(su, parse_weight("2,1,-1,-2,3,0,-3"));
  EXPECT_EQ(s.integrality, Integrality::Integral);
  EXPECT_EQ(s.width_m, 2);
  EXPECT_EQ(s.k, 2);
  EXPECT_EQ(s.orbit_dim, 10);
  EXPECT_EQ(s.orbit_label, "[2^2,1^3]");
  EXPECT_EQ(s.y_size, 6);

  for (const auto& ty : all_families()) {
    Context ctx(ty);
    auto z = associated_variety(ctx, ctx.rs.rho);
    EXPECT_EQ(z.integrality, Integrality::Integral);
    EXPECT_EQ(z.width_m, 0);
    EXPECT_EQ(z.k, 0);
    EXPECT_EQ(z.orbit_dim, 0);
    EXPECT_EQ(z.gk_dim, z.orbit_dim);
  }
}

TEST(AvCore, OtherClassForcesRealRank) {
  Context su(HermitianType::su(2, 1));
  auto r = associated_variety(su, parse_weight("4/3,1/3,0"));
  EXPECT_EQ(r.integrality, Integrality::Other);
  EXPECT_EQ(r.width_m, 0);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.gk_dim, 2);
  EXPECT_EQ(r.delta, 2);
}

TEST(AvCore, Binomial) {
  EXPECT_EQ(binom(7, 3), 35);
  EXPECT_EQ(binom(21, 10), 352716);
  EXPECT_EQ(binom(5, -1), 0);
  EXPECT_EQ(binom(5, 6), 0);
}
