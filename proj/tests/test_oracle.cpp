#include <gtest/gtest.h>

#include "opinion/opinion.hpp"

using namespace opinion;

TEST(DenseState, SizeCap) {
  EXPECT_THROW(oracle::DenseState(6, std::vector<std::uint64_t>(63, 0)), ValidationError);
  EXPECT_THROW(oracle::DenseState(3, std::vector<std::uint64_t>(6, 0)), ValidationError);
  const auto running = induce_opinion(running_example::table(), running_example::profile());
  EXPECT_THROW(oracle::DenseState::from_state(running), ValidationError);
}

TEST(DenseState, AllEqualSupportsGiveZeroScores) {
  const oracle::DenseState d(4, std::vector<std::uint64_t>(15, 2));
  for (int x = 0; x < 4; ++x) EXPECT_EQ(oracle::dense_e_score(d, x), 0u);
  EXPECT_THROW(oracle::dense_e_score(d, 4), ValidationError);
}

TEST(DenseRankings, EmptySupportIsIndifferentEverywhere) {
  const auto r = oracle::dense_rankings(oracle::DenseState(3, std::vector<std::uint64_t>(7, 0)));
  for (const WeakOrder* w : {&r.iis, &r.support, &r.lexcel, &r.iis_tb_order, &r.iis_tb_tau, &r.f1, &r.f2, &r.indifferent}) {
    EXPECT_EQ(*w, WeakOrder::single_class(3));
  }
}

TEST(Oracle, SparseAgreesWithDenseOnSeededStates) {
  for (int n : {3, 4, 5}) {
    Rng rng(100 + n);
    for (int t = 0; t < (n == 5 ? 300 : 1500); ++t) {
      const auto o = random_state(n, rng);
      const auto m = dense_mismatch(o);
      ASSERT_FALSE(m.has_value()) << *m;
    }
  }
}

// Every collection L of listed subsets, n <= 4: the residual meet computed by
// counting equals the literal intersection of the unlisted subsets.
TEST(Oracle, ResidualIdentityExhaustive) {
  for (int n : {3, 4}) {
    const int subsets = (1 << n) - 1;
    for (std::uint32_t listed = 0; listed < (1u << subsets) - 1; ++listed) {
      std::vector<AltSubset> members;
      AltMask literal = full_mask(n);
      for (int s = 1; s <= subsets; ++s) {
        if ((listed >> (s - 1)) & 1) {
          members.push_back(AltSubset::of(static_cast<AltMask>(s), n));
        } else {
          literal &= static_cast<AltMask>(s);
        }
      }
      std::vector<SupportClass> classes;
      if (!members.empty()) classes.push_back({1, members});
      const QuotientOrder q(n, classes);
      ASSERT_TRUE(q.residual_present());
      ASSERT_EQ(q.class_meet(q.num_classes() - 1), literal) << "n=" << n << " listed=" << listed;
    }
  }
}
