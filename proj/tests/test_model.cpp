#include <gtest/gtest.h>

#include "opinion/opinion.hpp"

using namespace opinion;

namespace {

OpinionState running_state() { return induce_opinion(running_example::table(), running_example::profile()); }

AltSubset subset(std::initializer_list<int> members, int n) {
  AltMask m = 0;
  for (int x : members) m |= bit(x);
  return AltSubset::of(m, n);
}

}  // namespace

TEST(AltSubset, RejectsEmptyAndOutOfRange) {
  EXPECT_THROW(AltSubset::of(0, 3), ValidationError);
  EXPECT_THROW(AltSubset::of(0b1000, 3), ValidationError);
  EXPECT_EQ(AltSubset::of(0b101, 3).size(), 2);
  EXPECT_TRUE(AltSubset::of(full_mask(64), 64).contains(63));
}

TEST(Universe, SizeBounds) {
  EXPECT_THROW(check_universe(2), ValidationError);
  EXPECT_THROW(check_universe(65), ValidationError);
  EXPECT_NO_THROW(check_universe(64));
  EXPECT_EQ(nonempty_subset_count(3), 7u);
  EXPECT_EQ(subsets_containing_one(4), 8u);
}

TEST(WeakOrder, ValidatesPartition) {
  EXPECT_THROW(WeakOrder(3, {{0, 1}}), ValidationError);
  EXPECT_THROW(WeakOrder(3, {{0, 1}, {1, 2}}), ValidationError);
  EXPECT_THROW(WeakOrder(3, {{0, 1, 2}, {}}), ValidationError);
  const WeakOrder r(3, {{2, 0}, {1}});
  EXPECT_TRUE(r.prefers(0, 1));
  EXPECT_TRUE(r.indifferent(0, 2));
  EXPECT_FALSE(r.weakly_prefers(1, 2));
  EXPECT_EQ(format_weak_order(r, {"a", "b", "c"}), "{a,c} > {b}");
}

TEST(CriterionTable, EnforcesModelInvariants) {
  const std::vector<std::string> alts{"p", "q", "r"};
  EXPECT_THROW(CriterionTable({"p", "q"}, {"a"}, {AltSubset::singleton(0)}), ValidationError);
  EXPECT_THROW(CriterionTable(alts, {}, {}), ValidationError);
  EXPECT_THROW(CriterionTable({"p", "p", "r"}, {"a"}, {AltSubset::singleton(0)}), ValidationError);
  EXPECT_THROW(CriterionTable(alts, {"a"}, {AltSubset::singleton(3)}), ValidationError);
  try {
    CriterionTable(alts, {"a", "b"}, {AltSubset::singleton(1), AltSubset::singleton(1)});
    FAIL() << "equivalent criteria accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("'a' and 'b'"), std::string::npos);
  }
}

TEST(CriterionTable, RunningExampleTruthSets) {
  const auto t = running_example::table();
  EXPECT_EQ(t.num_alternatives(), 7);
  EXPECT_EQ(t.num_criteria(), 6);
  EXPECT_EQ(t.truth(0), subset({0, 1, 2, 3}, 7));
  EXPECT_EQ(t.truth(5), subset({4, 5, 6}, 7));
  EXPECT_EQ(t.criterion_for(t.truth(3)), std::optional<int>(3));
  EXPECT_EQ(t.criterion_for(subset({0}, 7)), std::nullopt);
  EXPECT_FALSE(t.is_symmetric());
}

TEST(PreferenceProfile, RequiresLinearOrders) {
  EXPECT_THROW(PreferenceProfile(3, {"v"}, {{0, 1}}), ValidationError);
  EXPECT_THROW(PreferenceProfile(3, {"v"}, {{0, 1, 1}}), ValidationError);
  EXPECT_THROW(PreferenceProfile(3, {"v"}, {{0, 1, 3}}), ValidationError);
  EXPECT_THROW(PreferenceProfile(3, {}, {}), ValidationError);
  const PreferenceProfile p(3, {"v"}, {{2, 0, 1}});
  EXPECT_EQ(p.position(0, 2), 0);
  EXPECT_TRUE(p.weakly_prefers(0, 0, 0));
  EXPECT_TRUE(p.weakly_prefers(0, 2, 1));
  EXPECT_FALSE(p.weakly_prefers(0, 1, 0));
}

TEST(OpinionState, NormalizesEntries) {
  const auto s = subset({0}, 3), t = subset({1, 2}, 3);
  const OpinionState o(3, {{s, t, 2}, {s, t, 3}, {t, s, 0}});
  EXPECT_EQ(o.count(s, t), 5u);
  EXPECT_EQ(o.count(t, s), 0u);
  EXPECT_EQ(o.entries().size(), 1u);
  EXPECT_THROW(OpinionState(3, {{subset({3}, 4), s, 1}}), ValidationError);
}

TEST(SupportOf, Examples) {
  const auto t = running_example::table();
  EXPECT_EQ(support_of(running_state(), t.truth(3).bits()), 13u);
  EXPECT_EQ(support_of(OpinionState(3), 0b011), 0u);
  const auto s = subset({0, 2}, 3);
  EXPECT_EQ(support_of(OpinionState(3, {{s, subset({1}, 3), 5}}), s.bits()), 5u);
  EXPECT_THROW(support_of(OpinionState(3), 0), ValidationError);
}

TEST(QuotientOrder, RunningExample) {
  const auto t = running_example::table();
  const auto q = quotient_order(running_state());
  const std::uint64_t supports[] = {13, 12, 11, 10, 9, 8};
  const int criteria[] = {3, 2, 1, 0, 5, 4};
  ASSERT_EQ(q.explicit_classes().size(), 6u);
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(q.class_support(k), supports[k]);
    EXPECT_EQ(q.explicit_classes()[k].members, std::vector<AltSubset>{t.truth(criteria[k])});
  }
  EXPECT_TRUE(q.residual_present());
  EXPECT_EQ(q.class_size(6), 121u);
  EXPECT_EQ(q.class_support(6), 0u);
  EXPECT_EQ(q.num_classes(), 7u);
}

TEST(QuotientOrder, EmptyStateIsOneResidualClass) {
  const auto q = quotient_order(OpinionState(3));
  EXPECT_EQ(q.num_classes(), 1u);
  EXPECT_TRUE(q.is_residual(0));
  EXPECT_EQ(q.class_size(0), 7u);
  EXPECT_EQ(q.class_meet(0), 0u);
}

TEST(QuotientOrder, DistinctSupportsLeaveNoResidual) {
  std::map<AltSubset, std::uint64_t> m;
  for (AltMask s = 1; s <= 7; ++s) m[AltSubset::of(s, 3)] = s;
  const auto q = quotient_order(state_from_support(3, m));
  EXPECT_FALSE(q.residual_present());
  EXPECT_EQ(q.num_classes(), 7u);
  for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(q.class_size(k), 1u);
  const auto d = oracle::DenseState::from_state(state_from_support(3, m));
  EXPECT_EQ(oracle::dense_classes(d).size(), 7u);
}

TEST(QuotientOrder, ZeroSupportEntriesJoinTheResidual) {
  const auto s = subset({0}, 3);
  const OpinionState o(3, {{s, s, 0}});
  EXPECT_EQ(quotient_order(o), quotient_order(OpinionState(3)));
}

TEST(QuotientOrder, RejectsMalformedClasses) {
  const auto s = subset({0}, 3), t = subset({1}, 3);
  EXPECT_THROW(QuotientOrder(3, {{2, {s}}, {2, {t}}}), ValidationError);
  EXPECT_THROW(QuotientOrder(3, {{0, {s}}}), ValidationError);
  EXPECT_THROW(QuotientOrder(3, {{1, {}}}), ValidationError);
}

TEST(ClassUnionIntersection, Examples) {
  const auto t = running_example::table();
  const auto q = quotient_order(running_state());
  EXPECT_EQ(class_union_intersection(q, 2), subset({0, 2, 3, 4}, 7).bits());
  EXPECT_EQ(class_union_intersection(q, 1), t.truth(3).bits());
  EXPECT_THROW(class_union_intersection(q, 0), ValidationError);
  EXPECT_THROW(class_union_intersection(q, 8), ValidationError);
}

TEST(ClassUnionIntersection, ResidualOfSubsetsContainingX) {
  // Every subset avoiding x is listed, so the residual consists of the four
  // subsets containing x.
  const OpinionState o = state_from_support(3, {{subset({1}, 3), 1}, {subset({2}, 3), 1}, {subset({1, 2}, 3), 1}});
  const auto q = quotient_order(o);
  ASSERT_EQ(q.num_classes(), 2u);
  EXPECT_EQ(q.class_meet(1), bit(0));
  EXPECT_EQ(q.class_meet(1), oracle::dense_class_meet(oracle::DenseState::from_state(o), 1));
}

TEST(EScore, RunningExample) {
  const auto o = running_state();
  const std::uint64_t expected[] = {4, 0, 2, 4, 2, 1, 1};
  for (int x = 0; x < 7; ++x) EXPECT_EQ(e_score(o, x), expected[x]) << x;
  EXPECT_THROW(e_score(o, 7), ValidationError);
  EXPECT_THROW(e_score(o, -1), ValidationError);
}

TEST(EScore, SingletonTopClass) {
  const auto o = state_from_support(4, {{subset({2}, 4), 3}});
  for (int y = 0; y < 4; ++y) {
    if (y != 2) {
      EXPECT_EQ(e_score(o, y), 0u);
    }
  }
  EXPECT_EQ(e_score(o, 2), 1u);
}

TEST(ThetaVector, ResidualComponentCountsUnlistedSubsets) {
  const auto q = quotient_order(running_state());
  const auto theta = theta_vector(q, 6);
  EXPECT_EQ(theta.back(), 62u);
  EXPECT_EQ(tau_vector(q, 6).back(), 64u);
}
