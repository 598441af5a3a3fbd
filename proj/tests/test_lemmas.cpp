#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "opinion/opinion.hpp"

using namespace opinion;

namespace {

template <typename Check>
void for_random_quotients(std::uint64_t seed, int trials, Check&& check) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 3 + t % 5;
    const auto o = random_state(n, rng);
    check(o, quotient_order(o));
  }
}

template <typename Check>
void for_instances(Axiom kind, Check&& check) {
  for (int n : {3, 4, 6, 12}) {
    for (const auto& inst : generate_instances(kind, n, 17, 200).instances) check(inst);
  }
}

}  // namespace

TEST(EScoreBound, EScoreBelowClassCount) {
  for_random_quotients(1, 2000, [](const OpinionState&, const QuotientOrder& q) {
    for (int x = 0; x < q.universe(); ++x) EXPECT_LT(e_score(q, x), q.num_classes());
  });
}

TEST(PrefixIntersections, AreAntitone) {
  for_random_quotients(2, 1000, [](const OpinionState&, const QuotientOrder& q) {
    AltMask previous = full_mask(q.universe());
    for (std::size_t k = 1; k <= q.num_classes(); ++k) {
      const AltMask current = class_union_intersection(q, k);
      EXPECT_EQ(current & ~previous, 0u);
      previous = current;
    }
    EXPECT_EQ(previous, 0u);
  });
}

TEST(ThetaVector, CountsPartitionTheSubsetsContainingX) {
  for_random_quotients(3, 1000, [](const OpinionState&, const QuotientOrder& q) {
    for (int x = 0; x < q.universe(); ++x) {
      const auto theta = theta_vector(q, x);
      ASSERT_EQ(theta.size(), q.num_classes());
      EXPECT_EQ(std::accumulate(theta.begin(), theta.end(), std::uint64_t{0}), subsets_containing_one(q.universe()));
      for (std::size_t k = 0; k < theta.size(); ++k) EXPECT_LE(theta[k], q.class_size(k));
      const auto tau = tau_vector(q, x);
      EXPECT_EQ(tau.back(), subsets_containing_one(q.universe()));
    }
  });
}

TEST(ThetaVector, EScoreLeadingClassesAreFull) {
  // x lies in every member of the first e(x) classes, so theta_k = |Sigma_k| there.
  for_random_quotients(4, 1000, [](const OpinionState&, const QuotientOrder& q) {
    for (int x = 0; x < q.universe(); ++x) {
      const auto theta = theta_vector(q, x);
      for (std::uint64_t k = 0; k < e_score(q, x); ++k) EXPECT_EQ(theta[k], q.class_size(k));
    }
  });
}

TEST(Refinements, LexcelAndTauRefineIis) {
  for_random_quotients(5, 1500, [](const OpinionState&, const QuotientOrder& q) {
    const WeakOrder iis = iis_rank(q), lex = lexcel_rank(q), tau = iis_tiebreak_tau(q);
    for (int x = 0; x < q.universe(); ++x) {
      for (int y = 0; y < q.universe(); ++y) {
        if (iis.prefers(x, y)) {
          EXPECT_TRUE(lex.prefers(x, y));
          EXPECT_TRUE(tau.prefers(x, y));
        }
        if (theta_vector(q, x) == theta_vector(q, y)) {
          EXPECT_TRUE(iis.indifferent(x, y));
        }
      }
    }
  });
}

TEST(Support, StateFromSupportReproducesIt) {
  for_random_quotients(6, 500, [](const OpinionState& o, const QuotientOrder& q) {
    const SupportVector m = support(o);
    std::map<AltSubset, std::uint64_t> values(m.positive().begin(), m.positive().end());
    const auto rebuilt = state_from_support(o.universe(), values);
    EXPECT_EQ(support(rebuilt).positive(), m.positive());
    EXPECT_EQ(quotient_order(rebuilt), q);
  });
}

TEST(InducedStates, SupportsAreBordaScoresOnTruthSets) {
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto table = random_table(3 + t % 5, 1 + t % 6, rng);
    const auto profile = random_profile(table.num_criteria(), 1 + t % 4, rng);
    const auto tally = borda_criterion_scores(table, profile);
    const SupportVector m = support(induce_opinion(table, profile));
    ASSERT_EQ(m.positive().size(), static_cast<std::size_t>(table.num_criteria()));
    for (int c = 0; c < table.num_criteria(); ++c) EXPECT_EQ(m.at(table.truth(c)), tally.criterion_scores[c]);
  }
}

TEST(InducedStates, CascadeMatchesPrefixIntersections) {
  Rng rng(8);
  for (int t = 0; t < 300; ++t) {
    const auto table = random_table(3 + t % 5, 1 + t % 6, rng);
    const auto profile = random_profile(table.num_criteria(), 1 + t % 4, rng);
    const auto q = quotient_order(induce_opinion(table, profile));
    const auto cascade = nurmi_cascade(table, borda_ranking(borda_criterion_scores(table, profile)));
    for (std::size_t k = 0; k < cascade.size(); ++k) EXPECT_EQ(cascade[k], class_union_intersection(q, k + 1));
  }
}

TEST(Relabelling, PermutationCarriesEScores) {
  for_instances(Axiom::nt, [](const AxiomInstance& inst) {
    for (int x = 0; x < inst.first.universe(); ++x) EXPECT_EQ(e_score(inst.first, x), e_score(*inst.second, inst.permutation[x]));
  });
}

TEST(NonUnanimousPromotion, InuiKeepsEligibleEScores) {
  for_instances(Axiom::inui, [](const AxiomInstance& inst) {
    const AltMask eligible = inui_eligible(inst);
    for (int x = 0; x < inst.first.universe(); ++x) {
      if (!mask_contains(eligible, x)) continue;
      EXPECT_EQ(e_score(inst.first, x), e_score(*inst.second, x));
      EXPECT_LT(e_score(inst.first, x), inst.delta_class + 1);
    }
  });
}

TEST(BestClassSplit, BestClassSplitShiftsEScores) {
  for_instances(Axiom::ibs, [](const AxiomInstance& inst) {
    const auto q1 = quotient_order(inst.first), q2 = quotient_order(*inst.second);
    const std::uint64_t parts = q2.num_classes() - q1.num_classes() + 1;
    for (int x = 0; x < inst.first.universe(); ++x) {
      const auto e1 = e_score(q1, x), e2 = e_score(q2, x);
      if (e1 > 0) {
        EXPECT_EQ(e2, parts - 1 + e1);
      } else {
        EXPECT_LE(e2, parts - 1);
      }
    }
  });
}

TEST(WorstClassSplit, WorstClassSplitKeepsEScores) {
  for_instances(Axiom::iws, [](const AxiomInstance& inst) {
    const auto q1 = quotient_order(inst.first), q2 = quotient_order(*inst.second);
    const std::uint64_t top = q1.num_classes() - 1;
    for (int x = 0; x < inst.first.universe(); ++x) {
      const auto e1 = e_score(q1, x), e2 = e_score(q2, x);
      if (e1 < top) {
        EXPECT_EQ(e2, e1);
      } else {
        EXPECT_GE(e2, top);
      }
    }
  });
}

TEST(TwoClassStates, TwoClassesScoreTheVetoSet) {
  for_instances(Axiom::wivip, [](const AxiomInstance& inst) {
    const auto q = quotient_order(inst.first);
    for (int x = 0; x < inst.first.universe(); ++x) {
      EXPECT_EQ(e_score(q, x), mask_contains(q.class_meet(0), x) ? 1u : 0u);
    }
  });
}
