#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "criteria.hpp"
#include "subset.hpp"
#include "weak_order.hpp"

namespace opinion {

/// Borda scores of criteria and the induced per-alternative sums.
struct BordaTally {
  std::vector<std::uint64_t> criterion_scores;    // s^B(c)
  std::vector<std::uint64_t> alternative_scores;  // sum of s^B(c) over c with x in Tr(c)
};

/// s^B(c) counts, over all voters, the criteria d with c weakly above d. The
/// count includes d = c, so the top of an m-criteria order scores m and the
/// bottom scores 1.
inline BordaTally borda_criterion_scores(const CriterionTable& table, const PreferenceProfile& profile) {
  require_compatible(table, profile);
  const int m = table.num_criteria();
  BordaTally tally;
  tally.criterion_scores.assign(m, 0);
  for (int i = 0; i < profile.num_voters(); ++i) {
    for (int c = 0; c < m; ++c) tally.criterion_scores[c] += static_cast<std::uint64_t>(m - profile.position(i, c));
  }
  tally.alternative_scores.assign(table.num_alternatives(), 0);
  for (int c = 0; c < m; ++c) {
    for (int x = 0; x < table.num_alternatives(); ++x) {
      if (table.truth(c).contains(x)) tally.alternative_scores[x] += tally.criterion_scores[c];
    }
  }
  return tally;
}

/// B: criteria grouped by equal Borda score, highest first.
inline WeakOrder borda_ranking(const BordaTally& tally) {
  return WeakOrder::by_key_descending(tally.criterion_scores.size(),
                                      [&](int c) { return tally.criterion_scores[c]; });
}

/// T_1, ..., T_l for the Borda classes: T_k holds the alternatives satisfying
/// every criterion in the top k classes. Entries may be empty.
inline std::vector<AltMask> nurmi_cascade(const CriterionTable& table, const WeakOrder& borda) {
  std::vector<AltMask> cascade;
  AltMask current = full_mask(table.num_alternatives());
  for (const auto& cls : borda.classes()) {
    for (int c : cls) current &= table.truth(c).bits();
    cascade.push_back(current);
  }
  return cascade;
}

/// Nurmi's first method. X when T_1 is empty, otherwise the last nonempty T_k.
inline AltSubset nurmi_first(const CriterionTable& table, const PreferenceProfile& profile) {
  const auto cascade = nurmi_cascade(table, borda_ranking(borda_criterion_scores(table, profile)));
  const int n = table.num_alternatives();
  if (cascade.front() == 0) return AltSubset::of(full_mask(n), n);
  AltMask chosen = cascade.front();
  for (AltMask t : cascade) {
    if (t == 0) break;
    chosen = t;
  }
  return AltSubset::of(chosen, n);
}

/// Nurmi's second method: arg max of the per-alternative Borda sums. Ties are
/// kept.
inline AltSubset nurmi_second(const CriterionTable& table, const PreferenceProfile& profile) {
  const auto tally = borda_criterion_scores(table, profile);
  const auto best = *std::max_element(tally.alternative_scores.begin(), tally.alternative_scores.end());
  AltMask chosen = 0;
  for (int x = 0; x < table.num_alternatives(); ++x) {
    if (tally.alternative_scores[x] == best) chosen |= bit(x);
  }
  return AltSubset::of(chosen, table.num_alternatives());
}

}  // namespace opinion
