#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "layout.hpp"
#include "opinion_state.hpp"
#include "subset.hpp"

namespace opinion {

inline std::vector<std::string> index_names(const std::string& prefix, int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

/// `criteria` distinct nonempty truth sets over `universe` alternatives.
inline CriterionTable random_table(int universe, int criteria, Rng& rng) {
  check_universe(universe);
  const AltMask all = full_mask(universe);
  if (static_cast<AltMask>(criteria) > all) throw ValidationError("more criteria than nonempty subsets");
  std::uniform_int_distribution<AltMask> any(1, all);
  std::set<AltMask> chosen;
  std::vector<AltSubset> truth;
  while (static_cast<int>(truth.size()) < criteria) {
    const AltMask m = any(rng);
    if (chosen.insert(m).second) truth.push_back(AltSubset::of(m, universe));
  }
  return CriterionTable(index_names("x", universe), index_names("c", criteria), std::move(truth));
}

/// Symmetric table: the union of `partitions` random set partitions of X with
/// pairwise distinct blocks, so every alternative satisfies exactly
/// `partitions` criteria. Returns nullopt when the blocks collide or the
/// criterion count leaves [min_criteria, max_criteria].
inline std::optional<CriterionTable> try_symmetric_table(int universe, int partitions, int min_criteria,
                                                        int max_criteria, Rng& rng) {
  check_universe(universe);
  std::set<AltMask> blocks;
  std::vector<AltSubset> truth;
  std::uniform_int_distribution<int> pick_blocks(1, universe);
  for (int p = 0; p < partitions; ++p) {
    const int count = pick_blocks(rng);
    std::vector<AltMask> parts(count, 0);
    std::vector<int> order(universe);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    // The first `count` alternatives seed distinct blocks so none is empty.
    std::uniform_int_distribution<int> any_block(0, count - 1);
    for (int i = 0; i < universe; ++i) parts[i < count ? i : any_block(rng)] |= bit(order[i]);
    for (AltMask b : parts) {
      if (!blocks.insert(b).second) return std::nullopt;
      truth.push_back(AltSubset::of(b, universe));
    }
  }
  const int m = static_cast<int>(truth.size());
  if (m < min_criteria || m > max_criteria) return std::nullopt;
  return CriterionTable(index_names("x", universe), index_names("c", m), std::move(truth));
}

inline CriterionTable random_symmetric_table(int universe, int min_criteria, int max_criteria, Rng& rng) {
  std::uniform_int_distribution<int> pick_partitions(1, 3);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    if (auto t = try_symmetric_table(universe, pick_partitions(rng), min_criteria, max_criteria, rng)) return *t;
  }
  throw ValidationError("could not sample a symmetric table");
}

inline PreferenceProfile random_profile(int criteria, int voters, Rng& rng) {
  std::vector<std::vector<int>> orders;
  for (int i = 0; i < voters; ++i) {
    std::vector<int> order(criteria);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    orders.push_back(std::move(order));
  }
  return PreferenceProfile(criteria, index_names("v", voters), std::move(orders));
}

/// Unstructured sparse state: a handful of random (S, T) entries with small
/// counts, so equal supports and zero rows are common.
inline OpinionState random_entry_state(int universe, Rng& rng) {
  check_universe(universe);
  std::uniform_int_distribution<AltMask> any(1, full_mask(universe));
  std::uniform_int_distribution<int> size(0, 12);
  std::uniform_int_distribution<std::uint64_t> count(0, 3);
  std::vector<OpinionEntry> entries;
  const int k = size(rng);
  for (int i = 0; i < k; ++i) {
    entries.push_back({AltSubset::of(any(rng), universe), AltSubset::of(any(rng), universe), count(rng)});
  }
  return OpinionState(universe, entries);
}

/// Alternates unstructured entry states with realized random layouts.
inline OpinionState random_state(int universe, Rng& rng) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return random_entry_state(universe, rng);
  return realize(random_layout(universe, rng), rng);
}

}  // namespace opinion
