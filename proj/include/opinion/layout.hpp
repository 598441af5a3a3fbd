#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "error.hpp"
#include "opinion_state.hpp"
#include "quotient_order.hpp"
#include "subset.hpp"

namespace opinion {

using Rng = std::mt19937_64;

/// A target quotient order: explicit classes best first; every subset not
/// listed falls into the implicit worst class. Realizing a layout assigns
/// strictly decreasing positive supports, so class k of the layout is class k
/// of the realized state's quotient order.
struct QuotientLayout {
  int universe = 3;
  std::vector<std::vector<AltSubset>> classes;

  std::uint64_t listed() const {
    std::uint64_t count = 0;
    for (const auto& cls : classes) count += cls.size();
    return count;
  }
  bool has_residual() const { return listed() < nonempty_subset_count(universe); }
  std::size_t num_classes() const { return classes.size() + (has_residual() ? 1 : 0); }
};

/// Explicit classes of an existing quotient order.
inline QuotientLayout layout_of(const QuotientOrder& q) {
  QuotientLayout layout{q.universe(), {}};
  for (const auto& cls : q.explicit_classes()) layout.classes.push_back(cls.members);
  return layout;
}

/// Support L - k for class k with o(S, S) carrying the whole support.
inline OpinionState realize(const QuotientLayout& layout) {
  std::map<AltSubset, std::uint64_t> support;
  const std::uint64_t levels = layout.classes.size();
  for (std::size_t k = 0; k < layout.classes.size(); ++k) {
    for (AltSubset s : layout.classes[k]) {
      if (!support.emplace(s, levels - k).second) throw ValidationError("layout lists a subset twice");
    }
  }
  return state_from_support(layout.universe, support);
}

/// Random supports with random gaps between levels; each subset's support is
/// split over up to two opinion entries with random partners.
inline OpinionState realize(const QuotientLayout& layout, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> gap(1, 3);
  std::vector<std::uint64_t> level(layout.classes.size());
  std::uint64_t value = 0;
  for (std::size_t k = layout.classes.size(); k-- > 0;) level[k] = value += gap(rng);

  std::vector<AltSubset> listed;
  for (const auto& cls : layout.classes) listed.insert(listed.end(), cls.begin(), cls.end());
  std::set<AltSubset> seen(listed.begin(), listed.end());
  if (seen.size() != listed.size()) throw ValidationError("layout lists a subset twice");

  std::vector<OpinionEntry> entries;
  std::uniform_int_distribution<std::size_t> pick(0, listed.empty() ? 0 : listed.size() - 1);
  for (std::size_t k = 0; k < layout.classes.size(); ++k) {
    for (AltSubset s : layout.classes[k]) {
      const std::uint64_t v = level[k];
      std::uniform_int_distribution<std::uint64_t> share(0, v);
      const std::uint64_t first = share(rng);
      entries.push_back({s, listed[pick(rng)], first});
      entries.push_back({s, listed[pick(rng)], v - first});
    }
  }
  return OpinionState(layout.universe, entries);
}

namespace detail {

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

/// Splits `items` (in their current order) into `groups` nonempty runs.
template <typename T>
std::vector<std::vector<T>> cut(const std::vector<T>& items, int groups, Rng& rng) {
  const int size = static_cast<int>(items.size());
  groups = std::clamp(groups, 1, std::max(size, 1));
  std::vector<int> points(size - 1);
  for (int i = 0; i < size - 1; ++i) points[i] = i + 1;
  std::shuffle(points.begin(), points.end(), rng);
  points.resize(groups - 1);
  std::sort(points.begin(), points.end());
  std::vector<std::vector<T>> runs;
  int start = 0;
  for (int p : points) {
    runs.emplace_back(items.begin() + start, items.begin() + p);
    start = p;
  }
  runs.emplace_back(items.begin() + start, items.end());
  return runs;
}

template <typename T>
std::vector<std::vector<T>> random_partition(std::vector<T> items, Rng& rng) {
  std::shuffle(items.begin(), items.end(), rng);
  const int size = static_cast<int>(items.size());
  return cut(items, uniform(rng, 1, std::min(size, 4)), rng);
}

inline std::set<AltSubset> listed_set(const QuotientLayout& layout) {
  std::set<AltSubset> listed;
  for (const auto& cls : layout.classes) listed.insert(cls.begin(), cls.end());
  return listed;
}

}  // namespace detail

/// Dense layouts (|X| <= 5) enumerate every residual subset; sparse layouts
/// sample new subsets outside the listed ones.
inline bool is_dense_universe(int universe) { return universe <= 5; }

/// Up to `wanted` distinct subsets from the residual of `layout`, in random
/// order. Dense universes enumerate; sparse ones sample.
inline std::vector<AltSubset> sample_residual(const QuotientLayout& layout, std::uint64_t wanted, Rng& rng) {
  const auto listed = detail::listed_set(layout);
  std::vector<AltSubset> picked;
  if (is_dense_universe(layout.universe)) {
    for (AltMask s = 1; s <= full_mask(layout.universe); ++s) {
      AltSubset subset = AltSubset::of(s, layout.universe);
      if (!listed.count(subset)) picked.push_back(subset);
    }
    std::shuffle(picked.begin(), picked.end(), rng);
    if (picked.size() > wanted) picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(wanted), picked.end());
    return picked;
  }
  std::set<AltSubset> chosen;
  std::uniform_int_distribution<AltMask> any(1, full_mask(layout.universe));
  for (int attempts = 0; chosen.size() < wanted && attempts < 1000; ++attempts) {
    AltSubset s = AltSubset::of(any(rng), layout.universe);
    if (!listed.count(s) && chosen.insert(s).second) picked.push_back(s);
  }
  return picked;
}

/// Random layout. Subsets are ordered by how many members of a random
/// "favoured" group they contain (plus noise) before being cut into classes,
/// so top classes tend to share members and e-scores above 1 occur.
inline QuotientLayout random_layout(int universe, Rng& rng) {
  check_universe(universe);
  const AltMask favoured = std::uniform_int_distribution<AltMask>(0, full_mask(universe))(rng);
  std::vector<AltSubset> pool;
  if (is_dense_universe(universe)) {
    for (AltMask s = 1; s <= full_mask(universe); ++s) pool.push_back(AltSubset::of(s, universe));
  } else {
    QuotientLayout empty{universe, {}};
    pool = sample_residual(empty, static_cast<std::uint64_t>(detail::uniform(rng, 0, 40)), rng);
    for (auto& s : pool) {
      if (detail::coin(rng)) s = AltSubset::of(s.bits() | favoured, universe);
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  }
  std::vector<std::pair<int, AltSubset>> scored;
  for (AltSubset s : pool) scored.emplace_back(mask_size(s.bits() & favoured) * 8 + detail::uniform(rng, 0, 9), s);
  std::shuffle(scored.begin(), scored.end(), rng);
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  std::size_t keep = scored.size();
  if (is_dense_universe(universe) && detail::coin(rng)) {
    keep = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<int>(scored.size()) - 1));
  }
  std::vector<AltSubset> listed;
  for (std::size_t i = 0; i < keep; ++i) listed.push_back(scored[i].second);

  QuotientLayout layout{universe, {}};
  if (!listed.empty()) {
    const int max_classes = std::min<int>(static_cast<int>(listed.size()), 7);
    layout.classes = detail::cut(listed, detail::uniform(rng, 1, max_classes), rng);
  }
  return layout;
}

}  // namespace opinion
