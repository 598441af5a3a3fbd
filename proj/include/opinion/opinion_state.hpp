#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "subset.hpp"

namespace opinion {

/// One stored count o(S, T): the number of opinions "S is at least as good as T".
struct OpinionEntry {
  AltSubset better;
  AltSubset worse;
  std::uint64_t count;
};

/// A state of opinion o over the nonempty subsets of X, stored sparsely.
/// Absent pairs have count 0; zero counts are dropped on construction.
class OpinionState {
 public:
  using Key = std::pair<AltSubset, AltSubset>;

  explicit OpinionState(int universe) : universe_(universe) { check_universe(universe); }

  /// Repeated (S, T) pairs accumulate.
  OpinionState(int universe, const std::vector<OpinionEntry>& entries) : OpinionState(universe) {
    for (const auto& e : entries) add(e.better, e.worse, e.count);
  }

  int universe() const { return universe_; }
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::uint64_t count(AltSubset s, AltSubset t) const {
    auto it = entries_.find({s, t});
    return it == entries_.end() ? 0 : it->second;
  }

  friend bool operator==(const OpinionState&, const OpinionState&) = default;

 private:
  void add(AltSubset s, AltSubset t, std::uint64_t count) {
    if (!s.fits(universe_) || !t.fits(universe_)) {
      throw ValidationError("opinion refers to alternatives outside the universe");
    }
    if (count == 0) return;
    entries_[{s, t}] += count;
  }

  int universe_;
  std::map<Key, std::uint64_t> entries_;
};

/// m_o: support of every positively supported subset. Unlisted subsets have
/// support 0.
class SupportVector {
 public:
  SupportVector(int universe, std::map<AltSubset, std::uint64_t> support)
      : universe_(universe), support_(std::move(support)) {
    check_universe(universe);
    for (auto it = support_.begin(); it != support_.end();) {
      if (!it->first.fits(universe_)) throw ValidationError("support refers to an unknown alternative");
      it = it->second == 0 ? support_.erase(it) : std::next(it);
    }
  }

  int universe() const { return universe_; }
  const std::map<AltSubset, std::uint64_t>& positive() const { return support_; }

  std::uint64_t at(AltSubset s) const {
    auto it = support_.find(s);
    return it == support_.end() ? 0 : it->second;
  }

 private:
  int universe_;
  std::map<AltSubset, std::uint64_t> support_;
};

inline SupportVector support(const OpinionState& o) {
  std::map<AltSubset, std::uint64_t> rows;
  for (const auto& [key, count] : o.entries()) rows[key.first] += count;
  return SupportVector(o.universe(), std::move(rows));
}

/// m_o(S) = sum over T of o(S, T).
inline std::uint64_t support_of(const OpinionState& o, AltMask s) {
  if (s == 0) throw ValidationError("support_of: subset must be nonempty");
  AltSubset subset = AltSubset::of(s, o.universe());
  std::uint64_t total = 0;
  auto it = o.entries().lower_bound({subset, AltSubset::singleton(0)});
  for (; it != o.entries().end() && it->first.first == subset; ++it) total += it->second;
  return total;
}

/// A state whose support equals the given vector: o(S, S) = v_S.
inline OpinionState state_from_support(int universe, const std::map<AltSubset, std::uint64_t>& support) {
  std::vector<OpinionEntry> entries;
  entries.reserve(support.size());
  for (const auto& [s, v] : support) entries.push_back({s, s, v});
  return OpinionState(universe, entries);
}

}  // namespace opinion
