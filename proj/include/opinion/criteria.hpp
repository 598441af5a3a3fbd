#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "subset.hpp"

namespace opinion {

/// Alternatives X, criteria C and the injective truth map Tr: C -> nonempty
/// subsets of X. Names live here only; everything downstream uses indices.
class CriterionTable {
 public:
  CriterionTable(std::vector<std::string> alternatives, std::vector<std::string> criteria,
                 std::vector<AltSubset> truth)
      : alternatives_(std::move(alternatives)), criteria_(std::move(criteria)), truth_(std::move(truth)) {
    const int n = num_alternatives();
    if (n < 3) throw ValidationError("at least 3 alternatives are required");
    if (n > kMaxAlternatives) throw ValidationError("at most 64 alternatives are supported");
    require_distinct(alternatives_, "alternative");
    if (criteria_.empty()) throw ValidationError("at least one criterion is required");
    require_distinct(criteria_, "criterion");
    if (truth_.size() != criteria_.size()) {
      throw ValidationError("truth map must have one subset per criterion");
    }
    std::unordered_map<AltSubset, int> seen;
    for (int c = 0; c < num_criteria(); ++c) {
      if (!truth_[c].fits(n)) {
        throw ValidationError("criterion '" + criteria_[c] + "' refers to an unknown alternative");
      }
      auto [it, inserted] = seen.emplace(truth_[c], c);
      if (!inserted) {
        throw ValidationError("criteria '" + criteria_[it->second] + "' and '" + criteria_[c] +
                              "' are logically equivalent (same satisfying alternatives)");
      }
    }
  }

  int num_alternatives() const { return static_cast<int>(alternatives_.size()); }
  int num_criteria() const { return static_cast<int>(criteria_.size()); }
  const std::vector<std::string>& alternatives() const { return alternatives_; }
  const std::vector<std::string>& criteria() const { return criteria_; }
  const std::vector<AltSubset>& truth_sets() const { return truth_; }

  /// Tr(c).
  AltSubset truth(int criterion) const { return truth_.at(criterion); }

  /// Tr*(S): the criterion whose truth set is S, if any.
  std::optional<int> criterion_for(AltSubset s) const {
    auto it = std::find(truth_.begin(), truth_.end(), s);
    if (it == truth_.end()) return std::nullopt;
    return static_cast<int>(it - truth_.begin());
  }

  std::optional<int> find_alternative(const std::string& name) const { return find(alternatives_, name); }
  std::optional<int> find_criterion(const std::string& name) const { return find(criteria_, name); }

  /// Number of criteria each alternative satisfies.
  std::vector<int> satisfaction_counts() const {
    std::vector<int> counts(alternatives_.size(), 0);
    for (AltSubset s : truth_) {
      for (int x = 0; x < num_alternatives(); ++x) counts[x] += s.contains(x) ? 1 : 0;
    }
    return counts;
  }

  /// Every alternative satisfies the same number of criteria.
  bool is_symmetric() const {
    auto counts = satisfaction_counts();
    return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
  }

  friend bool operator==(const CriterionTable&, const CriterionTable&) = default;

 private:
  static void require_distinct(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
      if (name.empty()) throw ValidationError(std::string(what) + " name must be nonempty");
      if (!seen.insert(name).second) {
        throw ValidationError(std::string("duplicate ") + what + " name '" + name + "'");
      }
    }
  }

  static std::optional<int> find(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<int>(it - names.begin());
  }

  std::vector<std::string> alternatives_;
  std::vector<std::string> criteria_;
  std::vector<AltSubset> truth_;
};

/// n linear orders over the criteria, each listed best first.
class PreferenceProfile {
 public:
  PreferenceProfile(int num_criteria, std::vector<std::string> voters, std::vector<std::vector<int>> orders)
      : num_criteria_(num_criteria), voters_(std::move(voters)), orders_(std::move(orders)) {
    if (voters_.size() != orders_.size()) throw ValidationError("one order per voter is required");
    if (orders_.empty()) throw ValidationError("profile has no voters");
    position_.resize(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      const auto& order = orders_[i];
      if (static_cast<int>(order.size()) != num_criteria_) {
        throw ValidationError("voter '" + voters_[i] + "' must rank each of the " +
                              std::to_string(num_criteria_) + " criteria exactly once");
      }
      position_[i].assign(num_criteria_, -1);
      for (int rank = 0; rank < num_criteria_; ++rank) {
        int c = order[rank];
        if (c < 0 || c >= num_criteria_) throw ValidationError("criterion index out of range");
        if (position_[i][c] != -1) {
          throw ValidationError("voter '" + voters_[i] + "' lists a criterion twice");
        }
        position_[i][c] = rank;
      }
    }
  }

  int num_criteria() const { return num_criteria_; }
  int num_voters() const { return static_cast<int>(orders_.size()); }
  const std::vector<std::string>& voters() const { return voters_; }
  const std::vector<int>& order(int voter) const { return orders_.at(voter); }

  /// 0-based rank of criterion c in voter i's order (0 = best).
  int position(int voter, int criterion) const { return position_[voter][criterion]; }

  /// c weakly above d for voter i (linear, so reflexive on c == d).
  bool weakly_prefers(int voter, int c, int d) const { return position(voter, c) <= position(voter, d); }

  friend bool operator==(const PreferenceProfile& a, const PreferenceProfile& b) {
    return a.num_criteria_ == b.num_criteria_ && a.voters_ == b.voters_ && a.orders_ == b.orders_;
  }

 private:
  int num_criteria_;
  std::vector<std::string> voters_;
  std::vector<std::vector<int>> orders_;
  std::vector<std::vector<int>> position_;
};

inline void require_compatible(const CriterionTable& table, const PreferenceProfile& profile) {
  if (table.num_criteria() != profile.num_criteria()) {
    throw ValidationError("profile ranks " + std::to_string(profile.num_criteria()) +
                          " criteria but the table defines " + std::to_string(table.num_criteria()));
  }
}

}  // namespace opinion
