#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "error.hpp"
#include "opinion_state.hpp"
#include "subset.hpp"

namespace opinion {

/// One equal-support class of M_o.
struct SupportClass {
  std::uint64_t support;
  std::vector<AltSubset> members;  // ascending

  friend bool operator==(const SupportClass&, const SupportClass&) = default;
};

/// Quotient order of the support relation M_o: explicit classes of positively
/// supported subsets in strictly decreasing support, followed by an implicit
/// residual class holding every other subset at support 0.
///
/// The residual is never materialized. Its intersection uses the identity
///   x in every residual subset  <=>  every subset avoiding x is explicit,
/// i.e. the number of explicit subsets without x equals 2^(n-1) - 1.
class QuotientOrder {
 public:
  QuotientOrder(int universe, std::vector<SupportClass> classes) : universe_(universe), classes_(std::move(classes)) {
    check_universe(universe);
    std::uint64_t listed = 0;
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      auto& cls = classes_[k];
      if (cls.members.empty()) throw ValidationError("quotient order has an empty class");
      if (cls.support == 0) throw ValidationError("explicit classes must have positive support");
      if (k > 0 && classes_[k - 1].support <= cls.support) {
        throw ValidationError("class supports must be strictly decreasing");
      }
      std::sort(cls.members.begin(), cls.members.end());
      listed += cls.members.size();
    }
    listed_ = listed;
    residual_present_ = listed_ < nonempty_subset_count(universe_);
    build_meets();
  }

  int universe() const { return universe_; }
  const std::vector<SupportClass>& explicit_classes() const { return classes_; }
  bool residual_present() const { return residual_present_; }
  std::uint64_t residual_value() const { return 0; }

  /// l: number of classes, residual included when present.
  std::size_t num_classes() const { return classes_.size() + (residual_present_ ? 1 : 0); }

  /// 0-based index k refers to the residual class.
  bool is_residual(std::size_t k) const { return residual_present_ && k == classes_.size(); }

  std::uint64_t listed_count() const { return listed_; }

  std::uint64_t class_size(std::size_t k) const {
    check_index(k);
    return is_residual(k) ? nonempty_subset_count(universe_) - listed_ : classes_[k].members.size();
  }

  std::uint64_t class_support(std::size_t k) const {
    check_index(k);
    return is_residual(k) ? 0 : classes_[k].support;
  }

  /// Intersection of all subsets in class k (0-based).
  AltMask class_meet(std::size_t k) const {
    check_index(k);
    return meets_[k];
  }

  /// 0-based class index of subset s.
  std::size_t class_of(AltSubset s) const {
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      if (std::binary_search(classes_[k].members.begin(), classes_[k].members.end(), s)) return k;
    }
    return classes_.size();
  }

  /// |{S in class k : x in S}|.
  std::uint64_t count_containing(std::size_t k, int x) const {
    check_index(k);
    if (is_residual(k)) return subsets_containing_one(universe_) - listed_containing_[x];
    std::uint64_t count = 0;
    for (AltSubset s : classes_[k].members) count += s.contains(x) ? 1 : 0;
    return count;
  }

  friend bool operator==(const QuotientOrder& a, const QuotientOrder& b) {
    return a.universe_ == b.universe_ && a.classes_ == b.classes_;
  }

 private:
  void check_index(std::size_t k) const {
    if (k >= num_classes()) throw ValidationError("class index out of range");
  }

  void build_meets() {
    listed_containing_.assign(universe_, 0);
    meets_.clear();
    for (const auto& cls : classes_) {
      AltMask meet = full_mask(universe_);
      for (AltSubset s : cls.members) {
        meet &= s.bits();
        for (int x = 0; x < universe_; ++x) listed_containing_[x] += s.contains(x) ? 1 : 0;
      }
      meets_.push_back(meet);
    }
    if (residual_present_) {
      const std::uint64_t avoiding_total = subsets_containing_one(universe_) - 1;
      AltMask meet = 0;
      for (int x = 0; x < universe_; ++x) {
        if (listed_ - listed_containing_[x] == avoiding_total) meet |= bit(x);
      }
      meets_.push_back(meet);
    }
  }

  int universe_;
  std::vector<SupportClass> classes_;
  std::uint64_t listed_ = 0;
  bool residual_present_ = true;
  std::vector<std::uint64_t> listed_containing_;
  std::vector<AltMask> meets_;
};

inline QuotientOrder quotient_order(const SupportVector& m) {
  std::vector<std::pair<std::uint64_t, AltSubset>> by_value;
  by_value.reserve(m.positive().size());
  for (const auto& [s, v] : m.positive()) by_value.emplace_back(v, s);
  std::sort(by_value.begin(), by_value.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<SupportClass> classes;
  for (const auto& [v, s] : by_value) {
    if (classes.empty() || classes.back().support != v) classes.push_back({v, {}});
    classes.back().members.push_back(s);
  }
  return QuotientOrder(m.universe(), std::move(classes));
}

inline QuotientOrder quotient_order(const OpinionState& o) { return quotient_order(support(o)); }

/// T'_k: intersection of every subset in the top k classes (k is 1-based).
inline AltMask class_union_intersection(const QuotientOrder& q, std::size_t k) {
  if (k < 1 || k > q.num_classes()) throw ValidationError("class depth out of range");
  AltMask meet = full_mask(q.universe());
  for (std::size_t i = 0; i < k; ++i) meet &= q.class_meet(i);
  return meet;
}

/// e_o(x): the deepest k with x in T'_k, or 0 when x is not in every subset of
/// the best class.
inline std::uint64_t e_score(const QuotientOrder& q, int x) {
  if (x < 0 || x >= q.universe()) throw ValidationError("unknown alternative index");
  std::uint64_t depth = 0;
  while (depth < q.num_classes() && mask_contains(q.class_meet(depth), x)) ++depth;
  return depth;
}

inline std::uint64_t e_score(const OpinionState& o, int x) { return e_score(quotient_order(o), x); }

inline std::vector<std::uint64_t> e_scores(const QuotientOrder& q) {
  std::vector<std::uint64_t> scores(q.universe());
  for (int x = 0; x < q.universe(); ++x) scores[x] = e_score(q, x);
  return scores;
}

/// theta_o(x) = (x_1, ..., x_l) with x_k = |{S in Sigma_k : x in S}|.
inline std::vector<std::uint64_t> theta_vector(const QuotientOrder& q, int x) {
  if (x < 0 || x >= q.universe()) throw ValidationError("unknown alternative index");
  std::vector<std::uint64_t> theta(q.num_classes());
  for (std::size_t k = 0; k < theta.size(); ++k) theta[k] = q.count_containing(k, x);
  return theta;
}

/// tau_o(x): prefix sums of theta_o(x).
inline std::vector<std::uint64_t> tau_vector(const QuotientOrder& q, int x) {
  auto v = theta_vector(q, x);
  for (std::size_t k = 1; k < v.size(); ++k) v[k] += v[k - 1];
  return v;
}

}  // namespace opinion
