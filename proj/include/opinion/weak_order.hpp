#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "subset.hpp"

namespace opinion {

/// A complete weak order stored as its quotient: an ordered partition of
/// {0, ..., n-1}, best class first. Members inside a class are kept in
/// ascending index order so equal orders compare equal.
class WeakOrder {
 public:
  WeakOrder() = default;

  WeakOrder(std::size_t size, std::vector<std::vector<int>> classes)
      : classes_(std::move(classes)), level_(size, -1) {
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      auto& cls = classes_[k];
      if (cls.empty()) throw ValidationError("weak order has an empty class");
      std::sort(cls.begin(), cls.end());
      for (int member : cls) {
        if (member < 0 || static_cast<std::size_t>(member) >= size) {
          throw ValidationError("weak order member out of range");
        }
        if (level_[member] != -1) throw ValidationError("weak order classes overlap");
        level_[member] = static_cast<int>(k);
      }
    }
    if (std::find(level_.begin(), level_.end(), -1) != level_.end()) {
      throw ValidationError("weak order classes do not cover every element");
    }
  }

  static WeakOrder single_class(std::size_t size) {
    std::vector<int> all(size);
    std::iota(all.begin(), all.end(), 0);
    return WeakOrder(size, {all});
  }

  /// Groups elements by key, larger keys first.
  template <typename KeyFn>
  static WeakOrder by_key_descending(std::size_t size, KeyFn key) {
    using Key = decltype(key(0));
    std::vector<Key> keys;
    keys.reserve(size);
    for (std::size_t i = 0; i < size; ++i) keys.push_back(key(static_cast<int>(i)));
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[b] < keys[a]; });
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < size; ++i) {
      if (i == 0 || keys[idx[i - 1]] != keys[idx[i]]) classes.emplace_back();
      classes.back().push_back(idx[i]);
    }
    return WeakOrder(size, std::move(classes));
  }

  std::size_t size() const { return level_.size(); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }

  /// 0-based class index of an element, 0 being the best class.
  int level(int element) const { return level_.at(element); }

  /// (x, y) in R.
  bool weakly_prefers(int x, int y) const { return level(x) <= level(y); }
  /// (x, y) in P(R).
  bool prefers(int x, int y) const { return level(x) < level(y); }
  /// (x, y) in I(R).
  bool indifferent(int x, int y) const { return level(x) == level(y); }

  const std::vector<int>& top() const { return classes_.front(); }

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;

 private:
  std::vector<std::vector<int>> classes_;
  std::vector<int> level_;
};

/// "{a,b} > {c}" using the supplied element names.
inline std::string format_weak_order(const WeakOrder& order, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < order.classes().size(); ++k) {
    if (k != 0) out += " > ";
    out += '{';
    const auto& cls = order.classes()[k];
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i != 0) out += ',';
      out += names.at(cls[i]);
    }
    out += '}';
  }
  return out;
}

}  // namespace opinion
