#pragma once

// Brute-force reference implementations over the fully enumerated set of
// nonempty subsets. Deliberately naive and independent of the sparse code in
// quotient_order.hpp / aggregators.hpp: nothing here calls into them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "opinion_state.hpp"
#include "subset.hpp"
#include "weak_order.hpp"

namespace opinion::oracle {

inline constexpr int kMaxDenseUniverse = 5;

/// Support of every nonempty subset; index = mask - 1.
class DenseState {
 public:
  DenseState(int universe, std::vector<std::uint64_t> support) : universe_(universe), support_(std::move(support)) {
    if (universe < 3 || universe > kMaxDenseUniverse) {
      throw ValidationError("dense oracle supports 3 <= |X| <= 5, got " + std::to_string(universe));
    }
    if (support_.size() != (std::size_t{1} << universe) - 1) {
      throw ValidationError("dense support array must have 2^|X| - 1 entries");
    }
  }

  /// m_o(S) = sum over every T of o(S, T), looked up pair by pair.
  static DenseState from_state(const OpinionState& o) {
    const int n = o.universe();
    if (n > kMaxDenseUniverse) throw ValidationError("dense oracle supports |X| <= 5");
    const int total = (1 << n) - 1;
    std::vector<std::uint64_t> support(total, 0);
    for (int s = 1; s <= total; ++s) {
      for (int t = 1; t <= total; ++t) {
        support[s - 1] += o.count(AltSubset::of(s, n), AltSubset::of(t, n));
      }
    }
    return DenseState(n, std::move(support));
  }

  int universe() const { return universe_; }
  int subset_count() const { return static_cast<int>(support_.size()); }
  std::uint64_t support(int mask) const { return support_.at(mask - 1); }

 private:
  int universe_;
  std::vector<std::uint64_t> support_;
};

/// Equal-support classes in decreasing support, every subset listed (zero
/// support included).
inline std::vector<std::vector<int>> dense_classes(const DenseState& d) {
  std::vector<std::uint64_t> values;
  for (int s = 1; s <= d.subset_count(); ++s) values.push_back(d.support(s));
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::vector<int>> classes;
  for (std::uint64_t v : values) {
    classes.emplace_back();
    for (int s = 1; s <= d.subset_count(); ++s) {
      if (d.support(s) == v) classes.back().push_back(s);
    }
  }
  return classes;
}

/// T'_k computed by intersecting every subset of the top k classes.
inline std::vector<bool> dense_prefix_membership(const DenseState& d, int x) {
  const auto classes = dense_classes(d);
  std::vector<bool> in_prefix;
  bool inside = true;
  for (const auto& cls : classes) {
    for (int s : cls) inside = inside && ((s >> x) & 1);
    in_prefix.push_back(inside);
  }
  return in_prefix;
}

inline std::uint64_t dense_e_score(const DenseState& d, int x) {
  if (x < 0 || x >= d.universe()) throw ValidationError("unknown alternative index");
  const auto in_prefix = dense_prefix_membership(d, x);
  std::uint64_t best = 0;
  for (std::size_t k = 0; k < in_prefix.size(); ++k) {
    if (in_prefix[k]) best = std::max<std::uint64_t>(best, k + 1);
  }
  return best;
}

/// Literal intersection of the subsets in class k (0-based).
inline AltMask dense_class_meet(const DenseState& d, std::size_t k) {
  const auto classes = dense_classes(d);
  AltMask meet = full_mask(d.universe());
  for (int s : classes.at(k)) meet &= static_cast<AltMask>(s);
  return meet;
}

inline std::vector<std::uint64_t> dense_theta(const DenseState& d, int x) {
  std::vector<std::uint64_t> theta;
  for (const auto& cls : dense_classes(d)) {
    std::uint64_t count = 0;
    for (int s : cls) count += (s >> x) & 1;
    theta.push_back(count);
  }
  return theta;
}

/// Quotient of a complete relation given as R(x, y): repeatedly take the
/// elements of the remainder that are R-above every other remaining element.
inline WeakOrder quotient_of_relation(int n, const std::function<bool(int, int)>& relation) {
  std::vector<int> remaining(n);
  for (int i = 0; i < n; ++i) remaining[i] = i;
  std::vector<std::vector<int>> classes;
  while (!remaining.empty()) {
    std::vector<int> best, rest;
    for (int a : remaining) {
      bool above_all = true;
      for (int b : remaining) above_all = above_all && relation(a, b);
      (above_all ? best : rest).push_back(a);
    }
    if (best.empty()) throw ValidationError("relation is not a complete weak order");
    classes.push_back(best);
    remaining = rest;
  }
  return WeakOrder(static_cast<std::size_t>(n), classes);
}

inline bool lex_geq(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] != b[t]) return a[t] > b[t];
  }
  return true;
}

struct DenseRankings {
  WeakOrder iis;
  WeakOrder support;
  WeakOrder lexcel;
  WeakOrder iis_tb_order;  // index order 0 > 1 > ... as the tie-break
  WeakOrder iis_tb_tau;
  WeakOrder f1;
  WeakOrder f2;
  WeakOrder indifferent;
};

inline DenseRankings dense_rankings(const DenseState& d) {
  const int n = d.universe();
  const std::uint64_t l = dense_classes(d).size();
  std::vector<std::uint64_t> e(n), total(n, 0);
  std::vector<std::vector<std::uint64_t>> theta(n), tau(n);
  for (int x = 0; x < n; ++x) {
    e[x] = dense_e_score(d, x);
    for (int s = 1; s <= d.subset_count(); ++s) total[x] += ((s >> x) & 1) ? d.support(s) : 0;
    theta[x] = dense_theta(d, x);
    std::uint64_t running = 0;
    for (auto v : theta[x]) tau[x].push_back(running += v);
  }
  DenseRankings r;
  r.iis = quotient_of_relation(n, [&](int x, int y) { return e[x] >= e[y]; });
  r.support = quotient_of_relation(n, [&](int x, int y) { return total[x] >= total[y]; });
  r.lexcel = quotient_of_relation(n, [&](int x, int y) { return lex_geq(theta[x], theta[y]); });
  r.iis_tb_order = quotient_of_relation(n, [&](int x, int y) {
    if (e[x] > e[y]) return true;
    if (e[x] != e[y]) return false;
    if (e[x] == 0 || e[x] == l - 1) return true;
    return x <= y;
  });
  r.iis_tb_tau = quotient_of_relation(n, [&](int x, int y) {
    if (e[x] > e[y]) return true;
    if (e[x] != e[y]) return false;
    if (e[x] == 0) return true;
    return lex_geq(tau[x], tau[y]);
  });
  r.f1 = quotient_of_relation(n, [&](int x, int y) {
    auto bucket = [](std::uint64_t v) { return v >= 2 ? 2 : v; };
    return bucket(e[x]) >= bucket(e[y]);
  });
  r.f2 = quotient_of_relation(n, [&](int x, int y) { return e[x] == l - 1 || e[y] != l - 1; });
  r.indifferent = quotient_of_relation(n, [](int, int) { return true; });
  return r;
}

}  // namespace opinion::oracle
