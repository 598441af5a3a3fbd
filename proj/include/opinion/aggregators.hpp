#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "criteria.hpp"
#include "error.hpp"
#include "opinion_state.hpp"
#include "quotient_order.hpp"
#include "subset.hpp"
#include "weak_order.hpp"

namespace opinion {

/// o(S, T) = number of voters ranking Tr*(S) weakly above Tr*(T). Only pairs
/// of truth sets are stored; the diagonal holds n.
inline OpinionState induce_opinion(const CriterionTable& table, const PreferenceProfile& profile) {
  require_compatible(table, profile);
  std::vector<OpinionEntry> entries;
  const int m = table.num_criteria();
  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < m; ++d) {
      std::uint64_t voters = 0;
      for (int i = 0; i < profile.num_voters(); ++i) voters += profile.weakly_prefers(i, c, d) ? 1 : 0;
      entries.push_back({table.truth(c), table.truth(d), voters});
    }
  }
  return OpinionState(table.num_alternatives(), entries);
}

/// IIS rule: rank by e_o.
inline WeakOrder iis_rank(const QuotientOrder& q) {
  const auto e = e_scores(q);
  return WeakOrder::by_key_descending(e.size(), [&](int x) { return e[x]; });
}
inline WeakOrder iis_rank(const OpinionState& o) { return iis_rank(quotient_order(o)); }

/// sum of m_o(T) over the positively supported T containing x, per x.
inline std::vector<std::uint64_t> support_totals(const SupportVector& m) {
  std::vector<std::uint64_t> totals(m.universe(), 0);
  for (const auto& [s, v] : m.positive()) {
    for (int x = 0; x < m.universe(); ++x) totals[x] += s.contains(x) ? v : 0;
  }
  return totals;
}

/// Support rule.
inline WeakOrder support_rank(const OpinionState& o) {
  const auto totals = support_totals(support(o));
  return WeakOrder::by_key_descending(totals.size(), [&](int x) { return totals[x]; });
}

/// Lex-cel: lexicographic comparison of theta vectors, first difference decides.
inline WeakOrder lexcel_rank(const QuotientOrder& q) {
  std::vector<std::vector<std::uint64_t>> theta;
  for (int x = 0; x < q.universe(); ++x) theta.push_back(theta_vector(q, x));
  return WeakOrder::by_key_descending(theta.size(), [&](int x) { return theta[x]; });
}
inline WeakOrder lexcel_rank(const OpinionState& o) { return lexcel_rank(quotient_order(o)); }

/// IIS with ties at interior levels 0 < e < l-1 broken by a fixed linear order
/// (`order` lists alternatives best first). Ties at e = 0 and e = l-1 stay.
inline WeakOrder iis_tiebreak_order(const QuotientOrder& q, std::span<const int> order) {
  const int n = q.universe();
  std::vector<int> position(n, -1);
  if (static_cast<int>(order.size()) != n) throw ValidationError("tie-break order must list every alternative once");
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    if (x < 0 || x >= n || position[x] != -1) {
      throw ValidationError("tie-break order must list every alternative once");
    }
    position[x] = static_cast<int>(i);
  }
  const auto e = e_scores(q);
  const std::uint64_t top_level = q.num_classes() - 1;
  // Key (e, -position) with the position part neutralised at e in {0, l-1}.
  return WeakOrder::by_key_descending(e.size(), [&](int x) {
    const bool interior = e[x] > 0 && e[x] < top_level;
    return std::pair<std::uint64_t, int>(e[x], interior ? -position[x] : 0);
  });
}
inline WeakOrder iis_tiebreak_order(const OpinionState& o, std::span<const int> order) {
  return iis_tiebreak_order(quotient_order(o), order);
}

/// IIS with ties at positive e broken by lexicographic comparison of the
/// cumulative theta vectors; ties at e = 0 stay.
inline WeakOrder iis_tiebreak_tau(const QuotientOrder& q) {
  const auto e = e_scores(q);
  std::vector<std::vector<std::uint64_t>> tau;
  for (int x = 0; x < q.universe(); ++x) tau.push_back(e[x] > 0 ? tau_vector(q, x) : std::vector<std::uint64_t>{});
  return WeakOrder::by_key_descending(e.size(), [&](int x) { return std::make_pair(e[x], tau[x]); });
}
inline WeakOrder iis_tiebreak_tau(const OpinionState& o) { return iis_tiebreak_tau(quotient_order(o)); }

/// f_1: {e >= 2} > {e = 1} > {e = 0}, empty buckets dropped.
inline WeakOrder coarse_f1(const QuotientOrder& q) {
  const auto e = e_scores(q);
  return WeakOrder::by_key_descending(e.size(), [&](int x) { return std::min<std::uint64_t>(e[x], 2); });
}
inline WeakOrder coarse_f1(const OpinionState& o) { return coarse_f1(quotient_order(o)); }

/// f_2: {e = l-1} > {e < l-1}.
inline WeakOrder coarse_f2(const QuotientOrder& q) {
  const auto e = e_scores(q);
  const std::uint64_t top_level = q.num_classes() - 1;
  return WeakOrder::by_key_descending(e.size(), [&](int x) { return e[x] == top_level ? 1 : 0; });
}
inline WeakOrder coarse_f2(const OpinionState& o) { return coarse_f2(quotient_order(o)); }

inline WeakOrder indifference_rule(const OpinionState& o) { return WeakOrder::single_class(o.universe()); }

/// max(R): the best class.
inline AltSubset max_of(const WeakOrder& r) {
  AltMask mask = 0;
  for (int x : r.top()) mask |= bit(x);
  return AltSubset::of(mask, static_cast<int>(r.size()));
}

enum class Rule { iis, support, lexcel, iis_tb_order, iis_tb_tau, f1, f2, indifferent };

inline constexpr Rule kAllRules[] = {Rule::iis,        Rule::support, Rule::lexcel, Rule::iis_tb_order,
                                     Rule::iis_tb_tau, Rule::f1,      Rule::f2,     Rule::indifferent};

inline std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::iis: return "iis";
    case Rule::support: return "support";
    case Rule::lexcel: return "lexcel";
    case Rule::iis_tb_order: return "iis-tb-order";
    case Rule::iis_tb_tau: return "iis-tb-tau";
    case Rule::f1: return "f1";
    case Rule::f2: return "f2";
    case Rule::indifferent: return "indifferent";
  }
  return "?";
}

inline std::optional<Rule> parse_rule(std::string_view name) {
  for (Rule r : kAllRules) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

using Aggregator = std::function<WeakOrder(const OpinionState&)>;

/// Builds an aggregator. `tiebreak` is only used by iis-tb-order; when empty
/// the index order 0 > 1 > ... of the state's universe is used.
inline Aggregator make_aggregator(Rule rule, std::vector<int> tiebreak = {}) {
  switch (rule) {
    case Rule::iis: return [](const OpinionState& o) { return iis_rank(o); };
    case Rule::support: return [](const OpinionState& o) { return support_rank(o); };
    case Rule::lexcel: return [](const OpinionState& o) { return lexcel_rank(o); };
    case Rule::iis_tb_order:
      return [tiebreak = std::move(tiebreak)](const OpinionState& o) {
        if (!tiebreak.empty()) return iis_tiebreak_order(o, tiebreak);
        std::vector<int> identity(o.universe());
        for (int x = 0; x < o.universe(); ++x) identity[x] = x;
        return iis_tiebreak_order(o, identity);
      };
    case Rule::iis_tb_tau: return [](const OpinionState& o) { return iis_tiebreak_tau(o); };
    case Rule::f1: return [](const OpinionState& o) { return coarse_f1(o); };
    case Rule::f2: return [](const OpinionState& o) { return coarse_f2(o); };
    case Rule::indifferent: return [](const OpinionState& o) { return indifference_rule(o); };
  }
  throw ValidationError("unknown rule");
}

}  // namespace opinion
