#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aggregators.hpp"
#include "error.hpp"
#include "layout.hpp"
#include "opinion_state.hpp"
#include "quotient_order.hpp"
#include "subset.hpp"
#include "weak_order.hpp"

namespace opinion {

// ---------------------------------------------------------------------------
// Permutation action

inline void check_permutation(std::span<const int> pi, int universe) {
  if (static_cast<int>(pi.size()) != universe) throw ValidationError("permutation must map every alternative");
  std::vector<bool> hit(universe, false);
  for (int image : pi) {
    if (image < 0 || image >= universe || hit[image]) throw ValidationError("permutation is not a bijection");
    hit[image] = true;
  }
}

/// pi(S) = {pi(x) : x in S}.
inline AltSubset permute_subset(AltSubset s, std::span<const int> pi) {
  AltMask image = 0;
  for (int x = 0; x < static_cast<int>(pi.size()); ++x) {
    if (s.contains(x)) image |= bit(pi[x]);
  }
  return AltSubset::of(image, static_cast<int>(pi.size()));
}

/// o^pi with o^pi(pi(S), pi(T)) = o(S, T): the state relabelled by pi, so
/// m_{o^pi}(pi(S)) = m_o(S) and x's role is taken over by pi(x).
inline OpinionState permute_state(const OpinionState& o, std::span<const int> pi) {
  check_permutation(pi, o.universe());
  std::vector<OpinionEntry> entries;
  entries.reserve(o.entries().size());
  for (const auto& [key, count] : o.entries()) {
    entries.push_back({permute_subset(key.first, pi), permute_subset(key.second, pi), count});
  }
  return OpinionState(o.universe(), entries);
}

// ---------------------------------------------------------------------------
// Instances and structural checks

enum class Axiom { nt, iws, ibs, wivip, inui };

inline constexpr Axiom kAllAxioms[] = {Axiom::nt, Axiom::iws, Axiom::ibs, Axiom::wivip, Axiom::inui};

inline std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::nt: return "nt";
    case Axiom::iws: return "iws";
    case Axiom::ibs: return "ibs";
    case Axiom::wivip: return "wivip";
    case Axiom::inui: return "inui";
  }
  return "?";
}

inline std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : kAllAxioms) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

struct AxiomInstance {
  Axiom kind = Axiom::nt;
  OpinionState first{3};
  std::optional<OpinionState> second;  // absent for WIVIP
  std::vector<int> permutation;        // NT
  std::vector<AltSubset> delta;        // INUI: promoted collection
  std::size_t delta_class = 0;         // INUI: 0-based class of `first` containing delta
};

namespace detail {

inline std::vector<AltSubset> listed_subsets(const QuotientOrder& q) {
  std::vector<AltSubset> all;
  for (const auto& cls : q.explicit_classes()) all.insert(all.end(), cls.members.begin(), cls.members.end());
  std::sort(all.begin(), all.end());
  return all;
}

inline bool in_class(const QuotientOrder& q, std::size_t k, AltSubset s) {
  if (q.is_residual(k)) return q.class_of(s) == q.explicit_classes().size();
  const auto& members = q.explicit_classes()[k].members;
  return std::binary_search(members.begin(), members.end(), s);
}

/// Class a[k] and class b[j] hold the same subsets.
inline bool same_class(const QuotientOrder& a, std::size_t k, const QuotientOrder& b, std::size_t j) {
  if (a.class_size(k) != b.class_size(j)) return false;
  if (a.is_residual(k) && b.is_residual(j)) return listed_subsets(a) == listed_subsets(b);
  if (a.is_residual(k)) return same_class(b, j, a, k);
  for (AltSubset s : a.explicit_classes()[k].members) {
    if (!in_class(b, j, s)) return false;
  }
  return true;
}

[[noreturn]] inline void reject(Axiom kind, const std::string& why) {
  throw RejectedInstance(std::string(axiom_name(kind)) + " instance rejected: " + why);
}

}  // namespace detail

/// Throws RejectedInstance unless the instance meets its axiom's hypotheses.
inline void validate_instance(const AxiomInstance& inst) {
  const Axiom kind = inst.kind;
  if (kind == Axiom::wivip) {
    if (quotient_order(inst.first).num_classes() != 2) detail::reject(kind, "quotient order must have exactly two classes");
    return;
  }
  if (!inst.second) detail::reject(kind, "second state missing");
  if (inst.second->universe() != inst.first.universe()) detail::reject(kind, "states over different universes");
  const QuotientOrder q1 = quotient_order(inst.first);
  const QuotientOrder q2 = quotient_order(*inst.second);
  const std::size_t l1 = q1.num_classes();
  const std::size_t l2 = q2.num_classes();

  switch (kind) {
    case Axiom::nt: {
      try {
        check_permutation(inst.permutation, inst.first.universe());
      } catch (const ValidationError& e) {
        detail::reject(kind, e.what());
      }
      if (permute_state(inst.first, inst.permutation) != *inst.second) {
        detail::reject(kind, "second state is not the permuted first state");
      }
      return;
    }
    case Axiom::iws: {
      if (l2 < l1) detail::reject(kind, "second quotient order has fewer classes");
      for (std::size_t k = 0; k + 1 < l1; ++k) {
        if (!detail::same_class(q1, k, q2, k)) detail::reject(kind, "classes above the worst class differ");
      }
      return;
    }
    case Axiom::ibs: {
      if (l2 < l1) detail::reject(kind, "second quotient order has fewer classes");
      for (std::size_t k = 1; k < l1; ++k) {
        if (!detail::same_class(q1, k, q2, l2 - l1 + k)) detail::reject(kind, "classes below the best class differ");
      }
      return;
    }
    case Axiom::inui: {
      const std::size_t k = inst.delta_class;
      if (k >= l1) detail::reject(kind, "delta class out of range");
      if (inst.delta.empty()) detail::reject(kind, "delta must be nonempty");
      std::vector<AltSubset> delta = inst.delta;
      std::sort(delta.begin(), delta.end());
      if (std::adjacent_find(delta.begin(), delta.end()) != delta.end()) detail::reject(kind, "delta repeats a subset");
      for (AltSubset s : delta) {
        if (!detail::in_class(q1, k, s)) detail::reject(kind, "delta is not contained in its class");
      }
      if (l2 != l1 + 1) detail::reject(kind, "second quotient order must have exactly one more class");
      if (q2.is_residual(k) || q2.explicit_classes()[k].members != delta) {
        detail::reject(kind, "delta is not promoted to its own class");
      }
      for (std::size_t i = 0; i < l1; ++i) {
        if (i == k) continue;
        if (!detail::same_class(q1, i, q2, i < k ? i : i + 1)) detail::reject(kind, "untouched classes differ");
      }
      return;
    }
    case Axiom::wivip: return;
  }
}

/// Alternatives outside the intersection of delta.
inline AltMask inui_eligible(const AxiomInstance& inst) {
  AltMask meet = full_mask(inst.first.universe());
  for (AltSubset s : inst.delta) meet &= s.bits();
  return full_mask(inst.first.universe()) & ~meet;
}

struct Violation {
  int x = 0;
  int y = 0;
  std::string detail;
};

struct Verdict {
  bool pass = true;
  std::optional<Violation> violation;
};

/// Evaluates the axiom's conclusion for every pair (x, y) the instance
/// quantifies over. Structurally invalid instances are rejected, never passed.
inline Verdict check_axiom(const Aggregator& agg, const AxiomInstance& inst) {
  validate_instance(inst);
  const int n = inst.first.universe();
  const WeakOrder r1 = agg(inst.first);
  const auto fail = [](int x, int y, std::string why) { return Verdict{false, Violation{x, y, std::move(why)}}; };

  switch (inst.kind) {
    case Axiom::nt: {
      const WeakOrder r2 = agg(*inst.second);
      const auto& pi = inst.permutation;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (r1.weakly_prefers(x, y) != r2.weakly_prefers(pi[x], pi[y])) {
            return fail(x, y, "(x,y) in f(o) differs from (pi(x),pi(y)) in f(o^pi)");
          }
        }
      }
      return {};
    }
    case Axiom::iws:
    case Axiom::ibs: {
      const WeakOrder r2 = agg(*inst.second);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (r1.prefers(x, y) && !r2.prefers(x, y)) return fail(x, y, "strict preference in f(o1) lost in f(o2)");
        }
      }
      return {};
    }
    case Axiom::wivip: {
      const AltMask veto = quotient_order(inst.first).class_meet(0);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (mask_contains(veto, x) && !mask_contains(veto, y) && !r1.prefers(x, y)) {
            return fail(x, y, "veto element not strictly above a non-veto element");
          }
        }
      }
      return {};
    }
    case Axiom::inui: {
      const WeakOrder r2 = agg(*inst.second);
      const AltMask eligible = inui_eligible(inst);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (!mask_contains(eligible, x) || !mask_contains(eligible, y)) continue;
          if (r1.weakly_prefers(x, y) != r2.weakly_prefers(x, y)) {
            return fail(x, y, "(x,y) in f(o1) differs from (x,y) in f(o2)");
          }
        }
      }
      return {};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Instance construction from layouts

inline AxiomInstance make_nt_instance(const OpinionState& o, std::vector<int> pi) {
  AxiomInstance inst{Axiom::nt, o, permute_state(o, pi), std::move(pi), {}, 0};
  return inst;
}

inline AxiomInstance make_pair_instance(Axiom kind, const QuotientLayout& before, const QuotientLayout& after) {
  return AxiomInstance{kind, realize(before), realize(after), {}, {}, 0};
}

/// INUI instance: `delta` (a subset of class k of `before`) promoted just
/// above the rest of that class.
inline QuotientLayout promote(const QuotientLayout& before, std::size_t k, const std::vector<AltSubset>& delta) {
  QuotientLayout after{before.universe, {}};
  const std::set<AltSubset> promoted(delta.begin(), delta.end());
  for (std::size_t i = 0; i < before.classes.size(); ++i) {
    if (i != k) {
      after.classes.push_back(before.classes[i]);
      continue;
    }
    std::vector<AltSubset> rest;
    for (AltSubset s : before.classes[i]) {
      if (!promoted.count(s)) rest.push_back(s);
    }
    after.classes.push_back(delta);
    if (!rest.empty()) after.classes.push_back(rest);
  }
  if (k == before.classes.size()) after.classes.push_back(delta);  // promoted out of the residual
  return after;
}

inline AxiomInstance make_inui_instance(const QuotientLayout& before, std::size_t k, std::vector<AltSubset> delta) {
  const QuotientLayout after = promote(before, k, delta);
  std::sort(delta.begin(), delta.end());
  return AxiomInstance{Axiom::inui, realize(before), realize(after), {}, std::move(delta), k};
}

struct GeneratedInstances {
  std::vector<AxiomInstance> instances;
  std::size_t shortfall = 0;
};

namespace detail {

inline Rng instance_rng(Axiom kind, int universe, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(kind), static_cast<std::uint32_t>(universe)};
  return Rng(seq);
}

/// Splits the worst class: a last explicit class is partitioned; a residual
/// class gives up random subsets to new explicit classes.
inline QuotientLayout split_worst(const QuotientLayout& layout, Rng& rng) {
  QuotientLayout after = layout;
  if (layout.has_residual()) {
    const std::uint64_t residual = nonempty_subset_count(layout.universe) - layout.listed();
    const auto wanted = static_cast<std::uint64_t>(uniform(rng, 1, static_cast<int>(std::min<std::uint64_t>(residual, 8))));
    auto taken = sample_residual(layout, wanted, rng);
    if (!taken.empty()) {
      for (auto& group : random_partition(taken, rng)) after.classes.push_back(group);
    }
    return after;
  }
  auto last = after.classes.back();
  after.classes.pop_back();
  for (auto& group : random_partition(last, rng)) after.classes.push_back(group);
  return after;
}

inline QuotientLayout split_best(const QuotientLayout& layout, Rng& rng) {
  if (layout.classes.empty()) return split_worst(layout, rng);
  QuotientLayout after{layout.universe, {}};
  for (auto& group : random_partition(layout.classes.front(), rng)) after.classes.push_back(group);
  after.classes.insert(after.classes.end(), layout.classes.begin() + 1, layout.classes.end());
  return after;
}

inline std::optional<AxiomInstance> random_inui(const QuotientLayout& layout, Rng& rng) {
  const std::size_t l = layout.num_classes();
  for (int attempt = 0; attempt < 20; ++attempt) {
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(l) - 1));
    std::vector<AltSubset> pool;
    if (k < layout.classes.size()) {
      pool = layout.classes[k];
      std::shuffle(pool.begin(), pool.end(), rng);
      if (pool.size() < 2) continue;
      pool.erase(pool.begin() + uniform(rng, 1, static_cast<int>(pool.size()) - 1), pool.end());
    } else {
      const std::uint64_t residual = nonempty_subset_count(layout.universe) - layout.listed();
      if (residual < 2) continue;
      const int cap = static_cast<int>(std::min<std::uint64_t>(residual - 1, 6));
      pool = sample_residual(layout, static_cast<std::uint64_t>(uniform(rng, 1, cap)), rng);
    }
    AltMask meet = full_mask(layout.universe);
    for (AltSubset s : pool) meet &= s.bits();
    if (layout.universe - mask_size(meet) < 2) continue;
    return make_inui_instance(layout, k, pool);
  }
  return std::nullopt;
}

inline QuotientLayout random_two_class_layout(int universe, Rng& rng) {
  const AltMask core = std::uniform_int_distribution<AltMask>(0, full_mask(universe))(rng);
  QuotientLayout empty{universe, {}};
  auto candidates = sample_residual(empty, is_dense_universe(universe) ? nonempty_subset_count(universe) : 24, rng);
  std::vector<AltSubset> best, rest;
  for (AltSubset s : candidates) {
    const bool favoured = (s.bits() & core) == core;
    (favoured && coin(rng) ? best : rest).push_back(s);
  }
  if (best.empty()) {
    best.push_back(rest.back());
    rest.pop_back();
  }
  QuotientLayout layout{universe, {best}};
  // A dense universe may list the worse class explicitly; it must stay nonempty.
  if (is_dense_universe(universe) && !rest.empty() && coin(rng)) layout.classes.push_back(rest);
  if (!layout.has_residual() && layout.classes.size() == 1) layout.classes[0].pop_back();
  return layout;
}

}  // namespace detail

/// Deterministic under (kind, universe, seed). Every instance satisfies its
/// axiom's side-conditions by construction. INUI draws fresh layouts until one
/// admits an eligible delta; after 50 failures the instance is skipped and
/// counted in `shortfall`.
inline GeneratedInstances generate_instances(Axiom kind, int universe, std::uint64_t seed, std::size_t count) {
  check_universe(universe);
  Rng rng = detail::instance_rng(kind, universe, seed);
  GeneratedInstances out;
  for (std::size_t i = 0; i < count; ++i) {
    switch (kind) {
      case Axiom::nt: {
        std::vector<int> pi(universe);
        for (int x = 0; x < universe; ++x) pi[x] = x;
        std::shuffle(pi.begin(), pi.end(), rng);
        out.instances.push_back(make_nt_instance(realize(random_layout(universe, rng), rng), std::move(pi)));
        break;
      }
      case Axiom::iws: {
        const auto before = random_layout(universe, rng);
        const auto after = detail::split_worst(before, rng);
        out.instances.push_back({Axiom::iws, realize(before, rng), realize(after, rng), {}, {}, 0});
        break;
      }
      case Axiom::ibs: {
        const auto before = random_layout(universe, rng);
        const auto after = detail::split_best(before, rng);
        out.instances.push_back({Axiom::ibs, realize(before, rng), realize(after, rng), {}, {}, 0});
        break;
      }
      case Axiom::wivip: {
        out.instances.push_back({Axiom::wivip, realize(detail::random_two_class_layout(universe, rng), rng), {}, {}, {}, 0});
        break;
      }
      case Axiom::inui: {
        std::optional<AxiomInstance> inst;
        for (int layout = 0; layout < 50 && !inst; ++layout) inst = detail::random_inui(random_layout(universe, rng), rng);
        if (inst) {
          out.instances.push_back(std::move(*inst));
        } else {
          ++out.shortfall;
        }
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named counterexamples (x = 0, y = 1, z = 2 over a 3-element universe)

namespace counterexamples {

inline AltSubset set3(std::initializer_list<int> members) {
  AltMask m = 0;
  for (int x : members) m |= bit(x);
  return AltSubset::of(m, 3);
}

/// M_o: {{x,y}} > {{x,y,z}} > rest, pi swapping x and y. Here e(x) = e(y) =
/// l - 1, so the order tie-break never fires on this state.
inline AxiomInstance nt_tiebreak_as_published() {
  QuotientLayout layout{3, {{set3({0, 1})}, {set3({0, 1, 2})}}};
  return make_nt_instance(realize(layout), {1, 0, 2});
}

/// Same with {{z}} inserted as a third class so e(x) = e(y) = 2 is interior.
inline AxiomInstance nt_tiebreak_interior() {
  QuotientLayout layout{3, {{set3({0, 1})}, {set3({0, 1, 2})}, {set3({2})}}};
  return make_nt_instance(realize(layout), {1, 0, 2});
}

/// Sigma_1 = {{x},{x,z},{y},{y,z}} over the rest; delta = {{x,z},{y},{y,z}}.
/// Both x and y have e = 0 before and after, so tau is never consulted.
inline AxiomInstance inui_tau_as_published() {
  QuotientLayout before{3, {{set3({0}), set3({0, 2}), set3({1}), set3({1, 2})}}};
  return make_inui_instance(before, 0, {set3({0, 2}), set3({1}), set3({1, 2})});
}

/// The same surgery one level down, under a top class {{x,y,z}}, so x and y
/// tie at e = 1 and tau decides.
inline AxiomInstance inui_tau_under_common_top() {
  QuotientLayout before{3, {{set3({0, 1, 2})}, {set3({0}), set3({0, 2}), set3({1}), set3({1, 2})}}};
  return make_inui_instance(before, 1, {set3({0, 2}), set3({1}), set3({1, 2})});
}

/// Sigma_1 = {{x,y},{x,y,z},{x}} split into three singleton classes.
inline AxiomInstance ibs_f1() {
  QuotientLayout before{3, {{set3({0, 1}), set3({0, 1, 2}), set3({0})}}};
  QuotientLayout after{3, {{set3({0, 1})}, {set3({0, 1, 2})}, {set3({0})}}};
  return make_pair_instance(Axiom::ibs, before, after);
}

/// {{x}} > rest versus {{x}} > {{y}} > rest.
inline AxiomInstance iws_f2() {
  QuotientLayout before{3, {{set3({0})}}};
  QuotientLayout after{3, {{set3({0})}, {set3({1})}}};
  return make_pair_instance(Axiom::iws, before, after);
}

/// Two-class state {{x}} > rest: x is the only veto element.
inline AxiomInstance wivip_single_veto() {
  QuotientLayout layout{3, {{set3({0})}}};
  return AxiomInstance{Axiom::wivip, realize(layout), {}, {}, {}, 0};
}

/// INUI promotion inside the residual: {{x}} > rest versus
/// {{x}} > {{y},{z}} > rest. Raising l moves x out of f_2's top bucket.
inline AxiomInstance inui_f2_worst_class() {
  QuotientLayout before{3, {{set3({0})}}};
  return make_inui_instance(before, 1, {set3({1}), set3({2})});
}

/// {{x,y}} > rest versus {{x,y}} > {{x},{z}} > rest: the tie at e = l - 1 = 1
/// becomes interior and the order tie-break splits it.
inline AxiomInstance inui_tiebreak_worst_class() {
  QuotientLayout before{3, {{set3({0, 1})}}};
  return make_inui_instance(before, 1, {set3({0}), set3({2})});
}

}  // namespace counterexamples

// ---------------------------------------------------------------------------
// Transformations used by the characterization proof

/// o^(j) for j = k+1, ..., l: classes k+1 .. j (1-based) of o merged into one.
/// The first entry is o's own layout. Merging into the residual drops the
/// explicit classes concerned.
inline std::vector<QuotientLayout> trailing_merge_chain(const QuotientOrder& q, std::size_t depth) {
  const QuotientLayout base = layout_of(q);
  const std::size_t l = q.num_classes();
  std::vector<QuotientLayout> chain;
  for (std::size_t j = depth + 1; j <= l; ++j) {
    QuotientLayout merged{q.universe(), {}};
    for (std::size_t i = 0; i < depth && i < base.classes.size(); ++i) merged.classes.push_back(base.classes[i]);
    const bool into_residual = q.residual_present() && j == l;
    if (!into_residual) {
      std::vector<AltSubset> block;
      for (std::size_t i = depth; i < j; ++i) block.insert(block.end(), base.classes[i].begin(), base.classes[i].end());
      if (!block.empty()) merged.classes.push_back(block);
      for (std::size_t i = j; i < base.classes.size(); ++i) merged.classes.push_back(base.classes[i]);
    }
    chain.push_back(merged);
  }
  return chain;
}

/// For e_o(x) = depth > e_o(y): o' = (top depth classes merged) > (rest merged)
/// and o'' = Sigma_1 > ... > Sigma_depth > (rest merged).
inline std::pair<QuotientLayout, QuotientLayout> strict_preference_chain(const QuotientOrder& q, std::size_t depth) {
  const QuotientLayout base = layout_of(q);
  QuotientLayout two{q.universe(), {}};
  QuotientLayout top{q.universe(), {}};
  std::vector<AltSubset> head, tail;
  for (std::size_t i = 0; i < base.classes.size(); ++i) {
    auto& target = i < depth ? head : tail;
    target.insert(target.end(), base.classes[i].begin(), base.classes[i].end());
    if (i < depth) top.classes.push_back(base.classes[i]);
  }
  two.classes.push_back(head);
  if (!q.residual_present()) {
    two.classes.push_back(tail);
    top.classes.push_back(tail);
  }
  return {two, top};
}

}  // namespace opinion
