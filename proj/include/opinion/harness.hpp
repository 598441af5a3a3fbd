#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aggregators.hpp"
#include "axioms.hpp"
#include "criteria.hpp"
#include "cscc.hpp"
#include "oracle.hpp"

namespace opinion {

// ---------------------------------------------------------------------------
// Axiom sweeps

struct SweepResult {
  Axiom axiom = Axiom::nt;
  int universe = 3;
  std::size_t instances = 0;
  std::size_t shortfall = 0;
  std::size_t violations = 0;
  std::optional<AxiomInstance> first_violation;
  std::optional<Violation> first_detail;
};

inline SweepResult sweep_axiom(const Aggregator& agg, Axiom axiom, int universe, std::uint64_t seed, std::size_t trials) {
  SweepResult result{axiom, universe, 0, 0, 0, std::nullopt, std::nullopt};
  auto generated = generate_instances(axiom, universe, seed, trials);
  result.shortfall = generated.shortfall;
  for (const auto& inst : generated.instances) {
    ++result.instances;
    const Verdict v = check_axiom(agg, inst);
    if (v.pass) continue;
    if (result.violations++ == 0) {
      result.first_violation = inst;
      result.first_detail = v.violation;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Independence of the five axioms

struct NamedCase {
  std::string name;
  bool as_published = true;  // false: adapted so the hypothesis of the named rule is actually exercised
  AxiomInstance instance;
  Verdict verdict;
};

struct IndependenceRow {
  Rule rule = Rule::iis;
  std::optional<Axiom> designated;  // axiom the rule is meant to violate
  std::vector<NamedCase> counterexamples;
  std::vector<SweepResult> sweeps;  // every axiom other than `designated`, per universe size

  bool published_reproduced() const {
    for (const auto& c : counterexamples) {
      if (c.as_published && c.verdict.pass) return false;
    }
    return true;
  }
  bool any_reproduced() const {
    for (const auto& c : counterexamples) {
      if (!c.verdict.pass) return true;
    }
    return counterexamples.empty();
  }
  std::size_t sweep_violations() const {
    std::size_t total = 0;
    for (const auto& s : sweeps) total += s.violations;
    return total;
  }
};

struct IndependenceOptions {
  std::vector<int> universes{3, 4, 5};
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
};

namespace detail {

inline NamedCase run_case(const Aggregator& agg, std::string name, bool published, AxiomInstance inst) {
  Verdict v = check_axiom(agg, inst);
  return {std::move(name), published, std::move(inst), std::move(v)};
}

}  // namespace detail

/// For each variant rule: its named counterexamples on the designated axiom
/// and seeded sweeps over the other four. The IIS rule is included as a
/// control row with no designated axiom.
inline std::vector<IndependenceRow> independence_suite(const IndependenceOptions& options = {}) {
  namespace cx = counterexamples;
  std::vector<IndependenceRow> rows;
  const auto add = [&](Rule rule, std::optional<Axiom> designated, std::vector<NamedCase> cases) {
    IndependenceRow row{rule, designated, std::move(cases), {}};
    const Aggregator agg = make_aggregator(rule);
    for (Axiom a : kAllAxioms) {
      if (designated && a == *designated) continue;
      for (int n : options.universes) row.sweeps.push_back(sweep_axiom(agg, a, n, options.seed, options.trials));
    }
    rows.push_back(std::move(row));
  };

  const Aggregator tb_order = make_aggregator(Rule::iis_tb_order);
  const Aggregator tb_tau = make_aggregator(Rule::iis_tb_tau);
  const Aggregator f1 = make_aggregator(Rule::f1);
  const Aggregator f2 = make_aggregator(Rule::f2);
  const Aggregator indifferent = make_aggregator(Rule::indifferent);

  add(Rule::iis, std::nullopt, {});
  add(Rule::iis_tb_order, Axiom::nt,
      {detail::run_case(tb_order, "{{x,y}} > {{x,y,z}} > rest, pi = (x y)", true, cx::nt_tiebreak_as_published()),
       detail::run_case(tb_order, "{{x,y}} > {{x,y,z}} > {{z}} > rest, pi = (x y)", false, cx::nt_tiebreak_interior())});
  add(Rule::iis_tb_tau, Axiom::inui,
      {detail::run_case(tb_tau, "{{x},{x,z},{y},{y,z}} > rest, delta = {{x,z},{y},{y,z}}", true, cx::inui_tau_as_published()),
       detail::run_case(tb_tau, "{{x,y,z}} > {{x},{x,z},{y},{y,z}} > rest, delta = {{x,z},{y},{y,z}}", false,
                        cx::inui_tau_under_common_top())});
  add(Rule::f1, Axiom::ibs, {detail::run_case(f1, "{{x,y},{x,y,z},{x}} > rest split into singletons", true, cx::ibs_f1())});
  add(Rule::f2, Axiom::iws, {detail::run_case(f2, "{{x}} > rest vs {{x}} > {{y}} > rest", true, cx::iws_f2())});
  add(Rule::indifferent, Axiom::wivip,
      {detail::run_case(indifferent, "{{x}} > rest", true, cx::wivip_single_veto())});
  return rows;
}

// ---------------------------------------------------------------------------
// Choice methods versus aggregators

struct ChoiceAgreement {
  AltSubset nurmi_first_choice;
  AltSubset iis_choice;
  bool first_agrees = false;
  bool second_applicable = false;  // table symmetric
  AltSubset nurmi_second_choice;
  AltSubset support_choice;
  bool second_agrees = false;

  bool pass() const { return first_agrees && (!second_applicable || second_agrees); }
};

inline ChoiceAgreement choice_agreement(const CriterionTable& table, const PreferenceProfile& profile) {
  const OpinionState o = induce_opinion(table, profile);
  const AltSubset n1 = nurmi_first(table, profile);
  const AltSubset iis = max_of(iis_rank(o));
  const AltSubset n2 = nurmi_second(table, profile);
  const AltSubset sup = max_of(support_rank(o));
  const bool symmetric = table.is_symmetric();
  return {n1, iis, n1 == iis, symmetric, n2, sup, symmetric && n2 == sup};
}

// ---------------------------------------------------------------------------
// Sparse fast paths versus the dense brute force

/// First disagreement between the sparse implementation and the dense oracle,
/// or nullopt. Requires |X| <= 5.
inline std::optional<std::string> dense_mismatch(const OpinionState& o) {
  const auto d = oracle::DenseState::from_state(o);
  const int n = o.universe();
  const auto describe = [](const std::string& what, auto got, auto want) {
    std::ostringstream out;
    out << what << ": sparse " << got << ", dense " << want;
    return std::optional<std::string>(out.str());
  };
  for (int s = 1; s <= d.subset_count(); ++s) {
    if (support_of(o, static_cast<AltMask>(s)) != d.support(s)) {
      return describe("support of mask " + std::to_string(s), support_of(o, static_cast<AltMask>(s)), d.support(s));
    }
  }
  const QuotientOrder q = quotient_order(o);
  const auto classes = oracle::dense_classes(d);
  if (q.num_classes() != classes.size()) return describe("class count", q.num_classes(), classes.size());
  AltMask prefix = full_mask(n);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (q.class_size(k) != classes[k].size()) return describe("size of class " + std::to_string(k), q.class_size(k), classes[k].size());
    if (q.class_meet(k) != oracle::dense_class_meet(d, k)) {
      return describe("meet of class " + std::to_string(k), q.class_meet(k), oracle::dense_class_meet(d, k));
    }
    for (int s : classes[k]) {
      if (q.class_of(AltSubset::of(static_cast<AltMask>(s), n)) != k) return describe("class of mask " + std::to_string(s), q.class_of(AltSubset::of(static_cast<AltMask>(s), n)), k);
    }
    prefix &= oracle::dense_class_meet(d, k);
    if (class_union_intersection(q, k + 1) != prefix) {
      return describe("prefix intersection at depth " + std::to_string(k + 1), class_union_intersection(q, k + 1), prefix);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (e_score(q, x) != oracle::dense_e_score(d, x)) return describe("e-score of " + std::to_string(x), e_score(q, x), oracle::dense_e_score(d, x));
    if (theta_vector(q, x) != oracle::dense_theta(d, x)) return std::string("theta of ") + std::to_string(x);
  }
  const auto dense = oracle::dense_rankings(d);
  const std::pair<Rule, const WeakOrder*> expected[] = {
      {Rule::iis, &dense.iis},       {Rule::support, &dense.support}, {Rule::lexcel, &dense.lexcel},
      {Rule::iis_tb_order, &dense.iis_tb_order}, {Rule::iis_tb_tau, &dense.iis_tb_tau}, {Rule::f1, &dense.f1},
      {Rule::f2, &dense.f2},         {Rule::indifferent, &dense.indifferent}};
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) names.push_back(std::to_string(x));
  for (const auto& [rule, want] : expected) {
    const WeakOrder got = make_aggregator(rule)(o);
    if (got != *want) {
      return describe(std::string(rule_name(rule)) + " ranking", format_weak_order(got, names), format_weak_order(*want, names));
    }
  }
  return std::nullopt;
}

}  // namespace opinion
