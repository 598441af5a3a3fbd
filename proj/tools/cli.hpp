#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "opinion/opinion.hpp"

// Exit codes: 0 success, 1 usage or parse error, 2 validation error,
// 3 failed assertion or axiom violation.

namespace opinion::cli {

enum class Format { text, lines };

struct RunConfig {
  std::string subcommand;
  std::string table_path;
  std::string profile_path;
  std::string opinion_path;
  std::string method = "n1";
  std::string rule = "iis";
  std::string axiom = "all";
  std::string tiebreak;  // comma-separated alternative names, best first
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::vector<int> sizes{3, 4, 5};
  Format format = Format::text;
};

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kFailed = 3;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string join(const std::vector<int>& members, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + names.at(members[i]);
  return out;
}

inline std::string members_of(AltMask mask, const std::vector<std::string>& names) {
  std::string s = format_subset(mask, names);
  return s.substr(1, s.size() - 2);
}

struct Inputs {
  std::vector<std::string> alternatives;
  OpinionState state{3};
  std::optional<CriterionTable> table;
  std::optional<PreferenceProfile> profile;
};

inline void require_table_inputs(const RunConfig& c) {
  if (c.table_path.empty() || c.profile_path.empty()) throw ParseError(c.subcommand + " needs --table and --profile");
}

inline Inputs load(const RunConfig& c) {
  Inputs in;
  if (!c.opinion_path.empty()) {
    if (!c.table_path.empty() || !c.profile_path.empty()) {
      throw ParseError("give either --opinion or --table/--profile, not both");
    }
    auto file = parse_opinion_state(read_file(c.opinion_path));
    in.alternatives = std::move(file.alternatives);
    in.state = std::move(file.state);
    return in;
  }
  require_table_inputs(c);
  in.table = parse_criterion_table(read_file(c.table_path));
  in.profile = parse_profile(read_file(c.profile_path), *in.table);
  in.alternatives = in.table->alternatives();
  in.state = induce_opinion(*in.table, *in.profile);
  return in;
}

inline std::vector<int> parse_tiebreak(const std::string& text, const std::vector<std::string>& names) {
  std::vector<int> order;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("unknown alternative '" + name + "' in --tiebreak");
    order.push_back(static_cast<int>(it - names.begin()));
  }
  return order;
}

inline std::vector<std::string> generic_names(int n) { return index_names("x", n); }

// --- subcommands -----------------------------------------------------------

inline int choose(const RunConfig& c, std::ostream& out) {
  require_table_inputs(c);
  const auto table = parse_criterion_table(read_file(c.table_path));
  const auto profile = parse_profile(read_file(c.profile_path), table);
  AltSubset chosen = c.method == "n1"   ? nurmi_first(table, profile)
                     : c.method == "n2" ? nurmi_second(table, profile)
                                        : throw ParseError("unknown method '" + c.method + "' (n1 or n2)");
  if (c.format == Format::lines) {
    out << "method=" << c.method << "\nchoice=" << members_of(chosen.bits(), table.alternatives()) << "\n";
  } else {
    out << format_subset(chosen.bits(), table.alternatives()) << "\n";
  }
  return kOk;
}

inline int rank(const RunConfig& c, std::ostream& out) {
  const auto rule = parse_rule(c.rule);
  if (!rule) throw ParseError("unknown rule '" + c.rule + "'");
  const Inputs in = load(c);
  std::vector<int> tiebreak;
  if (!c.tiebreak.empty()) {
    if (*rule != Rule::iis_tb_order) throw ParseError("--tiebreak only applies to iis-tb-order");
    tiebreak = parse_tiebreak(c.tiebreak, in.alternatives);
  }
  const WeakOrder r = make_aggregator(*rule, tiebreak)(in.state);
  if (c.format == Format::lines) {
    out << "rule=" << c.rule << "\n";
    for (std::size_t k = 0; k < r.num_classes(); ++k) {
      out << "class=" << k + 1 << " members=" << join(r.classes()[k], in.alternatives) << "\n";
    }
  } else {
    out << format_weak_order(r, in.alternatives) << "\n";
  }
  return kOk;
}

inline int induce(const RunConfig& c, std::ostream& out) {
  require_table_inputs(c);
  const auto table = parse_criterion_table(read_file(c.table_path));
  const auto profile = parse_profile(read_file(c.profile_path), table);
  const OpinionState o = induce_opinion(table, profile);
  const auto& names = table.alternatives();
  const SupportVector m = support(o);
  if (c.format == Format::lines) {
    for (const auto& [key, count] : o.entries()) {
      out << "entry better=" << members_of(key.first.bits(), names) << " worse=" << members_of(key.second.bits(), names)
          << " count=" << count << "\n";
    }
    for (const auto& [s, v] : m.positive()) out << "support subset=" << members_of(s.bits(), names) << " value=" << v << "\n";
    return kOk;
  }
  out << serialize_opinion_state({names, o});
  for (const auto& [s, v] : m.positive()) out << "# support " << format_subset(s.bits(), names) << " : " << v << "\n";
  return kOk;
}

inline int check(const RunConfig& c, std::ostream& out) {
  const auto rule = parse_rule(c.rule);
  if (!rule) throw ParseError("unknown rule '" + c.rule + "'");
  std::vector<Axiom> axioms;
  if (c.axiom == "all") {
    axioms.assign(std::begin(kAllAxioms), std::end(kAllAxioms));
  } else if (auto a = parse_axiom(c.axiom)) {
    axioms.push_back(*a);
  } else {
    throw ParseError("unknown axiom '" + c.axiom + "'");
  }
  for (int n : c.sizes) check_universe(n);
  const Aggregator agg = make_aggregator(*rule);
  std::size_t violations = 0;
  if (c.format == Format::text) out << "rule " << c.rule << ", seed " << c.seed << ", " << c.trials << " trials per size\n";
  for (Axiom a : axioms) {
    for (int n : c.sizes) {
      const SweepResult r = sweep_axiom(agg, a, n, c.seed, c.trials);
      violations += r.violations;
      if (c.format == Format::lines) {
        out << "check rule=" << c.rule << " axiom=" << axiom_name(a) << " size=" << n << " seed=" << c.seed
            << " instances=" << r.instances << " shortfall=" << r.shortfall << " violations=" << r.violations << "\n";
      } else {
        out << axiom_name(a) << " |X|=" << n << ": " << r.instances << " instances, " << r.violations << " violations";
        if (r.shortfall) out << " (" << r.shortfall << " skipped: no eligible delta)";
        out << "\n";
      }
      if (!r.first_violation) continue;
      const auto names = generic_names(n);
      const auto& inst = *r.first_violation;
      std::string o2 = inst.second ? format_quotient(quotient_order(*inst.second), names) : "-";
      const auto& v = *r.first_detail;
      if (c.format == Format::lines) {
        out << "counterexample axiom=" << axiom_name(a) << " size=" << n << " x=" << names[v.x] << " y=" << names[v.y]
            << " o1=" << format_quotient(quotient_order(inst.first), names) << " o2=" << o2 << "\n";
      } else {
        out << "  first violation at (" << names[v.x] << ", " << names[v.y] << "): " << v.detail << "\n"
            << "    M_o1: " << format_quotient(quotient_order(inst.first), names) << "\n";
        if (inst.second) out << "    M_o2: " << o2 << "\n";
      }
    }
  }
  if (c.format == Format::text) out << (violations ? "violations found\n" : "no violations\n");
  return violations ? kFailed : kOk;
}

// demo: the voting-rules example end to end, with every number asserted.
struct Expect {
  std::ostream& out;
  int failures = 0;

  template <typename T>
  void operator()(const std::string& what, const T& got, const T& want) {
    if (got == want) return;
    ++failures;
    out << "MISMATCH " << what << "\n";
  }
};

inline std::string join_numbers(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline int demo(std::ostream& out) {
  const auto table = running_example::table();
  const auto profile = running_example::profile();
  const auto& alts = table.alternatives();
  const auto& crits = table.criteria();
  Expect expect{out};

  out << "criteria and their satisfying alternatives\n";
  for (int c = 0; c < table.num_criteria(); ++c) out << "  Tr(" << crits[c] << ") = " << format_subset(table.truth(c).bits(), alts) << "\n";

  const auto tally = borda_criterion_scores(table, profile);
  const WeakOrder b = borda_ranking(tally);
  out << "Borda scores of criteria: " << join_numbers(tally.criterion_scores) << "\n";
  out << "Borda ranking: " << format_weak_order(b, crits) << "\n";
  expect("criterion scores", tally.criterion_scores, std::vector<std::uint64_t>{10, 11, 12, 13, 8, 9});
  expect("Borda ranking", format_weak_order(b, crits), std::string("{d} > {c} > {b} > {a} > {f} > {e}"));

  const auto cascade = nurmi_cascade(table, b);
  std::vector<std::string> cascade_text;
  for (std::size_t k = 0; k < cascade.size(); ++k) {
    cascade_text.push_back(format_subset(cascade[k], alts));
    out << "  T_" << k + 1 << " = " << cascade_text.back() << "\n";
  }
  expect("cascade", cascade_text,
         std::vector<std::string>{"{Copeland,Maximin,Kemeny,Plurality,Borda,Approval}", "{Copeland,Maximin,Kemeny,Plurality}",
                                  "{Copeland,Kemeny}", "{Copeland,Kemeny}", "{}", "{}"});
  const std::string winners = "{Copeland,Kemeny}";
  const std::string n1 = format_subset(nurmi_first(table, profile).bits(), alts);
  const std::string n2 = format_subset(nurmi_second(table, profile).bits(), alts);
  out << "Nurmi first method: " << n1 << "\n";
  out << "alternative Borda sums: " << join_numbers(tally.alternative_scores) << "\n";
  out << "Nurmi second method: " << n2 << "\n";
  expect("first method", n1, winners);
  expect("second method", n2, winners);
  expect("alternative sums", tally.alternative_scores, std::vector<std::uint64_t>{54, 30, 43, 54, 42, 41, 22});

  const OpinionState o = induce_opinion(table, profile);
  const QuotientOrder q = quotient_order(o);
  std::vector<std::uint64_t> supports;
  for (int c = 0; c < table.num_criteria(); ++c) supports.push_back(support_of(o, table.truth(c).bits()));
  out << "supports of Tr(a..f): " << join_numbers(supports) << "\n";
  expect("supports", supports, std::vector<std::uint64_t>{10, 11, 12, 13, 8, 9});
  expect("class count", q.num_classes(), std::size_t{7});

  const auto e = e_scores(q);
  out << "e-scores: " << join_numbers(e) << "\n";
  expect("e-scores", e, std::vector<std::uint64_t>{4, 0, 2, 4, 2, 1, 1});

  const std::string iis = format_weak_order(iis_rank(q), alts);
  const std::string sup = format_weak_order(support_rank(o), alts);
  const std::string lex = format_weak_order(lexcel_rank(q), alts);
  out << "IIS ranking: " << iis << "\n";
  out << "support ranking: " << sup << "\n";
  out << "theta(Approval) = (" << join_numbers(theta_vector(q, 6)) << "), theta(Borda) = (" << join_numbers(theta_vector(q, 5)) << ")\n";
  out << "lex-cel ranking: " << lex << "\n";
  expect("IIS ranking", iis, std::string("{Copeland,Kemeny} > {Maximin,Plurality} > {Borda,Approval} > {Dodgson}"));
  expect("support ranking", sup,
         std::string("{Copeland,Kemeny} > {Maximin} > {Plurality} > {Borda} > {Dodgson} > {Approval}"));
  expect("theta(Approval)", theta_vector(q, 6), std::vector<std::uint64_t>{1, 0, 0, 0, 1, 0, 62});
  expect("theta(Borda)", theta_vector(q, 5), std::vector<std::uint64_t>{1, 0, 1, 0, 1, 1, 60});
  expect("lex-cel ranking", lex,
         std::string("{Copeland,Kemeny} > {Maximin} > {Plurality} > {Borda} > {Approval} > {Dodgson}"));
  expect("max of IIS", format_subset(max_of(iis_rank(q)).bits(), alts), winners);
  expect("max of support", format_subset(max_of(support_rank(o)).bits(), alts), winners);

  out << (expect.failures ? "demo: " + std::to_string(expect.failures) + " mismatches\n" : std::string("demo: all values match\n"));
  return expect.failures ? kFailed : kOk;
}

inline int selftest(const RunConfig& c, std::ostream& out) {
  std::size_t failures = 0;
  for (int n : c.sizes) {
    if (n > oracle::kMaxDenseUniverse) throw ValidationError("selftest sizes must be at most 5");
    check_universe(n);
    Rng rng(c.seed * 1000003u + static_cast<std::uint64_t>(n));
    std::size_t mismatches = 0;
    std::optional<std::string> first;
    for (std::size_t t = 0; t < c.trials; ++t) {
      const OpinionState o = random_state(n, rng);
      auto m = dense_mismatch(o);
      if (!m) continue;
      if (mismatches++ == 0) first = m;
    }
    failures += mismatches;
    if (c.format == Format::lines) {
      out << "selftest size=" << n << " seed=" << c.seed << " states=" << c.trials << " mismatches=" << mismatches << "\n";
    } else {
      out << "|X|=" << n << ": " << c.trials << " random states, " << mismatches << " sparse/dense mismatches\n";
    }
    if (first) out << "  first: " << *first << "\n";
  }
  return failures ? kFailed : kOk;
}

}  // namespace detail

inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "choose") return detail::choose(c, out);
    if (c.subcommand == "rank") return detail::rank(c, out);
    if (c.subcommand == "induce") return detail::induce(c, out);
    if (c.subcommand == "check") return detail::check(c, out);
    if (c.subcommand == "demo") return detail::demo(out);
    if (c.subcommand == "selftest") return detail::selftest(c, out);
    err << "error: unknown subcommand '" << c.subcommand << "'\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

/// Parses arguments (without the program name) and runs.
inline int main_with_args(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Rank alternatives from opinions on criteria", "iisrank"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "lines"}));

  const auto add_inputs = [&](CLI::App* sub, bool allow_opinion) {
    sub->add_option("--table", c.table_path, "Criterion table file");
    sub->add_option("--profile", c.profile_path, "Preference profile file");
    if (allow_opinion) sub->add_option("--opinion", c.opinion_path, "Raw opinion-state file");
  };
  auto* choose = app.add_subcommand("choose", "Choice set of Nurmi's first or second method");
  add_inputs(choose, false);
  choose->add_option("--method", c.method, "n1 or n2")->check(CLI::IsMember({"n1", "n2"}));
  auto* rank = app.add_subcommand("rank", "Rank the alternatives with an aggregator");
  add_inputs(rank, true);
  rank->add_option("--rule", c.rule, "Aggregator");
  rank->add_option("--tiebreak", c.tiebreak, "Comma-separated alternatives, best first (iis-tb-order)");
  auto* induce = app.add_subcommand("induce", "Print the induced opinion state and its supports");
  add_inputs(induce, false);
  auto* check = app.add_subcommand("check", "Check axioms on generated instances");
  check->add_option("--axiom", c.axiom, "nt, iws, ibs, wivip, inui or all");
  check->add_option("--rule", c.rule, "Aggregator under test");
  check->add_option("--trials", c.trials, "Instances per axiom and size");
  check->add_option("--seed", c.seed, "Generator seed");
  check->add_option("--size", c.sizes, "Universe sizes")->expected(1, -1);
  app.add_subcommand("demo", "Recompute the voting-rules example and assert its values");
  auto* selftest = app.add_subcommand("selftest", "Compare sparse computations with the dense oracle");
  selftest->add_option("--trials", c.trials, "States per size");
  selftest->add_option("--seed", c.seed, "Generator seed");
  selftest->add_option("--size", c.sizes, "Universe sizes (at most 5)")->expected(1, -1);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  c.format = format == "lines" ? Format::lines : Format::text;
  return run(c, out, err);
}

}  // namespace opinion::cli
