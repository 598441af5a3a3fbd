#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "criteria.hpp"
#include "error.hpp"
#include "opinion_state.hpp"
#include "quotient_order.hpp"
#include "subset.hpp"

// Line-oriented text formats. `#` starts a comment; blank lines are ignored.
//
//   alternatives: Copeland Dodgson Maximin
//   criterion a: Copeland Dodgson
//   voter v1: a > b > c
//   opinion {Copeland,Dodgson} >= {Maximin} : 3

namespace opinion {

namespace io_detail {

struct Line {
  int number;
  std::string text;
};

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (!line.empty()) lines.push_back({number, std::move(line)});
  }
  return lines;
}

[[noreturn]] inline void fail(const Line& line, const std::string& why) {
  throw ParseError("line " + std::to_string(line.number) + ": " + why);
}

inline std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

/// Splits "keyword rest: body" into ("rest", "body"); keyword already matched.
inline std::pair<std::string, std::string> split_header(const Line& line, std::string_view keyword) {
  const auto colon = line.text.find(':');
  if (colon == std::string::npos) fail(line, "expected '" + std::string(keyword) + " ...:'");
  std::string head = trim(std::string_view(line.text).substr(keyword.size(), colon - keyword.size()));
  return {head, trim(std::string_view(line.text).substr(colon + 1))};
}

inline bool starts_with_word(const std::string& text, std::string_view keyword) {
  if (text.rfind(keyword, 0) != 0) return false;
  return text.size() == keyword.size() || text[keyword.size()] == ' ' || text[keyword.size()] == '\t' ||
         text[keyword.size()] == ':';
}

inline std::vector<std::string> parse_alternatives_line(const Line& line) {
  if (!starts_with_word(line.text, "alternatives")) fail(line, "first line must be 'alternatives: <name> ...'");
  auto [head, body] = split_header(line, "alternatives");
  if (!head.empty()) fail(line, "unexpected text before ':'");
  return words(body);
}

inline AltMask resolve(const Line& line, const std::vector<std::string>& names, const std::vector<std::string>& alts) {
  AltMask mask = 0;
  for (const auto& name : names) {
    auto it = std::find(alts.begin(), alts.end(), name);
    if (it == alts.end()) fail(line, "unknown alternative '" + name + "'");
    mask |= bit(static_cast<int>(it - alts.begin()));
  }
  return mask;
}

inline std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto piece = trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!piece.empty()) out.push_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace io_detail

inline std::string format_subset(AltMask mask, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x = 0; x < names.size(); ++x) {
    if (!mask_contains(mask, static_cast<int>(x))) continue;
    if (!first) out += ',';
    out += names[x];
    first = false;
  }
  return out + "}";
}

/// "{{a,b}} > {{a},{c}} > rest"; the residual class, when present, prints as
/// "rest".
inline std::string format_quotient(const QuotientOrder& q, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& cls : q.explicit_classes()) {
    if (!out.empty()) out += " > ";
    out += '{';
    for (std::size_t i = 0; i < cls.members.size(); ++i) out += (i ? "," : "") + format_subset(cls.members[i].bits(), names);
    out += '}';
  }
  if (q.residual_present()) out += out.empty() ? "rest" : " > rest";
  return out;
}

// ---------------------------------------------------------------------------
// Criterion tables

inline CriterionTable parse_criterion_table(std::string_view text) {
  using namespace io_detail;
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("criterion table is empty");
  auto alternatives = parse_alternatives_line(lines.front());
  if (alternatives.size() > kMaxAlternatives) throw ValidationError("at most 64 alternatives are supported");
  std::vector<std::string> criteria;
  std::vector<AltSubset> truth;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (!starts_with_word(line.text, "criterion")) fail(line, "expected 'criterion <name>: <alternative> ...'");
    auto [name, body] = split_header(line, "criterion");
    if (name.empty() || words(name).size() != 1) fail(line, "criterion name must be a single word");
    const AltMask mask = resolve(line, words(body), alternatives);
    if (mask == 0) {
      throw ValidationError("criterion '" + name + "' is satisfied by no alternative (self-contradicting)");
    }
    criteria.push_back(name);
    truth.push_back(AltSubset::of(mask, kMaxAlternatives));
  }
  return CriterionTable(std::move(alternatives), std::move(criteria), std::move(truth));
}

inline std::string serialize_criterion_table(const CriterionTable& table) {
  std::string out = "alternatives:";
  for (const auto& a : table.alternatives()) out += " " + a;
  out += '\n';
  for (int c = 0; c < table.num_criteria(); ++c) {
    out += "criterion " + table.criteria()[c] + ":";
    for (int x = 0; x < table.num_alternatives(); ++x) {
      if (table.truth(c).contains(x)) out += " " + table.alternatives()[x];
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Preference profiles

inline PreferenceProfile parse_profile(std::string_view text, const CriterionTable& table) {
  using namespace io_detail;
  std::vector<std::string> voters;
  std::vector<std::vector<int>> orders;
  for (const Line& line : content_lines(text)) {
    if (!starts_with_word(line.text, "voter")) fail(line, "expected 'voter <id>: c1 > c2 > ...'");
    auto [id, body] = split_header(line, "voter");
    if (id.empty() || words(id).size() != 1) fail(line, "voter id must be a single word");
    if (std::find(voters.begin(), voters.end(), id) != voters.end()) fail(line, "duplicate voter '" + id + "'");
    std::vector<int> order;
    std::size_t start = 0;
    while (true) {
      const auto gt = body.find('>', start);
      const std::string name = trim(std::string_view(body).substr(start, gt == std::string::npos ? std::string::npos : gt - start));
      if (name.empty()) fail(line, "empty position in voter order");
      auto c = table.find_criterion(name);
      if (!c) fail(line, "unknown criterion '" + name + "'");
      order.push_back(*c);
      if (gt == std::string::npos) break;
      start = gt + 1;
    }
    voters.push_back(id);
    orders.push_back(std::move(order));
  }
  if (voters.empty()) throw ParseError("profile has no voter lines");
  return PreferenceProfile(table.num_criteria(), std::move(voters), std::move(orders));
}

inline std::string serialize_profile(const PreferenceProfile& profile, const CriterionTable& table) {
  std::string out;
  for (int i = 0; i < profile.num_voters(); ++i) {
    out += "voter " + profile.voters()[i] + ":";
    const auto& order = profile.order(i);
    for (std::size_t r = 0; r < order.size(); ++r) out += (r == 0 ? " " : " > ") + table.criteria()[order[r]];
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Raw opinion states

struct OpinionFile {
  std::vector<std::string> alternatives;
  OpinionState state;

  friend bool operator==(const OpinionFile&, const OpinionFile&) = default;
};

/// Repeated (S, T) lines accumulate.
inline OpinionFile parse_opinion_state(std::string_view text) {
  using namespace io_detail;
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("opinion file is empty");
  auto alternatives = parse_alternatives_line(lines.front());
  const int n = static_cast<int>(alternatives.size());
  check_universe(n);
  {
    std::vector<std::string> sorted = alternatives;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ValidationError("duplicate alternative name");
    }
  }
  static const std::regex pattern(R"(opinion\s*\{([^}]*)\}\s*>=\s*\{([^}]*)\}\s*:\s*(\S+))");
  std::vector<OpinionEntry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::smatch m;
    if (!std::regex_match(line.text, m, pattern)) fail(line, "expected 'opinion {a,b} >= {c} : <count>'");
    const AltMask better = resolve(line, split_commas(m[1].str()), alternatives);
    const AltMask worse = resolve(line, split_commas(m[2].str()), alternatives);
    if (better == 0 || worse == 0) throw ValidationError("line " + std::to_string(line.number) + ": subsets must be nonempty");
    const std::string count_text = m[3].str();
    std::uint64_t count = 0;
    auto [end, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || end != count_text.data() + count_text.size()) {
      fail(line, "count must be a nonnegative integer, got '" + count_text + "'");
    }
    entries.push_back({AltSubset::of(better, n), AltSubset::of(worse, n), count});
  }
  OpinionState state(n, entries);
  return {std::move(alternatives), std::move(state)};
}

inline std::string serialize_opinion_state(const OpinionFile& file) {
  std::string out = "alternatives:";
  for (const auto& a : file.alternatives) out += " " + a;
  out += '\n';
  for (const auto& [key, count] : file.state.entries()) {
    out += "opinion " + format_subset(key.first.bits(), file.alternatives) + " >= " +
           format_subset(key.second.bits(), file.alternatives) + " : " + std::to_string(count) + "\n";
  }
  return out;
}

}  // namespace opinion
