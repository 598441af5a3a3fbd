#pragma once

#include <string_view>

#include "criteria.hpp"
#include "io.hpp"

// Seven voting rules judged against six properties, ranked by three voters.
// Same content as data/voting_rules.{table,profile}.

namespace opinion::running_example {

inline constexpr std::string_view kTable = R"(alternatives: Copeland Dodgson Maximin Kemeny Plurality Borda Approval
criterion a: Copeland Dodgson Maximin Kemeny
criterion b: Copeland Kemeny Borda
criterion c: Copeland Dodgson Maximin Kemeny Plurality
criterion d: Copeland Maximin Kemeny Plurality Borda Approval
criterion e: Copeland Dodgson Maximin Kemeny Plurality Borda
criterion f: Plurality Borda Approval
)";

inline constexpr std::string_view kProfile = R"(voter 1: a > b > c > d > e > f
voter 2: d > c > b > a > f > e
voter 3: f > e > d > c > b > a
)";

inline CriterionTable table() { return parse_criterion_table(kTable); }
inline PreferenceProfile profile() { return parse_profile(kProfile, table()); }

}  // namespace opinion::running_example
