#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

using namespace opinion;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::main_with_args(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

std::vector<std::string> voting(std::vector<std::string> args) {
  args.insert(args.end(), {"--table", data("voting_rules.table"), "--profile", data("voting_rules.profile")});
  return args;
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() / ("iisrank_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, ChooseBothMethods) {
  auto r = run(voting({"choose", "--method", "n1"}));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{Copeland,Kemeny}\n");
  r = run(voting({"choose", "--method", "n2"}));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{Copeland,Kemeny}\n");
}

TEST(Cli, RankRules) {
  EXPECT_EQ(run(voting({"rank", "--rule", "iis"})).out,
            "{Copeland,Kemeny} > {Maximin,Plurality} > {Borda,Approval} > {Dodgson}\n");
  EXPECT_EQ(run(voting({"rank", "--rule", "support"})).out,
            "{Copeland,Kemeny} > {Maximin} > {Plurality} > {Borda} > {Dodgson} > {Approval}\n");
  EXPECT_EQ(run(voting({"rank", "--rule", "lexcel"})).out,
            "{Copeland,Kemeny} > {Maximin} > {Plurality} > {Borda} > {Approval} > {Dodgson}\n");
  EXPECT_EQ(run(voting({"rank", "--rule", "indifferent"})).out,
            "{Copeland,Dodgson,Maximin,Kemeny,Plurality,Borda,Approval}\n");
}

TEST(Cli, RankWithTiebreakOrder) {
  const auto r = run(voting({"rank", "--rule", "iis-tb-order", "--tiebreak",
                             "Approval,Borda,Copeland,Dodgson,Kemeny,Maximin,Plurality"}));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{Copeland} > {Kemeny} > {Maximin} > {Plurality} > {Approval} > {Borda} > {Dodgson}\n");
  EXPECT_EQ(run(voting({"rank", "--rule", "iis-tb-order", "--tiebreak", "Borda"})).code, cli::kInvalid);
  EXPECT_EQ(run(voting({"rank", "--rule", "iis", "--tiebreak", "Borda"})).code, cli::kUsage);
}

TEST(Cli, RankRawOpinion) {
  const auto r = run({"rank", "--opinion", data("two_ties.opinion"), "--rule", "iis"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{x,y,z}\n");
  EXPECT_EQ(run({"rank", "--opinion", data("two_ties.opinion"), "--rule", "lexcel"}).out, "{x,y,z}\n");
}

TEST(Cli, LinesFormat) {
  const auto r = run(voting({"--format", "lines", "rank", "--rule", "iis"}));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rule=iis\n"), std::string::npos);
  EXPECT_NE(r.out.find("class=1 members="), std::string::npos);
}

TEST(Cli, InducedOpinionFileReparses) {
  const auto induced = run(voting({"induce"}));
  ASSERT_EQ(induced.code, 0) << induced.err;
  EXPECT_NE(induced.out.find("# support {Copeland,Maximin,Kemeny,Plurality,Borda,Approval} : 13"), std::string::npos);
  const TempFile file(induced.out);
  EXPECT_EQ(run({"rank", "--opinion", file.path(), "--rule", "iis"}).out, run(voting({"rank", "--rule", "iis"})).out);
}

TEST(Cli, CheckPassesForIis) {
  const auto r = run({"check", "--rule", "iis", "--axiom", "inui", "--trials", "1000", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("no violations"), std::string::npos);
}

TEST(Cli, CheckReportsViolations) {
  const auto r = run({"--format", "lines", "check", "--rule", "indifferent", "--axiom", "wivip", "--trials", "50"});
  EXPECT_EQ(r.code, cli::kFailed);
  EXPECT_NE(r.out.find("counterexample axiom=wivip"), std::string::npos);
  EXPECT_NE(r.out.find("seed=1"), std::string::npos);
}

TEST(Cli, CheckIsReproducible) {
  const std::vector<std::string> args{"--format", "lines", "check", "--rule", "f2", "--trials", "100", "--seed", "11"};
  const auto first = run(args), second = run(args);
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(first.out.find("seed=11"), std::string::npos);
}

TEST(Cli, DemoAndSelftest) {
  const auto demo = run({"demo"});
  EXPECT_EQ(demo.code, 0) << demo.out;
  EXPECT_NE(demo.out.find("demo: all values match"), std::string::npos);
  const auto self = run({"--format", "lines", "selftest", "--trials", "200"});
  EXPECT_EQ(self.code, 0) << self.out;
  EXPECT_NE(self.out.find("selftest size=5 seed=1 states=200 mismatches=0"), std::string::npos) << self.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"rank", "--table", "/nonexistent/t", "--profile", "/nonexistent/p"}).code, cli::kUsage);
  EXPECT_EQ(run(voting({"rank", "--rule", "borda"})).code, cli::kUsage);
  EXPECT_EQ(run(voting({"choose", "--method", "n3"})).code, cli::kUsage);
  const TempFile bad("alternatives: p q r\ncriterion c: p\ncriterion d: p\n");
  const auto r = run({"choose", "--table", bad.path(), "--profile", data("voting_rules.profile")});
  EXPECT_EQ(r.code, cli::kInvalid);
  EXPECT_NE(r.err.find("'c' and 'd'"), std::string::npos) << r.err;
}
