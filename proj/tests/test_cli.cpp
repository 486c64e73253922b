#include "logmat/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace logmat;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, OrdDocumentedInvocation) {
  const CliResult r = invoke({"ord", "--p", "3", "--ap", "3", "--eps", "1", "--n", "2",
                              "--format", "json", "--no-timestamp"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["command"], "ord");
  EXPECT_EQ(doc["results"][0]["ord_matrix"],
            Json::parse(R"([["-1/2","-1/2"],["-7/6","-7/6"]])"));
  EXPECT_EQ(doc["results"][0]["matches_closed_form"], true);
  EXPECT_EQ(doc["summary"]["failed"], 0);
}

TEST(Cli, EndgameDocumentedInvocation) {
  const CliResult text = invoke({"endgame", "--p", "3", "--e", "2"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("forced_r = 1/4"), std::string::npos) << text.out;

  const CliResult json = invoke({"endgame", "--p", "3", "--e", "2", "--format", "json",
                                 "--no-timestamp"});
  const Json doc = Json::parse(json.out);
  EXPECT_EQ(doc["results"][0]["forced_r"], "1/4");
  EXPECT_EQ(doc["results"][0]["contradiction"], true);
}

TEST(Cli, NonPrimeIsInputError) {
  const CliResult r = invoke({"ord", "--p", "4", "--ap", "3", "--n", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("odd prime"), std::string::npos);
}

TEST(Cli, UnknownSubcommandIsInputError) {
  const CliResult r = invoke({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ValidationFailuresNeverReachComputation) {
  EXPECT_EQ(invoke({"claim", "--p", "3", "--r", "1/7"}).code, 2);       // 2r <= 1/p
  EXPECT_EQ(invoke({"stab", "--p", "3", "--ap", "3", "--n", "2", "--m", "2"}).code, 2);
  EXPECT_EQ(invoke({"ord", "--p", "3", "--ap", "3", "--n", "1"}).code, 2);
  EXPECT_EQ(invoke({"ord", "--p", "3", "--ap", "1", "--n", "2"}).code, 2);  // ordinary form
  EXPECT_EQ(invoke({"artin", "--p", "3", "--ap", "3", "--D", "4"}).code, 2);  // cap too small
}

TEST(Cli, TnCsvTable) {
  const CliResult r = invoke({"tn", "--p", "3", "--n-max", "4", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("t_plus"), std::string::npos);
  EXPECT_NE(r.out.find("1,\"0\",\"0\""), std::string::npos);
  EXPECT_NE(r.out.find("2,\"1/9\",\"1/3\""), std::string::npos);
  EXPECT_NE(r.out.find("3,\"1/9\",\"1/3\""), std::string::npos);
  EXPECT_NE(r.out.find("4,\"10/81\",\"10/27\""), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
  const CliResult r = invoke({"verify-prop", "--p", "3", "--ap", "3", "--n-max", "3",
                              "--format", "json", "--no-timestamp"});
  EXPECT_EQ(r.code, 0);
  const Report parsed = Report::from_json(r.out);
  EXPECT_EQ(parsed.to_json(), r.out);  // byte-identical re-serialization
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args = {"artin", "--p", "3", "--ap", "3", "--D", "8",
                                         "--trials", "2", "--seed", "9", "--format", "json",
                                         "--no-timestamp"};
  const CliResult a = invoke(args);
  const CliResult b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutFileAndUnwritablePath) {
  const std::string path = testing::TempDir() + "/logmat_report.json";
  const CliResult ok = invoke({"tn", "--p", "3", "--n-max", "2", "--format", "json",
                               "--no-timestamp", "--out", path});
  EXPECT_EQ(ok.code, 0);
  std::ifstream f(path);
  ASSERT_TRUE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_FALSE(buf.str().empty());
  EXPECT_NO_THROW({
    const Json parsed = Json::parse(buf.str());
    (void)parsed;
  });

  const CliResult bad = invoke({"tn", "--p", "3", "--out", "/nonexistent-dir/x.json"});
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, EmptyResultsSummary) {
  Report rep("probe");
  rep.finalize(false);
  EXPECT_EQ(rep.doc["summary"]["passed"], 0);
  EXPECT_EQ(rep.doc["summary"]["failed"], 0);
  EXPECT_TRUE(rep.all_pass());
}

TEST(Cli, FailedItemForcesNonzeroSummary) {
  Report rep("probe");
  rep.add(Json{{"item", "x"}, {"pass", false}});
  rep.finalize(false);
  EXPECT_EQ(rep.doc["summary"]["failed"], 1);
  EXPECT_FALSE(rep.all_pass());
}
