#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "condep/relation_io.hpp"

using namespace condep;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CONDEP_DATA_DIR) + "/" + name; }

class TempDir {
public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("condep-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

private:
  std::filesystem::path path_;
};

} // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"marg", data("sample8.rel")}).code, 2);
  EXPECT_EQ(run({"check", "fd", data("sample8.rel"), "A1 ->> A2 | A3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Marg) {
  const auto r = run({"marg", data("sample8.rel"), "--onto", "A1,A2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "A1,A2,#weight\n0,0,3\n0,1,6\n1,0,8\n1,1,11\n");
  EXPECT_EQ(run({"marg", data("sample8.rel"), "--onto", "_"}).out, "#weight\n28\n");
  EXPECT_EQ(run({"marg", data("sample8.rel"), "--onto", "B"}).code, 2);
}

TEST(Cli, RelationOutputsRoundTrip) {
  const auto phi = read_relation_file(data("join_left.rel"));
  const auto psi = read_relation_file(data("join_right.rel"));
  const auto sample = read_relation_file(data("sample8.rel"));
  const std::vector<std::pair<std::vector<std::string>, WeightedRelation>> cases{
      {{"pjoin", data("join_left.rel"), data("join_right.rel")}, product_join(phi, psi)},
      {{"inv", data("sample8.rel")}, inverse(sample)},
      {{"mjoin", data("sample8.rel"), "--left", "A1,A2", "--right", "A1,A3"},
       monotone_join(sample, {"A1", "A2"}, {"A1", "A3"})},
      {{"marg", data("sample8.rel"), "--onto", "A3"}, marginalize(sample, {"A3"})},
  };
  for (const auto& [args, expected] : cases) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_relation(r.out), expected);
    EXPECT_EQ(run(args).out, r.out);
  }
}

TEST(Cli, JsonRelation) {
  const auto r = run({"--json", "inv", data("join_right.rel")});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], nlohmann::json({"A2", "A3"}));
  EXPECT_EQ(j["rows"][3]["weight"], "4");
}

TEST(Cli, Check) {
  EXPECT_EQ(run({"check", "mvd", data("product4.rel"), "A ->> B | C", "--method", "lemma2"}).code,
            0);
  EXPECT_EQ(run({"check", "ci", data("xor.rel"), "_ ->> A | B"}).code, 0);
  const auto r = run({"check", "ci", data("xor.rel"), "C ->> A | B"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "ci C ->> A | B: fails\n");
  EXPECT_EQ(run({"check", "gemvd", data("xor.rel"), "C ->> A | B"}).code, 1);
  EXPECT_EQ(run({"check", "emvd", data("xor.rel"), "_ ->> A | B"}).code, 0);
  EXPECT_EQ(run({"check", "mvd", data("xor.rel"), "A ->> B | _"}).code, 2);
  EXPECT_EQ(run({"check", "mvd", data("xor.rel"), "A ->> B | C", "--method", "magic"}).code, 2);
  const auto j = nlohmann::json::parse(
      run({"--json", "check", "gmvd", data("xor.rel"), "C ->> A | B"}).out);
  EXPECT_EQ(j["verdict"], "fails");
}

TEST(Cli, StatementDiagnostics) {
  auto r = run({"check", "mvd", data("product4.rel"), "A ->> A | B"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("overlap"), std::string::npos);
  r = run({"check", "mvd", data("product4.rel"), "A ->> B C"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("<statement>"), std::string::npos);
}

TEST(Cli, FileDiagnostics) {
  TempDir dir;
  const auto bad = dir.write("bad.rel", "A,B,#weight\n0,0,1\n0,1,oops\n");
  const auto r = run({"inv", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(bad + ":3:5"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("'oops'"), std::string::npos);

  const auto missing = run({"inv", dir.write("x", "") + ".absent"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);

  const auto sigma = dir.write("s.zemvd", "Z: Z\nA ->> B | Q\n");
  const auto s = run({"cover", sigma, "A ->> B | Z"});
  EXPECT_EQ(s.code, 2);
  EXPECT_NE(s.err.find(sigma + ":2:"), std::string::npos) << s.err;
  EXPECT_NE(s.err.find("'Q'"), std::string::npos);
}

TEST(Cli, Cover) {
  const auto r = run({"cover", data("sigma4.zemvd"), "X0 ->> X3 | Z"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("path (7 arcs)"), std::string::npos);
  EXPECT_EQ(run({"cover", data("sigma4.zemvd"), "X1 ->> X0,X2 | Z"}).code, 1);
  const auto j =
      nlohmann::json::parse(run({"--json", "cover", data("sigma4.zemvd"), "X0 ->> X3 | Z"}).out);
  EXPECT_EQ(j["arcs"], 7);
  EXPECT_EQ(j["path"].size(), 7u);
  EXPECT_EQ(run({"cover", data("sigma4.zemvd"), "X0 ->> X3 | Q"}).code, 2);
}

TEST(Cli, Derive) {
  TempDir dir;
  const auto reduced = dir.write("r.zemvd", "Z: Z\nX0 ->> X1 | Z\nX1 ->> X2 | Z\nX2 ->> X3 | Z\n");
  auto r = run({"derive", data("sigma4.zemvd"), "X0 ->> Z | X3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cover member: X0 ->> X3 | Z"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("by symmetry"), std::string::npos);
  r = run({"derive", reduced, "X1 ->> X0 | Z"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(run({"--json", "derive", data("sigma4.zemvd"), "X0 ->> Z | X3"}).out);
  EXPECT_EQ(j["implied"], true);
  EXPECT_EQ(j["derivation"]["steps"].size(), 1u);
}

TEST(Cli, Counterexample) {
  for (int n = 3; n <= 8; ++n) {
    const auto r = run({"counterexample", "--n", std::to_string(n)});
    EXPECT_EQ(r.code, 0) << n;
  }
  const auto r = run({"counterexample", "--n", "4"});
  EXPECT_EQ(r.out, run({"counterexample", "--n", "4"}).out);
  EXPECT_EQ(r.out.find(" ms)"), std::string::npos);
  EXPECT_NE(run({"--timing", "counterexample", "--n", "4"}).out.find(" ms)"), std::string::npos);
  EXPECT_EQ(run({"counterexample", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"counterexample", "--n", "40"}).code, 3);
  const auto j = nlohmann::json::parse(run({"--json", "counterexample", "--n", "4"}).out);
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_EQ(j["property1_path_arcs"], 7);
}

TEST(Cli, Witness) {
  TempDir dir;
  const auto empty = dir.write("empty.sigma", "# no statements\n");
  auto r = run({"witness", empty, "A ->> B | C", "--max-tuples", "8"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("outcome: counterexample"), std::string::npos);
  EXPECT_EQ(r.out, run({"witness", empty, "A ->> B | C", "--max-tuples", "8"}).out);

  r = run({"witness", data("symmetry.sigma"), "A ->> C | B", "--domain", "2", "--max-tuples",
           "8", "--max-candidates", "1000", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("exhausted"), std::string::npos);

  r = run({"witness", empty, "A ->> B | C,D", "--domain", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("resource"), std::string::npos);

  const auto j = nlohmann::json::parse(
      run({"--json", "witness", empty, "A ->> B | C", "--max-tuples", "8"}).out);
  EXPECT_EQ(j["outcome"], "counterexample");
  EXPECT_EQ(j["counterexample"]["rows"].size(), 2u);
  EXPECT_EQ(run({"witness", empty, "A ->> B | C", "--domain", "0"}).code, 2);
}
