#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqrim/qh.hpp"
#include "eqrim_cli/cli.hpp"

namespace eqrim {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "eqrim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

TPoly t(int i) { return TPoly::variable(i); }

TEST(Cli, MultGolden) {
  auto r = run({"mult", "--k", "2", "--n", "4", "--lhs", "2", "--rhs", "2"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(trimmed(r.out), "s[2,2] + (t4 - t3)*s[2,1] + (t4^2 - t3*t4 - t2*t4 + t2*t3)*s[2]");
  EXPECT_EQ(trimmed(run({"mult", "--k", "2", "--n", "4", "2", "2"}).out), trimmed(r.out));
}

TEST(Cli, MultUnitAndPieri) {
  EXPECT_EQ(trimmed(run({"mult", "--k", "2", "--n", "4", "--lhs", "0", "--rhs", "2,1"}).out), "s[2,1]");
  QClass expected(2, 4);
  expected.add(Partition{2, 2}, 0, t(3) + t(4) - t(1) - t(2));
  expected.add(Partition{1}, 1, 1);
  EXPECT_EQ(trimmed(run({"mult", "--k", "2", "--n", "4", "--lhs", "1", "--rhs", "2,2"}).out), to_string(expected));
}

TEST(Cli, MultDiagnosticsShowCancellation) {
  auto r = run({"mult", "--k", "2", "--n", "4", "2", "2", "--diagnostics"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("(4): (1) -> -q*s[]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(3,1): (1) -> q*s[]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(3): (t5 + t4 - t3 - t2) -> 0"), std::string::npos) << r.out;
}

TEST(Cli, MultJsonRoundTrips) {
  auto r = run({"mult", "--k", "2", "--n", "5", "--lhs", "2,1", "--rhs", "3,1", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(qclass_from_json(nlohmann::json::parse(r.out)), quantum_mult(Partition{2, 1}, Partition{3, 1}, 2, 5));
  auto latex = run({"mult", "--k", "2", "--n", "4", "2", "2", "--format", "latex"});
  EXPECT_EQ(latex.code, cli::kOk);
  EXPECT_NE(latex.out.find("\\sigma"), std::string::npos) << latex.out;
}

TEST(Cli, Classical) {
  auto r = run({"classical", "--k", "2", "--N", "4", "2", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(trimmed(r.out), "s[2,2] + (t4 - t3)*s[2,1] + (t4^2 - t3*t4 - t2*t4 + t2*t3)*s[2]");
  auto j = run({"classical", "--k", "2", "--N", "6", "2", "2", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out).get<ClassicalExpansion>(), classical_eqlr(Partition{2}, Partition{2}, 2, 6));
}

TEST(Cli, Core) {
  auto a = run({"core", "--n", "4", "--k", "2", "3,1"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_NE(a.out.find("core: ()\nd: 1\nheights: 2\nsign: +1"), std::string::npos) << a.out;
  auto b = run({"core", "--n", "4", "--k", "2", "4"});
  EXPECT_NE(b.out.find("sign: -1"), std::string::npos);
  auto c = run({"core", "--n", "3", "--k", "2", "2,1"});
  EXPECT_NE(c.out.find("core: ()\nd: 1"), std::string::npos);
  EXPECT_NE(c.out.find("agrees"), std::string::npos);
}

TEST(Cli, Schur) {
  EXPECT_EQ(trimmed(run({"schur", "--k", "2", "1"}).out), "x1 + x2 - t2 - t1");
  EXPECT_EQ(trimmed(run({"schur", "--k", "2", "0"}).out), "1");
  EXPECT_EQ(run({"schur", "--k", "2", "--jt", "2,1"}).out, run({"schur", "--k", "2", "2,1"}).out);
}

TEST(Cli, Pieri) {
  EXPECT_EQ(run({"pieri", "--k", "2", "--n", "4", "2,2"}).out,
            run({"mult", "--k", "2", "--n", "4", "1", "2,2"}).out);
}

TEST(Cli, VerifySuitesPass) {
  auto r = run({"verify", "pieri", "--k", "2", "--n", "5"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_EQ(r.out.rfind("PASS pieri", 0), 0u) << r.out;
  auto all = run({"verify", "all", "--k", "2", "--n", "4"});
  EXPECT_EQ(all.code, cli::kOk) << all.out;
  auto j = run({"verify", "assoc", "--k", "2", "--n", "4", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)[0]["passed"], true);
}

TEST(Cli, CorruptedCacheMakesVerificationFail) {
  auto path = std::filesystem::temp_directory_path() / "eqrim_cli_corrupt_cache.jsonl";
  std::filesystem::remove(path);
  auto wrong = lifted_product(Partition{1}, Partition{1}, 2, 4);
  wrong.terms[Partition{1}] = t(3) - t(1);
  {
    std::ofstream out(path);
    out << ExpansionCache::encode_line(Partition{1}, Partition{1}, wrong) << "\n";
  }
  auto r = run({"verify", "recursion", "--k", "2", "--n", "4", "--cache", path.string()});
  EXPECT_EQ(r.code, cli::kVerificationFailed) << r.out << r.err;
  EXPECT_NE(r.out.find("FAIL recursion"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lambda="), std::string::npos) << r.out;
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"mult", "--k", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"mult", "--k", "2", "--n", "4", "--lhs", "x", "--rhs", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"mult", "--k", "2", "--n", "4", "--lhs", "9", "--rhs", "2"}).code, cli::kOutsideBox);
  EXPECT_EQ(run({"verify", "nope", "--k", "2", "--n", "4"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

}  // namespace
}  // namespace eqrim
