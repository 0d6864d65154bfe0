#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hornlab/scanner.hpp"
#include "hornlab_cli/cli.hpp"
#include "lp_fixtures.hpp"
#include "test_util.hpp"

using namespace hornlab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hornlab_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, QlrOfKnownIndex) {
  const auto r = run_cli({"qlr", testutil::data_path("t0.idx")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "1\n");
  const auto inline_text = run_cli({"qlr", "6 9 ; 6,6,3,3,0,0 ; 6,6,3,3,0,0 ; 6,6,6,3,0,0 ; 1"});
  EXPECT_EQ(inline_text.out, "1\n");
}

TEST_F(CliTest, QlrDegreeInconsistentIsZero) {
  const auto r = run_cli({"qlr", "6 9 ; 6,6,3,3,0,0 ; 6,6,3,3,0,0 ; 6,6,6,3,0,0 ; 2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "0\n");
}

TEST_F(CliTest, ClassicalAgreesAtDegreeZero) {
  std::mt19937_64 rng(testutil::seed());
  for (int i = 0; i < 20; ++i) {
    auto t = testutil::random_product_index(rng, 5);
    if (t.d != 0) continue;
    const auto q = run_cli({"qlr", to_text(t)});
    const auto c = run_cli({"qlr", "--classical", to_text(t)});
    EXPECT_EQ(q.out, c.out) << to_text(t);
  }
}

TEST_F(CliTest, OrbitListsEveryElement) {
  const auto r = run_cli({"orbit", testutil::data_path("t0.idx")});
  EXPECT_EQ(r.code, cli::kOk);
  const auto lines = lines_of(r.out);
  EXPECT_EQ(lines.size(), 225u);
  for (const auto& line : lines) EXPECT_FALSE(line.ends_with(" d=0")) << line;
  EXPECT_NE(r.err.find("75 distinct"), std::string::npos);
}

TEST_F(CliTest, OrbitToFileMatchesStdout) {
  const auto a = run_cli({"orbit", "--group", "Gtilde", "2 2 ; 1,0 ; 1,0 ; 2,0 ; 0"});
  const auto b = run_cli({"orbit", "--group", "Gtilde", "2 2 ; 1,0 ; 1,0 ; 2,0 ; 0", "-o", path("orbit.txt")});
  EXPECT_EQ(b.out, "");
  EXPECT_EQ(slurp(path("orbit.txt")), a.out);
  EXPECT_EQ(lines_of(a.out).size(), 12u * 16u);
}

TEST_F(CliTest, ScanSmallIsClean) {
  const auto r = run_cli({"scan", "-n", "4"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("HORNLAB-SCAN v1 n=4", 0), 0u);
  EXPECT_NE(r.out.find("exceptional=0"), std::string::npos);
  std::istringstream in(r.out);
  EXPECT_TRUE(read_scan_report(in).exceptional().empty());
}

TEST_F(CliTest, ScanResumeGivesSameReport) {
  const auto first = run_cli({"scan", "-n", "5", "--resume", path("log")});
  const auto second = run_cli({"scan", "-n", "5", "--resume", path("log")});
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(second.err.find("replayed"), std::string::npos);
}

TEST_F(CliTest, WitnessPointViolatesDelta) {
  const auto r = run_cli({"member", testutil::data_path("p.pt"), "--mode", "delta", "-n", "15"});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_NE(r.out.find("verdict violated"), std::string::npos);
  EXPECT_NE(r.out.find("-1/17"), std::string::npos);
}

TEST_F(CliTest, OriginIsOnBoundary) {
  const auto pt = write("origin.pt", write_point(origin_triple(3)));
  const auto pruned = run_cli({"member", pt, "--mode", "delta"});
  const auto streamed = run_cli({"member", pt, "--mode", "delta", "--stream"});
  EXPECT_EQ(pruned.code, cli::kOk);
  EXPECT_NE(pruned.out.find("verdict boundary"), std::string::npos);
  EXPECT_EQ(lines_of(pruned.out).front(), lines_of(streamed.out).front());
}

TEST_F(CliTest, MemberRejectsWrongN) {
  const auto pt = write("origin.pt", write_point(origin_triple(3)));
  EXPECT_EQ(run_cli({"member", pt, "-n", "4"}).code, cli::kUsage);
}

TEST_F(CliTest, LpExitCodesFollowStatus) {
  for (const auto& f : testutil::lp_fixtures()) {
    const auto file = std::string(HORNLAB_LP_FIXTURES) + "/" + f.name;
    const auto r = run_cli({"lp", file});
    const int expected = f.expected == LPStatus::Optimal    ? cli::kOk
                         : f.expected == LPStatus::Infeasible ? cli::kNegative
                                                               : cli::kUnbounded;
    EXPECT_EQ(r.code, expected) << f.name;
    std::istringstream in(r.out);
    const auto outcome = read_outcome(in);
    EXPECT_TRUE(check_certificate(f.problem, outcome)) << f.name;
    const auto again = run_cli({"lp", file, "-o", path("out.lp")});
    EXPECT_EQ(slurp(path("out.lp")), r.out) << f.name;
  }
}

TEST_F(CliTest, GenResumeReassemblesFullSystem) {
  const auto full = run_cli({"gen", "-n", "3", "--mode", "deltak", "-o", path("full.cs")});
  ASSERT_EQ(full.code, cli::kOk);
  const std::string whole = slurp(path("full.cs"));

  auto part = run_cli({"gen", "-n", "3", "--mode", "deltak", "--max-rows", "17", "-o", path("part.cs")});
  int rounds = 0;
  while (part.code == cli::kPartial) {
    const auto pos = part.err.find("resume token: ");
    ASSERT_NE(pos, std::string::npos);
    std::string token = part.err.substr(pos + 14);
    token = token.substr(0, token.find('\n'));
    part = run_cli({"gen", "-n", "3", "--mode", "deltak", "--max-rows", "17", "--resume", token, "-o", path("part.cs")});
    ++rounds;
  }
  EXPECT_EQ(part.code, cli::kOk);
  EXPECT_GT(rounds, 1);
  EXPECT_EQ(slurp(path("part.cs")), whole);
  const auto parsed = read_system_file(path("full.cs"));
  EXPECT_EQ(parsed.n, 3);
  EXPECT_EQ(parsed.mode, "deltak");
}

TEST_F(CliTest, GenDedupShrinks) {
  run_cli({"gen", "-n", "3", "--mode", "deltak", "-o", path("full.cs")});
  run_cli({"gen", "-n", "3", "--mode", "deltak", "--dedup", "-o", path("dedup.cs")});
  const auto full = read_system_file(path("full.cs"));
  const auto dedup = read_system_file(path("dedup.cs"));
  EXPECT_LT(dedup.system.rows.size(), full.system.rows.size());
  EXPECT_GT(dedup.system.rows.size(), 0u);
}

TEST_F(CliTest, TightAtOriginIsDegreeZero) {
  const auto pt = write("origin.pt", write_point(origin_triple(4)));
  const auto r = run_cli({"tight", "--anchor", pt});
  EXPECT_EQ(r.code, cli::kOk);
  for (const auto& line : lines_of(r.out)) EXPECT_TRUE(line.ends_with("; 0")) << line;
  EXPECT_FALSE(r.out.empty());
}

TEST_F(CliTest, SeparateWritesTranscript) {
  const auto idx = write("rows.idx", "# one row\n2 1 ; 1,0 ; 1,0 ; 1,1 ; 0\n");
  const auto r = run_cli({"separate", "--objective", "2 1 ; 1,0 ; 1,0 ; 1,1 ; 0", "--indices", idx});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("HORNLAB-SEP v1 n=3", 0), 0u);
  EXPECT_NE(r.out.find("value 0"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"gen", "-n", "3", "--mode", "sideways"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"qlr", "not an index"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"lp", path("missing.cs")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"scan", "-n", "1"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, OutputsAreDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"orbit", testutil::data_path("t0.idx")},
      {"scan", "-n", "5", "--both"},
      {"gen", "-n", "3", "--mode", "delta"},
  };
  for (const auto& cmd : commands) EXPECT_EQ(run_cli(cmd).out, run_cli(cmd).out);
}
