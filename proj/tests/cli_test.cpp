#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "phull/phull.hpp"

namespace phull {
namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(PHULL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(PHULL_FIXTURE_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("phull_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(CliTest, HullOfTwoSquares) {
  const RunResult r = run("hull " + fixture("square_a.hpoly") + " " + fixture("square_b.hpoly"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(fixture("two_squares_hull.hpoly")));
}

TEST(CliTest, HullWithUniverseIsEmptyOutput) {
  const RunResult r = run("hull " + fixture("empty.hpoly") + " " + fixture("square_b.hpoly"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
}

TEST(CliTest, HullWritesFileAndSvg) {
  const auto out = temp_file("hull.hpoly"), svg = temp_file("hull.svg");
  const RunResult r = run("hull " + fixture("square_a.hpoly") + " " + fixture("square_b.hpoly") + " --verify -o " +
                          out.string() + " --svg " + svg.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(out), slurp(fixture("two_squares_hull.hpoly")));
  EXPECT_NE(slurp(svg).find("<svg"), std::string::npos);
  std::filesystem::remove(out);
  std::filesystem::remove(svg);
}

TEST(CliTest, NoNormalizeAcceptsNormalizedInput) {
  const RunResult r =
      run("hull --no-normalize " + fixture("square_a.hpoly") + " " + fixture("two_squares_hull.hpoly"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(fixture("two_squares_hull.hpoly")));
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run("normalize " + fixture("unsat.hpoly")).code, 3);
  EXPECT_EQ(run("hull " + fixture("unsat.hpoly") + " " + fixture("square_a.hpoly")).code, 3);
  EXPECT_EQ(run("normalize " + fixture("malformed.hpoly")).code, 2);
  EXPECT_EQ(run("hull " + fixture("square_a.hpoly")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("gen --shape blob").code, 2);
}

TEST(CliTest, VerifyDetectsMismatch) {
  const std::string a = fixture("square_a.hpoly"), b = fixture("square_b.hpoly");
  EXPECT_EQ(run("verify " + a + " " + b + " " + fixture("two_squares_hull.hpoly")).code, 0);
  // The first square alone is too small to be the hull.
  EXPECT_EQ(run("verify " + a + " " + b + " " + a).code, 1);
}

TEST(CliTest, Extreme) {
  const RunResult r = run("extreme " + fixture("square_a.hpoly"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "P 0 0\nP 0 1\nP 1 0\nP 1 1\n");
}

TEST(CliTest, NormalizeDropsRedundant) {
  const auto in = temp_file("redundant.hpoly");
  write_text_file(in.string(), "0 1 1\n1 0 1\n-1 0 0\n0 -1 0\n1 1 5\n2 0 4\n");
  const RunResult r = run("normalize " + in.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(fixture("square_a.hpoly")).substr(std::string("# unit square\n").size()));
  std::filesystem::remove(in);
}

TEST(CliTest, GeneratedInstancesVerify) {
  const auto a = temp_file("gen_a.hpoly"), b = temp_file("gen_b.hpoly");
  for (int seed = 0; seed < 14; ++seed) {
    const std::string shape(oracle::shape_name(oracle::kAllShapes[seed % 7]));
    ASSERT_EQ(run("gen --seed " + std::to_string(seed) + " --n 6 --coeff-bound 16 --shape " + shape + " -o " +
                  a.string())
                  .code,
              0);
    ASSERT_EQ(run("gen --seed " + std::to_string(seed + 100) + " --n 4 --shape random -o " + b.string()).code, 0);
    EXPECT_EQ(run("hull --verify " + a.string() + " " + b.string()).code, 0) << shape << " " << seed;
  }
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(CliTest, GenIsDeterministic) {
  const std::string args = "gen --seed 9 --n 8 --coeff-bound 16 --shape polytope";
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run(args).out, emit_hpoly(oracle::gen_instance(9, 8, 16, oracle::Shape::polytope)));
}

TEST(CliTest, PresortedBenchNeverSorts) {
  const RunResult r = run("bench --sizes 64,128 --reps 1 --presorted");
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, line;
  std::getline(lines, header);
  int rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream cols(line);
    std::string n, ms, ratio, sorts;
    cols >> n >> ms >> ratio >> sorts;
    EXPECT_EQ(sorts, "0") << line;
    ++rows;
  }
  EXPECT_EQ(rows, 2);
  const RunResult sorted = run("bench --sizes 64 --reps 2");
  EXPECT_NE(sorted.out.find(" 4\n"), std::string::npos) << sorted.out;
}

}  // namespace
}  // namespace phull
