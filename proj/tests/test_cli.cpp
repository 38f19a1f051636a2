#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "wpec/protocol.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(WPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("wpec_cli_test_" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir / name;
}

std::string write_bundle(const std::string& name, const wpec::OutcomeBundle& b) {
  const fs::path p = scratch(name);
  std::ofstream(p) << b.str();
  return p.string();
}

}  // namespace

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(cli("--help").code, 0);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("--max-faults 4 verify-appendix-a").code, 2);
  EXPECT_EQ(cli("--code hamming verify-claims").code, 2);
  EXPECT_EQ(cli("--workers 0 gen-table").code, 2);
  EXPECT_EQ(cli("decode /nonexistent/bundle").code, 2);
}

TEST(Cli, ReproduceTable1) {
  const CliRun r = cli("reproduce-table1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("IIIPZII 7 001 0000000 0001100\n"), std::string::npos);
  EXPECT_NE(r.out.find("PIZZZII 1,3,5 000 1000000 1011100\n"), std::string::npos);
  EXPECT_NE(r.out.find("IIIIIII - 000 0000000 0000000\n"), std::string::npos);
  const CliRun j = cli("--format json-lines reproduce-table1");
  EXPECT_EQ(std::count(j.out.begin(), j.out.end(), '\n'), 13);
}

TEST(Cli, VerifyClaims) {
  const CliRun r = cli("--code steane verify-claims");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all claims hold"), std::string::npos);
}

TEST(Cli, GenTableSteane) {
  const CliRun r = cli("--code steane gen-table");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# wpec-correction-table v1", 0), 0u);
}

TEST(Cli, DecodeBundles) {
  EXPECT_EQ(cli("--max-faults 1 decode " + write_bundle("zero", wpec::OutcomeBundle{})).out,
            std::string(49, 'I') + "\n");

  wpec::OutcomeBundle b;
  b.s_x.word = uint64_t{1} << 6;  // g_1 on block 3
  b.tau_x.set(2);
  b.s2_x = wpec::packed::second_level_from_parity(0b0000100);
  const CliRun r = cli("--max-faults 1 decode " + write_bundle("q15", b));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, std::string(14, 'I') + "Z" + std::string(34, 'I') + "\n");

  const fs::path bad = scratch("bad");
  std::ofstream(bad) << "s_x 0101\n";
  EXPECT_EQ(cli("decode " + bad.string()).code, 2);
}

TEST(Cli, DecodeFallbackAddsBlockLogical) {
  // One fault cannot touch all seven blocks.
  wpec::OutcomeBundle b;
  for (int blk = 0; blk < 7; ++blk) {
    b.s_x.word |= uint64_t{1} << (3 * blk);
    b.tau_x.set(blk);
  }
  b.s2_x = 1;
  const CliRun r = cli("--max-faults 1 --format json-lines decode " + write_bundle("fallback", b));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"fallback_z\":true"), std::string::npos);
}

TEST(Cli, AppendixANegativeControl) {
  const CliRun r = cli("--ordering normal --no-flags --max-faults 3 verify-appendix-a");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("claim2 violated"), std::string::npos);
}

TEST(Cli, AppendixB) {
  const CliRun r = cli("--max-faults 3 verify-appendix-b");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("6 marked, 0 harmful"), std::string::npos);
}

TEST(Cli, OutputIndependentOfWorkers) {
  const fs::path a = scratch("w1.txt");
  const fs::path b = scratch("w3.txt");
  EXPECT_EQ(cli("--max-faults 2 --workers 1 --out " + a.string() + " gen-table").code, 0);
  EXPECT_EQ(cli("--max-faults 2 --workers 3 --out " + b.string() + " gen-table").code, 0);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string x = slurp(a);
  EXPECT_FALSE(x.empty());
  EXPECT_EQ(x, slurp(b));
  const std::string env = std::string("WPEC_WORKERS=2 ") + WPEC_CLI_PATH;
  EXPECT_EQ(std::system((env + " --max-faults 1 verify-appendix-b >/dev/null").c_str()), 0);
}
