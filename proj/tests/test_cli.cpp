#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "superschur/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = superschur::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, MPrimeResidue) {
  const auto r = run({"mprime", "--lambda", "2", "--hook", "1,1", "--route", "residue"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, MPrimeCharacterAndJson) {
  const auto r = run({"mprime", "--lambda", "2,1", "--hook", "2,1", "--route", "char", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto residue = run({"mprime", "--lambda", "2,1", "--hook", "2,1", "--format", "json"});
  EXPECT_EQ(r.out, residue.out);
  EXPECT_NE(r.out.find("\"m_prime\":"), std::string::npos);
}

TEST(Cli, EmptyPartitionSpellings) {
  EXPECT_EQ(run({"mlambda", "--lambda", "", "--hook", "1,1"}).out, "1\n");
  EXPECT_EQ(run({"mlambda", "--lambda", "∅", "--hook", "1,1"}).out, "1\n");
}

TEST(Cli, MBar) {
  EXPECT_EQ(run({"mbar", "--lambda", "1", "--hook", "1,1"}).out, "2\n");
  EXPECT_EQ(run({"mbar", "--lambda", "1", "--hook", "1,0", "--route", "char"}).out, "1\n");
}

TEST(Cli, SeriesJson) {
  const auto r = run({"series", "--mode", "prime", "--hook", "1,1", "--n", "1", "--m", "0", "--degree", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[0,1,2,3]\n");
  const auto odd = run({"series", "--mode", "prime", "--hook", "1,1", "--n", "0", "--m", "1", "--degree", "5", "--format", "json"});
  EXPECT_EQ(odd.out, "[0,1,0,1,0,1]\n");
}

TEST(Cli, SeriesCsvHasHeader) {
  const auto r = run({"series", "--mode", "plain", "--hook", "1,1", "--n", "1", "--m", "1", "--degree", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "t1,u1,coeff");
}

TEST(Cli, OutputIndependentOfJobs) {
  const std::vector<std::string> base{"series", "--mode", "barprime", "--hook", "2,1", "--n", "2", "--degree", "4"};
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
  EXPECT_EQ(run(base).out, run(with_jobs).out);
}

TEST(Cli, VerifyBudzikPasses) {
  const auto r = run({"verify", "budzik", "--max-size", "4", "--hooks", "1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"pass\":true"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyLemmasAndQIdentities) {
  EXPECT_EQ(run({"verify", "lemmas", "--max-size", "3", "--hooks", "1,1"}).code, 0);
  EXPECT_EQ(run({"verify", "qidentities", "--degree", "8", "--hooks", "1,1;2,1"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"mprime", "--hook", "1,1"}).code, 2);
  EXPECT_EQ(run({"mprime", "--lambda", "1,2"}).code, 2);
  EXPECT_EQ(run({"mprime", "--lambda", "1", "--hook", "x"}).code, 2);
  EXPECT_EQ(run({"series", "--mode", "weird"}).code, 2);
  EXPECT_EQ(run({"verify", "nothing"}).code, 2);
  EXPECT_EQ(run({"series", "--n", "0", "--m", "0"}).code, 2);
}

TEST(Cli, CacheFileIsWrittenAndReused) {
  const auto path = (std::filesystem::temp_directory_path() / "superschur_cli_cache.tsv").string();
  std::remove(path.c_str());
  EXPECT_EQ(run({"--cache", path, "mlambda", "--lambda", "2,1", "--hook", "2,1"}).code, 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_TRUE(first.rfind("chi\t", 0) == 0 || first.rfind("kron\t", 0) == 0) << first;
  EXPECT_EQ(run({"--cache", path, "mlambda", "--lambda", "2,1", "--hook", "2,1"}).out,
            run({"mlambda", "--lambda", "2,1", "--hook", "2,1"}).out);
  std::remove(path.c_str());
}
