#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "modlift/matrix_io.hpp"
#include "modlift/sl2.hpp"

namespace {

using namespace modlift;
namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("modlift_cli_" + std::to_string(::getpid()) + "_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(Cli, CheckExamples) {
  Outcome v4 = run({"check", "--q", "5", "--module", "V4"});
  EXPECT_EQ(v4.code, cli::kOk);
  EXPECT_NE(v4.out.find("\nlift\n"), std::string::npos);
  EXPECT_NE(v4.out.find("precision 2 of 2"), std::string::npos);

  Outcome v2 = run({"check", "--q", "9", "--module", "V2"});
  EXPECT_EQ(v2.code, cli::kNegative);
  EXPECT_NE(v2.out.find("no-lift"), std::string::npos);
  EXPECT_NE(v2.out.find("inconsistent"), std::string::npos);

  EXPECT_EQ(run({"check", "--q", "2", "--module", "Lambda"}).code, cli::kOk);
  EXPECT_EQ(run({"check", "--q", "3", "--module", "V2", "--path", "both"}).code, cli::kOk);
  EXPECT_EQ(run({"check", "--q", "5", "--module", "V3", "--s", "4"}).code, cli::kOk);
}

TEST(Cli, InvalidInput) {
  EXPECT_EQ(run({"check", "--q", "6", "--module", "V1"}).code, cli::kInvalid);
  EXPECT_EQ(run({"check", "--q", "11", "--module", "V1"}).code, cli::kInvalid);
  EXPECT_EQ(run({"check", "--q", "5", "--module", "V9"}).code, cli::kInvalid);
  EXPECT_EQ(run({"check", "--q", "5", "--module", "W"}).code, cli::kInvalid);
  EXPECT_EQ(run({"check", "--q", "5", "--module", "V1", "--s", "1"}).code, cli::kInvalid);
  EXPECT_EQ(run({"check", "--q", "5", "--module", "V1", "--path", "sideways"}).code, cli::kInvalid);
  EXPECT_EQ(run({"check", "--module", "V1"}).code, cli::kInvalid);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInvalid);
  EXPECT_EQ(run({}).code, cli::kInvalid);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  const Outcome large = run({"check", "--q", "11", "--module", "V9", "--allow-large"});
  EXPECT_EQ(large.code, cli::kOk);
}

TEST(Cli, UnknownCap) {
  EXPECT_EQ(run({"check", "--q", "7", "--module", "V3", "--path", "full", "--unknown-cap", "10"}).code, cli::kCap);
}

TEST(Cli, Pascal) {
  const Outcome ok = run({"pascal", "--n", "6"});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_NE(ok.out.find("all identities hold"), std::string::npos);
  EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"pascal", "--n", "6", "--lmax", "2"}).code, cli::kOk);
  EXPECT_EQ(run({"pascal", "--n", "6", "--lmax", "5"}).code, cli::kInvalid);
  EXPECT_EQ(run({"pascal", "--n", "6", "--lmax", "0"}).code, cli::kInvalid);
  EXPECT_EQ(run({"pascal", "--n", "2"}).code, cli::kInvalid);
}

TEST(Cli, RepWritesReadableMatrices) {
  const fs::path dir = scratch("rep");
  const Outcome o = run({"rep", "--q", "4", "--module", "V2", "--out", dir.string()});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const GaloisField f(2, 2);
  const GeneratorImages im = generator_images(f, RepresentationSpec::basic(2, 2, 2));
  const MatrixFile alpha = read_matrix_file(dir / "alpha.json");
  EXPECT_EQ(alpha.block, 2u);
  EXPECT_EQ(to_matrix(alpha), im.alpha);
  EXPECT_EQ(to_matrix(read_matrix_file(dir / "beta.json")), im.beta);
  EXPECT_EQ(to_matrix(read_matrix_file(dir / "gamma.json")), im.gamma);
  fs::remove_all(dir);

  const fs::path blocked = scratch("blocked");
  std::ofstream(blocked) << "a file, not a directory";
  EXPECT_EQ(run({"rep", "--q", "4", "--module", "V2", "--out", (blocked / "x").string()}).code, cli::kIo);
  fs::remove(blocked);
}

TEST(Cli, WitnessFiles) {
  const fs::path dir = scratch("witness");
  const Outcome o = run({"check", "--q", "3", "--module", "V1", "--s", "3", "--path", "full", "--emit-witness", dir.string()});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  for (const char* name : {"alpha", "beta", "gamma"}) {
    const MatrixFile file = read_matrix_file(dir / (std::string(name) + ".json"));
    EXPECT_EQ(file.p, 3u);
    EXPECT_EQ(file.s, 3u);
  }
  fs::remove_all(dir);
}

TEST(Cli, TableFormats) {
  const Outcome text = run({"table", "--max-q", "4"});
  EXPECT_EQ(text.code, cli::kOk);
  EXPECT_EQ(text.out.rfind("q   module  decision", 0), 0u);
  const Outcome json = run({"table", "--max-q", "3", "--format", "json", "--expected"});
  EXPECT_NE(json.out.find("\"expected\""), std::string::npos);
  EXPECT_NE(json.out.find("\"decision\": \"lift\""), std::string::npos);
  // Agreement with the known table is exact for q = 2 only.
  EXPECT_EQ(run({"table", "--max-q", "2", "--expected"}).code, cli::kOk);
}

TEST(Cli, WarmCacheGivesIdenticalTable) {
  const fs::path dir = scratch("cache");
  ::setenv("MODLIFT_CACHE_DIR", dir.string().c_str(), 1);
  const Outcome cold = run({"table", "--max-q", "7", "--jobs", "2"});
  const std::size_t files = std::distance(fs::directory_iterator(dir), fs::directory_iterator{});
  const Outcome warm = run({"table", "--max-q", "7", "--jobs", "2"});
  ::unsetenv("MODLIFT_CACHE_DIR");
  const Outcome uncached = run({"table", "--max-q", "7"});
  EXPECT_GT(files, 0u);
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(cold.out, uncached.out);
  fs::remove_all(dir);
}

}  // namespace
