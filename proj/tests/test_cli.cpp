#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "reference_polynomials.hpp"
#include "test_support.hpp"

using namespace tutte;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::mt19937_64 rng(std::random_device{}());
    path_ = fs::temp_directory_path() / ("tutte-test-" + std::to_string(rng()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string str() const { return path_.string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, G2Example) {
  const auto r = run({"tutte", "--type", "G2", "--roots", "[[3,1],[3,2]]", "--no-cache"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(fixtures::xy(r.out), fixtures::xy("x^2 + y^2 + 2x + 2y"));
}

TEST(Cli, VerifyAllIdeals) {
  const auto r = run({"verify", "--type", "A", "--rank", "4", "--all-ideals", "--engines", "crapo,oracle"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("checked 42 ideal(s)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("0 mismatch"), std::string::npos) << r.out;
}

TEST(Cli, Minors) {
  const auto r = run({"minors", "--type", "B", "--rank", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{0, ±1, ±2}\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"tutte", "--type", "G2", "--roots", "[[2,1]]", "--no-cache"}).code, cli::kValidation);
  EXPECT_EQ(run({"tutte", "--type", "Q9", "--no-cache"}).code, cli::kValidation);
  EXPECT_EQ(run({"tutte", "--type", "B3", "--roots", "[[1,1,1]]", "--boxes", "[[1,2]]"}).code, cli::kValidation);
  EXPECT_EQ(run({"tutte", "--type", "A3", "--engine", "magic", "--no-cache"}).code, cli::kValidation);
  EXPECT_EQ(run({"tutte", "--type", "E6", "--engine", "crapo", "--max-subsets", "10", "--no-cache"}).code, cli::kGuard);
  EXPECT_EQ(run({"tutte", "--type", "E6", "--engine", "ffmethod", "--no-cache"}).code, cli::kValidation);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kValidation);
  EXPECT_EQ(run({"roots"}).code, cli::kValidation);
  const auto bad = run({"tutte", "--type", "G2", "--roots", "[[2,1]]", "--no-cache"});
  EXPECT_NE(bad.err.find("(3,1)"), std::string::npos) << bad.err;
}

TEST(Cli, JsonOutputRoundTrips) {
  const auto r = run({"tutte", "--type", "B3", "--boxes", "[[1,0],[2,-3]]", "--format", "json", "--no-cache"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto p = bivariate_from_json(j["tutte"]);
  const auto again = run({"tutte", "--type", "B3", "--boxes", "[[1,0],[2,-3]]", "--no-cache"});
  EXPECT_EQ(p, fixtures::xy(again.out));
  EXPECT_EQ(bivariate_from_json(nlohmann::json::parse(to_json(p).dump())), p);
  const auto round = cli::ideal_from_json({{"type", "B3"}, {"roots", j["ideal"]["roots"]}});
  EXPECT_EQ(cli::ideal_to_json(round)["roots"], j["ideal"]["roots"]);
}

TEST(Cli, LatexOutputIsWellFormed) {
  for (const char* cmd : {"tutte", "coboundary", "charpoly"}) {
    const auto r = run({cmd, "--type", "D4", "--boxes", "[[1,-4],[2,-3]]", "--format", "latex", "--no-cache"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fixtures::valid_latex_math(r.out.substr(0, r.out.size() - 1))) << r.out;
  }
}

TEST(Cli, EnginesAgreeThroughTheCli) {
  std::string ref;
  for (const char* engine : {"ffmethod", "crapo", "oracle"}) {
    const auto r = run({"tutte", "--type", "C3", "--boxes", "[[1,0]]", "--engine", engine, "--no-cache"});
    ASSERT_EQ(r.code, 0) << r.err;
    if (ref.empty()) ref = r.out;
    EXPECT_EQ(r.out, ref) << engine;
  }
}

TEST(Cli, CacheIsDeterministic) {
  TempDir dir;
  const std::vector<std::string> args = {"coboundary", "--type", "A5", "--boxes", "[[1,3],[2,6]]", "--format", "json",
                                         "--cache-dir", dir.str()};
  const auto first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  std::vector<fs::path> entries;
  for (const auto& e : fs::directory_iterator(dir.path())) entries.push_back(e.path());
  ASSERT_EQ(entries.size(), 1u);
  const std::string stored = slurp(entries[0]);
  const auto second = run(args);
  EXPECT_EQ(second.out, first.out);
  EXPECT_EQ(slurp(entries[0]), stored);
  const auto uncached = run({"coboundary", "--type", "A5", "--boxes", "[[1,3],[2,6]]", "--format", "json", "--no-cache"});
  EXPECT_EQ(uncached.out, first.out);
}

TEST(Cli, IdealFileAndOutFile) {
  TempDir dir;
  const auto spec = dir.path() / "ideal.json";
  std::ofstream(spec) << fixtures::kIdealG;
  const auto out = dir.path() / "t.txt";
  const auto r = run({"tutte", "--type", "G2", "--ideal-file", spec.string(), "--out", out.string(), "--no-cache"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(fixtures::xy(slurp(out)), fixtures::xy(fixtures::kTutteG));
  const auto typed_by_file = run({"tutte", "--ideal-file", spec.string(), "--format", "text", "--no-cache"});
  ASSERT_EQ(typed_by_file.code, 0) << typed_by_file.err;
  EXPECT_EQ(fixtures::xy(typed_by_file.out), fixtures::xy(fixtures::kTutteG));
  std::ofstream(spec) << R"({"type": "G2", "roots": [[3,2]], "extra": 1})";
  EXPECT_EQ(run({"tutte", "--type", "G2", "--ideal-file", spec.string(), "--no-cache"}).code, cli::kValidation);
}

TEST(Cli, RootsAndIdealsListings) {
  const auto roots = run({"roots", "--type", "G2", "--format", "json"});
  ASSERT_EQ(roots.code, 0);
  EXPECT_EQ(nlohmann::json::parse(roots.out)["roots"].size(), 6u);
  const auto ideals = run({"ideals", "--type", "B", "--rank", "3", "--format", "json"});
  ASSERT_EQ(ideals.code, 0);
  EXPECT_EQ(nlohmann::json::parse(ideals.out)["count"], 20);
}
