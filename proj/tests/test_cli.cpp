#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrr/cli.hpp"
#include "lrr/error.hpp"
#include "lrr/io.hpp"
#include "oracles.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace lrr;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("lrr_cli_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lrr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json load(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Three independent rank-3 subspaces in R^30, 10 samples each, written as CSV.
void write_clean(const TempDir& dir, std::uint64_t seed = 40) {
  REQUIRE(run({"generate", "--subspaces", "3", "--dim", "3", "--ambient", "30", "--per", "10",
               "--seed", std::to_string(seed), "--out", dir.path.string()})
              .code == 0);
}

}  // namespace

TEST_CASE("csv round trip is bit-identical") {
  TempDir dir("roundtrip");
  std::mt19937_64 rng(41);
  DenseMatrix M = oracle::gaussian(7, 5, rng);
  M(0, 0) = 1e-310;  // subnormal
  M(1, 1) = -0.0;
  M(2, 2) = 1.0 / 3.0;
  M(3, 3) = 6.02214076e23;
  io::write_csv(dir / "m.csv", M);
  const DenseMatrix back = io::read_csv(dir / "m.csv");
  REQUIRE(back.rows() == 7);
  REQUIRE(back.cols() == 5);
  for (Eigen::Index i = 0; i < 7; ++i)
    for (Eigen::Index j = 0; j < 5; ++j)
      CHECK(std::memcmp(&back(i, j), &M(i, j), sizeof(double)) == 0);

  io::write_csv(dir / "h.csv", M, {"a", "b", "c", "d", "e"});
  CHECK(io::read_csv(dir / "h.csv", true) == M);
  CHECK_THROWS_AS(io::read_csv(dir / "h.csv", false), ArgumentError);
}

TEST_CASE("csv parsing") {
  CHECK(io::parse_csv("1,2\n3,4\n") == (DenseMatrix(2, 2) << 1, 2, 3, 4).finished());
  CHECK(io::parse_csv("\xEF\xBB\xBFx,y\r\n1, +2\r\n\r\n3,4e0\r\n", true) ==
        (DenseMatrix(2, 2) << 1, 2, 3, 4).finished());
  CHECK_THROWS_AS(io::parse_csv("1,2\n3\n"), ArgumentError);
  CHECK_THROWS_AS(io::parse_csv("1,abc\n"), ArgumentError);
  CHECK_THROWS_AS(io::parse_csv(""), ArgumentError);
  try {
    io::parse_csv("1,2\n3,4\n5,x\n");
    FAIL("expected an error");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_csv("/nonexistent/x.csv"), ArgumentError);
}

TEST_CASE("labels io") {
  TempDir dir("labels");
  io::write_labels(dir / "l.csv", {2, 0, -1, 1});
  CHECK(io::read_labels(dir / "l.csv") == std::vector<int>{2, 0, -1, 1});
  io::write_atomic(dir / "row.csv", "3,1,2\n");
  CHECK(io::read_labels(dir / "row.csv") == std::vector<int>{3, 1, 2});
  io::write_atomic(dir / "bad.csv", "1,2\n3,4\n");
  CHECK_THROWS_AS(io::read_labels(dir / "bad.csv"), ArgumentError);
  io::write_atomic(dir / "frac.csv", "1.5\n");
  CHECK_THROWS_AS(io::read_labels(dir / "frac.csv"), ArgumentError);
}

TEST_CASE("normalize_unit_range") {
  const DenseMatrix M = (DenseMatrix(2, 2) << -1, 1, 3, 0).finished();
  const DenseMatrix N = cli::normalize_unit_range(M);
  CHECK(N.minCoeff() == 0.0);
  CHECK(N.maxCoeff() == 1.0);
  CHECK(N(1, 1) == doctest::Approx(0.25));
  CHECK(cli::normalize_unit_range(DenseMatrix::Constant(2, 3, 4.0)).isZero(0.0));
}

TEST_CASE("solve writes Z, E and a result record") {
  TempDir dir("solve");
  write_clean(dir);
  const auto r = run({"solve", "--input", dir / "X.csv", "--lambda", "1000", "--v0", dir / "V0.csv",
                      "--out", dir / "s1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("result.json") != std::string::npos);
  const DenseMatrix X = io::read_csv(dir / "X.csv");
  const DenseMatrix Z = io::read_csv(dir / "s1/Z.csv");
  const DenseMatrix E = io::read_csv(dir / "s1/E.csv");
  CHECK(Z.rows() == 30);
  CHECK(Z.cols() == 30);
  CHECK((X - X * Z - E).norm() <= 1e-6 * X.norm());

  const json rec = load(dir / "s1/result.json");
  CHECK(rec["schema_version"] == cli::kSchemaVersion);
  CHECK(rec["command"] == "solve");
  CHECK(rec["config"]["lambda"] == 1000.0);
  CHECK(rec["solver"]["converged"] == true);
  CHECK(rec["solver"]["iterations"].get<int>() > 0);
  CHECK(rec["metrics"]["recovery_error"]["value"].get<double>() < 1e-3);
  CHECK(rec["metrics"]["accuracy"]["value"].is_null());
  CHECK(rec["metrics"]["accuracy"]["reason"].is_string());
  CHECK(rec["timing"]["total_seconds"].get<double>() >= 0.0);

  // replay: everything but timing is identical
  REQUIRE(run({"solve", "--input", dir / "X.csv", "--lambda", "1000", "--v0", dir / "V0.csv",
               "--out", dir / "s2"})
              .code == 0);
  json a = rec, b = load(dir / "s2/result.json");
  a.erase("timing");
  b.erase("timing");
  a["config"].erase("out");
  b["config"].erase("out");
  CHECK(a == b);
  CHECK(slurp(dir / "s1/Z.csv") == slurp(dir / "s2/Z.csv"));
}

TEST_CASE("solve against a separate dictionary") {
  TempDir dir("dict");
  write_clean(dir);
  const DenseMatrix X = io::read_csv(dir / "X.csv");
  io::write_csv(dir / "A.csv", X.leftCols(20));
  const auto r = run({"solve", "--input", dir / "X.csv", "--dict", dir / "A.csv", "--lambda", "100",
                      "--out", dir / "o"});
  REQUIRE(r.code == 0);
  CHECK(io::read_csv(dir / "o/Z.csv").rows() == 20);

  io::write_csv(dir / "bad.csv", X.topRows(10));
  const auto bad = run({"solve", "--input", dir / "X.csv", "--dict", dir / "bad.csv", "--lambda",
                        "1", "--out", dir / "b"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("segment with truth, automatic k and no truth") {
  TempDir dir("segment");
  write_clean(dir);
  const auto r = run({"segment", "--input", dir / "X.csv", "--lambda", "1000", "--k", "3",
                      "--truth", dir / "labels.csv", "--out", dir / "a"});
  REQUIRE(r.code == 0);
  const json rec = load(dir / "a/result.json");
  CHECK(rec["metrics"]["accuracy"]["value"] == 1.0);
  CHECK(rec["labels"].size() == 30);
  CHECK(io::read_labels(dir / "a/labels.csv").size() == 30);

  REQUIRE(run({"segment", "--input", dir / "X.csv", "--lambda", "1000", "--k", "auto", "--out",
               dir / "b"})
              .code == 0);
  const json autok = load(dir / "b/result.json");
  CHECK(autok["metrics"]["k_hat"]["value"] == 3);
  CHECK(autok["metrics"]["accuracy"]["value"].is_null());
  CHECK(autok["metrics"]["accuracy"]["reason"] == "no ground truth");
}

TEST_CASE("detect-outliers") {
  TempDir dir("detect");
  write_clean(dir);
  const auto hi = run({"detect-outliers", "--input", dir / "X.csv", "--lambda", "0.5", "--delta",
                       "1e6", "--out", dir / "a"});
  REQUIRE(hi.code == 0);
  const json rec = load(dir / "a/result.json");
  CHECK(rec["outliers"].empty());
  CHECK(rec["metrics"]["auc"]["value"].is_null());
  CHECK(rec["metrics"]["auc"]["reason"].is_string());
  CHECK(run({"detect-outliers", "--input", dir / "X.csv", "--lambda", "0.5", "--out", dir / "b"})
            .code == cli::kExitUsage);
}

TEST_CASE("detect-outliers on the outlier recipe reaches AUC 1") {
  TempDir dir("fig4");
  REQUIRE(run({"generate", "--figure", "fig4", "--seed", "3", "--out", dir.path.string()}).code == 0);
  const auto r = run({"detect-outliers", "--input", dir / "X.csv", "--lambda", "0.25", "--delta",
                      "0.5", "--truth", dir / "planted.csv", "--out", dir / "o"});
  REQUIRE(r.code == 0);
  const json rec = load(dir / "o/result.json");
  CHECK(rec["metrics"]["auc"]["value"].get<double>() >= 0.99);
  CHECK(rec["outliers"].size() == 50);
  const DenseMatrix roc = io::read_csv(dir / "o/roc.csv", true);
  CHECK(roc.cols() == 3);
  CHECK(roc.col(1).minCoeff() >= 0.0);
  CHECK(roc.col(2).maxCoeff() <= 1.0);
}

TEST_CASE("usage and runtime exit codes") {
  TempDir dir("codes");
  write_clean(dir);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--input", dir / "X.csv", "--out", dir / "o"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--input", dir / "missing.csv", "--lambda", "1", "--out", dir / "o"}).code ==
        cli::kExitUsage);
  CHECK(run({"solve", "--input", dir / "X.csv", "--lambda", "-1", "--out", dir / "o"}).code ==
        cli::kExitUsage);
  CHECK(run({"segment", "--input", dir / "X.csv", "--lambda", "1", "--tau", "1.5", "--out",
             dir / "o"})
            .code == cli::kExitUsage);
  CHECK(run({"replicate", "fig9", "--out", dir / "o"}).code == cli::kExitUsage);

  const auto capped = run({"solve", "--input", dir / "X.csv", "--lambda", "1", "--max-iters", "3",
                           "--out", dir / "c"});
  CHECK(capped.code == cli::kExitNotConverged);
  CHECK(load(dir / "c/result.json")["solver"]["converged"] == false);

  const auto preset = run({"solve", "--input", dir / "X.csv", "--lambda-preset", "motion", "--out",
                           dir / "p"});
  CHECK(preset.code == 0);
  CHECK(load(dir / "p/result.json")["config"]["lambda"] == cli::kMotionLambda);
}

TEST_CASE("LRR_SEED sets the default seed") {
  ::unsetenv(cli::kSeedEnv);
  CHECK(cli::default_seed() == 0);
  ::setenv(cli::kSeedEnv, "17", 1);
  CHECK(cli::default_seed() == 17);

  TempDir dir("seed");
  REQUIRE(run({"generate", "--subspaces", "2", "--dim", "2", "--ambient", "10", "--per", "4",
               "--out", dir / "env"})
              .code == 0);
  REQUIRE(run({"generate", "--subspaces", "2", "--dim", "2", "--ambient", "10", "--per", "4",
               "--seed", "17", "--out", dir / "flag"})
              .code == 0);
  CHECK(slurp(dir / "env/X.csv") == slurp(dir / "flag/X.csv"));

  ::setenv(cli::kSeedEnv, "banana", 1);
  CHECK_THROWS_AS(cli::default_seed(), ArgumentError);
  CHECK(run({"generate", "--subspaces", "2", "--dim", "2", "--ambient", "10", "--per", "4", "--out",
             dir / "bad"})
            .code == cli::kExitUsage);
  ::unsetenv(cli::kSeedEnv);
}
