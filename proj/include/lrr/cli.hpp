#pragma once

// Command-line front end. Each subcommand reads matrices from CSV, runs one
// pipeline and writes its outputs plus a result.json record into --out.
//
// result.json (schema_version 1):
//   command, config          echo of the parsed configuration
//   solver                   iterations, converged, residuals, objective, objective_trace
//                            (null for commands that do not solve)
//   metrics                  accuracy, auc, recovery_error, k_hat; each is
//                            {"value": x} or {"value": null, "reason": "..."}
//   labels, outliers         arrays or null
//   artifacts                files written next to result.json
//   timing                   wall-clock seconds; the only field that varies between replays
// replicate adds a "replication" object with the per-lambda runs.

#include "lrr/solver.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace lrr::cli {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitNotConverged = 4;

/// lambda used for motion segmentation data.
inline constexpr double kMotionLambda = 4.0;

/// Name of the environment variable that overrides the default seed.
inline constexpr const char* kSeedEnv = "LRR_SEED";

struct ExperimentConfig {
  std::string command;
  std::filesystem::path input;
  std::filesystem::path dict;   // empty = self-expressive (A = X)
  std::filesystem::path truth;  // segment: labels; detect-outliers: 0/1 mask
  std::filesystem::path v0;     // solve: row-space basis for recovery_error
  std::filesystem::path out = ".";
  bool header = false;
  bool normalize = false;

  std::optional<double> lambda;
  std::string lambda_preset;
  ErrorModel model = ErrorModel::l21;
  SolverOptions solver;

  double tau = 0.08;
  std::optional<double> delta;
  std::optional<int> k;  // nullopt = auto
  std::uint64_t seed = 0;

  // replicate / generate
  std::string figure;
  bool parallel = true;
  int subspaces = 0;
  int dim = 0;
  int ambient = 0;
  int per_subspace = 0;
  bool disjoint = false;

  /// Resolves lambda from --lambda / --lambda-preset and range-checks the
  /// numeric fields. Throws ArgumentError.
  void validate();
  nlohmann::json to_json() const;
};

struct CommandResult {
  nlohmann::json record;
  int exit_code = kExitOk;
};

CommandResult cmd_solve(ExperimentConfig config);
CommandResult cmd_segment(ExperimentConfig config);
CommandResult cmd_detect_outliers(ExperimentConfig config);
CommandResult cmd_replicate(ExperimentConfig config);
CommandResult cmd_generate(ExperimentConfig config);

/// Seed from LRR_SEED when set, else 0. Throws ArgumentError on garbage.
std::uint64_t default_seed();

/// Rescales all entries affinely onto [0, 1]. A constant matrix maps to 0.
DenseMatrix normalize_unit_range(const DenseMatrix& M);

/// Parses argv, dispatches, writes outputs and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lrr::cli
