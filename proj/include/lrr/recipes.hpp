#pragma once

// Seed-pinned replications of the synthetic experiments (Figs. 3-6 of the
// original LRR study). Every recipe normalizes the columns of X to unit l2
// norm before solving, which puts the data on the scale the default solver
// tolerances assume.

#include "lrr/cluster.hpp"
#include "lrr/solver.hpp"
#include "lrr/synth.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lrr::recipes {

enum class Figure { fig3, fig4, fig5a, fig5b, fig6 };

std::string_view to_string(Figure f);
Figure parse_figure(std::string_view name);

// Dataset builders.

/// 11 disjoint rank-20 subspaces in R^200, 20 clean samples each.
synth::SyntheticDataset fig3_dataset(std::uint64_t seed);

/// 5 disjoint rank-4 subspaces in R^200, 40 samples each, plus 50 Gaussian
/// outliers with 3x the average sample magnitude.
synth::SyntheticDataset fig4_dataset(std::uint64_t seed);

/// The fig4 outlier setup with 10% of the samples corrupted at magnitude_scale.
synth::SyntheticDataset fig5_dataset(std::uint64_t seed, double magnitude_scale);

struct Fig6Params {
  int subspaces = 10;
  int dim = 4;
  int ambient = 2000;
  int per_subspace = 40;
  double corrupted_fraction = 0.1;
  double corruption_scale = 2.0;
  int outliers = 100;
  double outlier_scale = 3.0;
  double target_error_ratio = 0.63;
};

struct Fig6Dataset {
  synth::SyntheticDataset data;
  double noise_level = 0.0;  // calibrated so the error ratio hits the target
};

/// 10 disjoint rank-4 subspaces in R^2000; 10% gross corruptions, dense noise
/// on the rest, 100 outliers. The noise level is found by bisection so that
/// ||E0||_F / ||X0||_F lands on the target after column normalization.
Fig6Dataset fig6_dataset(std::uint64_t seed, const Fig6Params& params = {});

/// Noise level that brings the normalized error ratio of add_noise(base, level, seed)
/// to target, by bisection on [0, hi].
double calibrate_noise_level(const synth::SyntheticDataset& base, std::uint64_t noise_seed,
                             double target, double tol = 1e-4);

// Replication runs.

/// One solve at one lambda and what it recovered.
struct LambdaRun {
  double lambda = 0.0;
  LrrSolution solution;
  double recovery_error = 0.0;
  std::vector<Eigen::Index> detected;  // columns with ||E*_:,i|| > delta
  double delta = 0.0;
  bool support_exact = false;  // detected == planted (outliers + corruptions)
  bool row_space_exact = false;
  std::optional<double> auc;  // E* column norms vs planted columns
  double distance_bound_gap = 0.0;  // (min(d,n) + r0) - ||Z* - V0 V0^T||_F
};

struct Replication {
  Figure figure = Figure::fig4;
  std::uint64_t seed = 0;
  synth::SyntheticDataset data;
  std::vector<LambdaRun> runs;
  std::optional<SegmentationResult> segmentation;
  std::optional<double> accuracy;
  std::optional<double> noise_level;
  std::vector<double> corrupted_affinity_degrees;  // fig5: per corrupted sample
};

inline constexpr double kExactRecoveryTol = 1e-3;
/// Clean but dependent subspaces: the closed form Z* = VV^T weights every
/// direction equally and loses the block structure; a finite lambda keeps
/// only the dominant directions.
inline constexpr double kFig3Lambda = 1.0;
inline const std::vector<double> kFig4LambdaGrid{0.16, 0.20, 0.25, 0.30, 0.34};
inline const std::vector<double> kFig5LambdaGrid{0.1, 0.14, 0.18, 0.22, 0.26, 0.3};
inline constexpr double kFig6Lambda = 0.3;

/// Outlier threshold used by the recipes: half of a unit-norm sample.
inline constexpr double kRecipeDelta = 0.5;

/// Planted error columns: outliers plus grossly corrupted samples, sorted.
std::vector<Eigen::Index> planted_columns(const synth::SyntheticDataset& ds);

LambdaRun run_lambda(const synth::SyntheticDataset& ds, double lambda,
                     const SolverOptions& base = {});

/// Spectral segmentation of the authentic samples; labels -1 are ignored.
double authentic_accuracy(const std::vector<int>& predicted, const std::vector<int>& truth);

/// Number of entries of |U* U*^T| row i above rel_tol * max entry, per sample.
std::vector<double> affinity_degrees(const DenseMatrix& Z_star,
                                     const std::vector<Eigen::Index>& samples,
                                     double rel_tol = 1e-3);

/// Builds the dataset and runs the figure's pipeline. Lambda grid points are
/// solved concurrently when `parallel` is set.
Replication replicate(Figure figure, std::uint64_t seed, bool parallel = true);

}  // namespace lrr::recipes
