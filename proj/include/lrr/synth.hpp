#pragma once

#include "lrr/linalg.hpp"

#include <cstdint>
#include <vector>

namespace lrr::synth {

enum class SubspaceMode { independent, disjoint };

struct SubspaceEnsemble {
  std::vector<DenseMatrix> bases;  // ambient x r_i, orthonormal columns
  SubspaceMode mode = SubspaceMode::independent;
  std::uint64_t seed = 0;

  Eigen::Index ambient() const { return bases.empty() ? 0 : bases.front().rows(); }
};

/// X = X0 + E0. Outliers carry label -1 and have zero columns in X0.
struct SyntheticDataset {
  DenseMatrix X;
  DenseMatrix X0;
  DenseMatrix E0;
  std::vector<int> true_labels;
  std::vector<Eigen::Index> outlier_indices;    // sorted
  std::vector<Eigen::Index> corrupted_indices;  // authentic columns with gross errors, sorted
  DenseMatrix V0;                               // row-space basis of X0 (n x r0)

  Eigen::Index samples() const { return X.cols(); }
  Eigen::Index authentic_count() const;
  double outlier_fraction() const;
  /// ||E0||_F / ||X0||_F.
  double error_ratio() const;
};

SubspaceEnsemble gen_ensemble(int k, int dim, int ambient, SubspaceMode mode, std::uint64_t seed);

/// Smallest singular value of [B_i, B_j] over all pairs.
double min_pairwise_sigma(const SubspaceEnsemble& ens);

/// Smallest principal angle (radians) between any two subspaces.
double min_principal_angle(const SubspaceEnsemble& ens);

SyntheticDataset sample(const SubspaceEnsemble& ens, int per_subspace, std::uint64_t seed);

/// Appends `count` Gaussian columns with per-entry std
/// magnitude_scale * mean_column_norm(X0 authentic) / sqrt(d).
SyntheticDataset add_outliers(SyntheticDataset ds, int count, double magnitude_scale,
                              std::uint64_t seed);

/// Adds a Gaussian error column of norm ~ magnitude_scale * ||x_i|| to
/// ceil(fraction * n_authentic) authentic, not-yet-corrupted columns.
SyntheticDataset corrupt_samples(SyntheticDataset ds, double fraction, double magnitude_scale,
                                 std::uint64_t seed);

/// Dense Gaussian noise with std level * rms(X0) on authentic columns that are
/// not grossly corrupted.
SyntheticDataset add_noise(SyntheticDataset ds, double level, std::uint64_t seed);

/// Scales every column of X (and the matching columns of X0, E0) to unit
/// l2 norm; zero columns are left alone. Recomputes V0.
SyntheticDataset normalize_columns(SyntheticDataset ds);

/// ||E0||_F / ||X0||_F as it would be after normalize_columns().
double normalized_error_ratio(const SyntheticDataset& ds);

/// Applies a seeded column permutation to every per-sample field.
SyntheticDataset shuffle(SyntheticDataset ds, std::uint64_t seed);

/// Recomputes V0 from X0.
void refresh_row_space(SyntheticDataset& ds);

}  // namespace lrr::synth
