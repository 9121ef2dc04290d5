#pragma once

#include "lrr/linalg.hpp"
#include "lrr/solver.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lrr {

/// Symmetric nonnegative n x n affinity.
struct Affinity {
  DenseMatrix W;
  bool degenerate = false;  // built from an all-zero coefficient matrix
};

/// Singular values of L = I - D^{-1/2} W D^{-1/2}, non-decreasing.
struct LaplacianSpectrum {
  Vector sigma;
};

struct SegmentationResult {
  std::vector<int> labels;
  int k = 0;
  std::vector<Eigen::Index> outliers;
  std::optional<int> k_hat;

  // diagnostics
  LrrSolution solution;
  Affinity affinity;
  LaplacianSpectrum spectrum;
};

/// W_ij = ([U~ U~^T]_ij)^2 where U~ is U* sqrt(Sigma*) with unit rows and
/// Z* = U* Sigma* V*^T is the skinny SVD at rank_tol.
Affinity build_affinity(const DenseMatrix& Z_star, double rank_tol = kSolutionRankTol);

/// Zero-degree nodes get a zero entry in D^{-1/2}.
LaplacianSpectrum laplacian_spectrum(const Affinity& W);

/// k_hat = n - round(sum_i f_tau(sigma_i)), f_tau(s) = 1 if s >= tau else
/// log2(1 + s^2 / tau^2); clamped to at least 1.
int estimate_k(const LaplacianSpectrum& spectrum, double tau = 0.08);

struct NcutOptions {
  int restarts = 20;
  int max_lloyd_iters = 300;
};

/// Normalized spectral clustering: bottom-k eigenvectors of the normalized
/// Laplacian, unit-row embedding, seeded k-means with farthest-point seeding.
std::vector<int> ncut_segment(const Affinity& W, int k, std::uint64_t seed,
                              const NcutOptions& opts = {});

/// { i : ||E_:,i||_2 > delta }, sorted.
std::vector<Eigen::Index> detect_outliers(const DenseMatrix& E_star, double delta);

struct SegmentOptions {
  std::optional<int> k;  // nullopt = estimate from the Laplacian spectrum
  ErrorModel model = ErrorModel::l21;
  SolverOptions solver;
  double tau = 0.08;
  std::optional<double> delta;
  std::uint64_t seed = 0;
  double rank_tol = kSolutionRankTol;
};

/// solve_lrr_self -> build_affinity -> (estimate_k) -> ncut_segment -> (detect_outliers)
SegmentationResult segment(const DenseMatrix& X, const SegmentOptions& opts);

/// Affinity, spectrum, k estimate and clustering for an already solved Z*.
SegmentationResult segment_solution(LrrSolution solution, const SegmentOptions& opts);

}  // namespace lrr
