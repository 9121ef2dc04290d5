#pragma once

#include "lrr/linalg.hpp"

#include <vector>

namespace lrr::eval {

/// Cluster ids in [0, k_pred), class ids in [0, k_true).
struct LabeledPrediction {
  std::vector<int> predicted;
  std::vector<int> truth;
  int k_pred = 0;
  int k_true = 0;

  /// Builds a prediction with k_pred / k_true inferred as max id + 1.
  static LabeledPrediction from_labels(std::vector<int> predicted, std::vector<int> truth);
  void validate() const;
};

/// Higher score = more outlier-like; truth true = outlier.
struct ScoredBinary {
  std::vector<double> scores;
  std::vector<bool> truth;
};

enum class MatchStrategy { global, local, automatic };

/// Fraction of samples whose cluster maps to their class.
///  global    : best injective cluster -> class map (exhaustive search)
///  local     : each cluster takes its majority class; collisions allowed
///  automatic : global when k_pred < 10, local otherwise
double segmentation_accuracy(const LabeledPrediction& p, MatchStrategy strategy);

/// Contingency counts C(cluster, class).
Eigen::MatrixXi contingency(const LabeledPrediction& p);

/// Area under the ROC curve via the rank statistic; ties count 1/2.
double auc(const ScoredBinary& s);

/// ||U* U*^T - V0 V0^T||_F / ||V0 V0^T||_F with U* the column space of Z*
/// at rank_tol. Returns 1 for an all-zero Z*.
double recovery_error(const DenseMatrix& Z_star, const DenseMatrix& V0, double rank_tol = kSolutionRankTol);

/// ||X - X_r||_F / ||X||_F with X_r the best rank-r approximation.
double rank_r_error_level(const DenseMatrix& X, int r);

}  // namespace lrr::eval
