#include "lrr/eval.hpp"

#include "lrr/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lrr::eval {

namespace {

// Best total of C(i, pi(i)) over injections pi from rows into columns.
// Requires rows <= cols. Depth-first with a row-max upper bound.
class InjectionSearch {
public:
  explicit InjectionSearch(const Eigen::MatrixXi& C)
      : C_(C), used_(static_cast<std::size_t>(C.cols()), false) {
    suffix_bound_.assign(static_cast<std::size_t>(C.rows()) + 1, 0);
    for (Eigen::Index i = C.rows() - 1; i >= 0; --i) {
      suffix_bound_[static_cast<std::size_t>(i)] =
          suffix_bound_[static_cast<std::size_t>(i) + 1] + C.row(i).maxCoeff();
    }
  }

  int run() {
    best_ = 0;
    visit(0, 0);
    return best_;
  }

private:
  void visit(Eigen::Index row, int acc) {
    if (row == C_.rows()) {
      best_ = std::max(best_, acc);
      return;
    }
    if (acc + suffix_bound_[static_cast<std::size_t>(row)] <= best_) return;
    for (Eigen::Index c = 0; c < C_.cols(); ++c) {
      auto u = static_cast<std::size_t>(c);
      if (used_[u]) continue;
      used_[u] = true;
      visit(row + 1, acc + C_(row, c));
      used_[u] = false;
    }
  }

  const Eigen::MatrixXi& C_;
  std::vector<bool> used_;
  std::vector<int> suffix_bound_;
  int best_ = 0;
};

}  // namespace

LabeledPrediction LabeledPrediction::from_labels(std::vector<int> predicted,
                                                 std::vector<int> truth) {
  LabeledPrediction p;
  p.k_pred = predicted.empty() ? 0 : *std::max_element(predicted.begin(), predicted.end()) + 1;
  p.k_true = truth.empty() ? 0 : *std::max_element(truth.begin(), truth.end()) + 1;
  p.predicted = std::move(predicted);
  p.truth = std::move(truth);
  return p;
}

void LabeledPrediction::validate() const {
  if (predicted.empty()) throw ArgumentError("segmentation_accuracy: empty labeling");
  if (predicted.size() != truth.size()) {
    throw ArgumentError("segmentation_accuracy: predicted and truth differ in length");
  }
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] < 0 || predicted[i] >= k_pred || truth[i] < 0 || truth[i] >= k_true) {
      throw ArgumentError("segmentation_accuracy: label out of declared range");
    }
  }
}

Eigen::MatrixXi contingency(const LabeledPrediction& p) {
  p.validate();
  Eigen::MatrixXi C = Eigen::MatrixXi::Zero(p.k_pred, p.k_true);
  for (std::size_t i = 0; i < p.predicted.size(); ++i) ++C(p.predicted[i], p.truth[i]);
  return C;
}

double segmentation_accuracy(const LabeledPrediction& p, MatchStrategy strategy) {
  const Eigen::MatrixXi C = contingency(p);
  const auto m = static_cast<double>(p.predicted.size());

  if (strategy == MatchStrategy::automatic) {
    strategy = p.k_pred < 10 ? MatchStrategy::global : MatchStrategy::local;
  }
  if (strategy == MatchStrategy::local) {
    return C.rowwise().maxCoeff().sum() / m;
  }
  const Eigen::MatrixXi oriented = C.rows() <= C.cols() ? C : Eigen::MatrixXi(C.transpose());
  return InjectionSearch(oriented).run() / m;
}

double auc(const ScoredBinary& s) {
  if (s.scores.size() != s.truth.size()) {
    throw ArgumentError("auc: scores and truth differ in length");
  }
  const auto m = s.scores.size();
  const auto positives = static_cast<double>(std::count(s.truth.begin(), s.truth.end(), true));
  const double negatives = static_cast<double>(m) - positives;
  if (positives == 0 || negatives == 0) {
    throw ArgumentError("auc: undefined without both positive and negative samples");
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s.scores[a] < s.scores[b]; });

  // average 1-based ranks over tie groups
  double positive_rank_sum = 0.0;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && s.scores[order[j]] == s.scores[order[i]]) ++j;
    const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) {
      if (s.truth[order[t]]) positive_rank_sum += avg_rank;
    }
    i = j;
  }
  return (positive_rank_sum - positives * (positives + 1) / 2.0) / (positives * negatives);
}

double recovery_error(const DenseMatrix& Z_star, const DenseMatrix& V0, double rank_tol) {
  if (Z_star.rows() != V0.rows()) {
    throw ArgumentError("recovery_error: Z* and V0 must have the same number of rows");
  }
  const double reference = std::sqrt(static_cast<double>(V0.cols()));
  if (Z_star.isZero(0.0)) return 1.0;
  const SkinnySvd f = skinny_svd(Z_star, rank_tol);
  // ||P - P0||_F^2 = ||(I - P0) U||_F^2 + ||(I - P) V0||_F^2. Expanding into
  // r + r0 - 2 ||U^T V0||^2 cancels badly when the spaces nearly coincide.
  const DenseMatrix cross = V0.transpose() * f.U;
  const double a = (f.U - V0 * cross).squaredNorm();
  const double b = (V0 - f.U * cross.transpose()).squaredNorm();
  return std::sqrt(a + b) / reference;
}

double rank_r_error_level(const DenseMatrix& X, int r) {
  const auto cap = std::min(X.rows(), X.cols());
  if (r < 1 || r > cap) {
    throw ArgumentError("rank_r_error_level: r must lie in [1, min(d, n)]");
  }
  const double total = X.norm();
  if (total == 0.0) return 0.0;
  const Vector s = singular_values(X);
  return std::sqrt(s.tail(s.size() - r).squaredNorm()) / total;
}

}  // namespace lrr::eval
