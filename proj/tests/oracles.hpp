#pragma once

// Reference computations the tests compare the library against. Nothing here
// calls into lrr:: numerics; SVDs go through JacobiSVD (the library uses
// BDCSVD) so the two paths do not share an algorithm.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline Mat gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat M(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) M(i, j) = g(rng);
  return M;
}

inline Mat orthonormal(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Mat> qr(gaussian(rows, cols, rng));
  return qr.householderQ() * Mat::Identity(rows, cols);
}

inline Vec jacobi_singular_values(const Mat& M) {
  return Eigen::JacobiSVD<Mat>(M).singularValues();
}

inline double nuclear(const Mat& M) { return jacobi_singular_values(M).sum(); }

inline double l21(const Mat& M) { return M.colwise().norm().sum(); }

// Projector onto the row space of A via a full Jacobi SVD.
inline Mat row_projector(const Mat& A, double rel_tol = 1e-10) {
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
  const Vec s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel_tol * s(0)) ++r;
  const Mat V = svd.matrixV().leftCols(r);
  return V * V.transpose();
}

// Largest deviation from the four Moore-Penrose identities, relative to the
// operand scale.
inline double moore_penrose_defect(const Mat& M, const Mat& P) {
  const double sm = std::max(1.0, M.norm());
  const double sp = std::max(1.0, P.norm());
  double worst = (M * P * M - M).norm() / sm;
  worst = std::max(worst, (P * M * P - P).norm() / sp);
  const Mat MP = M * P;
  const Mat PM = P * M;
  worst = std::max(worst, (MP - MP.transpose()).norm() / std::max(1.0, MP.norm()));
  worst = std::max(worst, (PM - PM.transpose()).norm() / std::max(1.0, PM.norm()));
  return worst;
}

// Smallest value of f at `trials` random perturbations of x, minus f(x).
// Nonnegative means x beat every perturbation.
inline double perturbation_margin(const std::function<double(const Mat&)>& f, const Mat& x,
                                  int trials, double scale, std::mt19937_64& rng) {
  const double fx = f(x);
  double margin = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    Mat d = gaussian(x.rows(), x.cols(), rng);
    // mix of tiny and moderate steps
    const double s = scale * std::pow(10.0, -3.0 * (t % 4) / 3.0);
    margin = std::min(margin, f(x + s * d / d.norm()) - fx);
  }
  return margin;
}

// Minimizer of a unimodal scalar function on [a, b]. `better(c, d)` says
// whether f(c) < f(d); passing the difference in closed form avoids the
// cancellation that limits value comparisons to ~sqrt(eps) near the optimum.
inline double golden_section(const std::function<bool(double, double)>& better, double a,
                             double b, double tol = 1e-13) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  while (b - a > tol) {
    if (better(c, d)) {
      b = d;
      d = c;
      c = b - g * (b - a);
    } else {
      a = c;
      c = d;
      d = a + g * (b - a);
    }
  }
  return 0.5 * (a + b);
}

// Fraction of samples matched under the best injective map between cluster
// ids and class ids, by enumerating every permutation of the larger id set.
inline double best_injection_accuracy(const std::vector<int>& pred, const std::vector<int>& truth,
                                      int k_pred, int k_true) {
  const int big = std::max(k_pred, k_true);
  std::vector<int> perm(static_cast<std::size_t>(big));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
      if (k_pred <= k_true) {
        hits += perm[static_cast<std::size_t>(pred[i])] == truth[i];
      } else {
        hits += perm[static_cast<std::size_t>(truth[i])] == pred[i];
      }
    }
    best = std::max(best, hits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(pred.size());
}

// Per-cluster majority vote, counted directly.
inline double majority_accuracy(const std::vector<int>& pred, const std::vector<int>& truth,
                                int k_pred, int k_true) {
  std::size_t total = 0;
  for (int c = 0; c < k_pred; ++c) {
    std::vector<std::size_t> votes(static_cast<std::size_t>(k_true), 0);
    for (std::size_t i = 0; i < pred.size(); ++i) {
      if (pred[i] == c) ++votes[static_cast<std::size_t>(truth[i])];
    }
    total += *std::max_element(votes.begin(), votes.end());
  }
  return static_cast<double>(total) / static_cast<double>(pred.size());
}

// Trapezoidal area under the ROC curve traced by sweeping the threshold over
// every distinct score (predict positive when score >= threshold).
inline double roc_sweep_auc(const std::vector<double>& scores, const std::vector<bool>& truth) {
  std::vector<double> th(scores);
  std::sort(th.begin(), th.end(), std::greater<>());
  th.erase(std::unique(th.begin(), th.end()), th.end());
  double P = 0, N = 0;
  for (bool t : truth) (t ? P : N) += 1;
  double area = 0, prev_fpr = 0, prev_tpr = 0;
  for (double t : th) {
    double tp = 0, fp = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] >= t) (truth[i] ? tp : fp) += 1;
    }
    const double fpr = fp / N;
    const double tpr = tp / P;
    area += (fpr - prev_fpr) * (tpr + prev_tpr) / 2.0;
    prev_fpr = fpr;
    prev_tpr = tpr;
  }
  return area;
}

// ||Z||_* + lambda ||X - A Z||_{2,1}, the problem with E eliminated.
inline double lrr_objective(const Mat& X, const Mat& A, const Mat& Z, double lambda) {
  return nuclear(Z) + lambda * l21(X - A * Z);
}

struct SubgradientResult {
  Mat Z;
  double objective = 0.0;
};

// Projected subgradient descent on ||Z||_* + lambda ||X - AZ||_{2,1} over
// span(A^T), with normalized steps. Runs `stages` rounds of `iters` steps at a
// constant step length, halving it each round and restarting from the best
// iterate seen so far.
inline SubgradientResult subgradient_lrr(const Mat& X, const Mat& A, double lambda,
                                         int stages = 25, int iters = 4000,
                                         double step0 = 0.5) {
  const Mat P = row_projector(A);
  Mat Z = Mat::Zero(A.cols(), X.cols());
  SubgradientResult best{Z, lrr_objective(X, A, Z, lambda)};
  double step = step0;
  for (int s = 0; s < stages; ++s) {
    Z = best.Z;
    for (int k = 0; k < iters; ++k) {
      Eigen::JacobiSVD<Mat> svd(Z, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const Vec sv = svd.singularValues();
      Eigen::Index r = 0;
      while (r < sv.size() && sv(r) > 1e-12 * std::max(1.0, sv(0))) ++r;
      Mat G = svd.matrixU().leftCols(r) * svd.matrixV().leftCols(r).transpose();
      const Mat R = X - A * Z;
      Mat C = Mat::Zero(R.rows(), R.cols());
      for (Eigen::Index j = 0; j < R.cols(); ++j) {
        const double nj = R.col(j).norm();
        if (nj > 1e-14) C.col(j) = R.col(j) / nj;
      }
      G -= lambda * A.transpose() * C;
      G = P * G;
      const double gn = G.norm();
      if (gn == 0.0) break;
      Z -= (step / gn) * G;
      const double f = lrr_objective(X, A, Z, lambda);
      if (f < best.objective) best = {Z, f};
    }
    step *= 0.5;
  }
  return best;
}

}  // namespace oracle
