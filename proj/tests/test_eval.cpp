#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrr/error.hpp"
#include "lrr/eval.hpp"
#include "oracles.hpp"

using namespace lrr;
using namespace lrr::eval;

namespace {

double acc(const std::vector<int>& pred, const std::vector<int>& truth, MatchStrategy s) {
  return segmentation_accuracy(LabeledPrediction::from_labels(pred, truth), s);
}

}  // namespace

TEST_CASE("accuracy on identical and swapped labelings") {
  const std::vector<int> truth{0, 0, 1, 1, 2, 2, 1};
  for (auto s : {MatchStrategy::global, MatchStrategy::local, MatchStrategy::automatic})
    CHECK(acc(truth, truth, s) == 1.0);
  const std::vector<int> a{0, 0, 0, 1, 1, 1};
  const std::vector<int> b{1, 1, 1, 0, 0, 0};
  for (auto s : {MatchStrategy::global, MatchStrategy::local, MatchStrategy::automatic})
    CHECK(acc(a, b, s) == 1.0);
}

TEST_CASE("accuracy with a cluster split across two classes") {
  const std::vector<int> truth{0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2};
  const std::vector<int> pred{0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2};
  const double g = acc(pred, truth, MatchStrategy::global);
  const double l = acc(pred, truth, MatchStrategy::local);
  CHECK(g == doctest::Approx(oracle::best_injection_accuracy(pred, truth, 3, 3)).epsilon(1e-15));
  CHECK(l == doctest::Approx(oracle::majority_accuracy(pred, truth, 3, 3)).epsilon(1e-15));
  CHECK(g == doctest::Approx(8.0 / 12.0));
}

TEST_CASE("local majority can exceed the best injection") {
  // two clusters both dominated by class 0: local counts both, global cannot
  const std::vector<int> truth{0, 0, 0, 0, 1, 1};
  const std::vector<int> pred{0, 0, 1, 1, 0, 1};
  CHECK(acc(pred, truth, MatchStrategy::local) == doctest::Approx(4.0 / 6.0));
  CHECK(acc(pred, truth, MatchStrategy::global) == doctest::Approx(3.0 / 6.0));
}

TEST_CASE("accuracy matches exhaustive and majority oracles on random labelings") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const int kp = 1 + static_cast<int>(rng() % 5);
    const int kt = 1 + static_cast<int>(rng() % 5);
    const std::size_t n = 5 + rng() % 20;
    std::vector<int> pred(n), truth(n);
    for (std::size_t i = 0; i < n; ++i) {
      pred[i] = static_cast<int>(rng() % static_cast<unsigned>(kp));
      truth[i] = static_cast<int>(rng() % static_cast<unsigned>(kt));
    }
    pred[0] = kp - 1;
    truth[0] = kt - 1;
    const double g = acc(pred, truth, MatchStrategy::global);
    const double l = acc(pred, truth, MatchStrategy::local);
    CHECK(g == doctest::Approx(oracle::best_injection_accuracy(pred, truth, kp, kt)).epsilon(1e-15));
    CHECK(l == doctest::Approx(oracle::majority_accuracy(pred, truth, kp, kt)).epsilon(1e-15));
    CHECK(l >= g);
    CHECK(acc(pred, truth, MatchStrategy::automatic) == g);
  }
}

TEST_CASE("automatic strategy switches to local at ten clusters") {
  std::vector<int> pred, truth;
  for (int c = 0; c < 10; ++c) {
    pred.insert(pred.end(), 3, c);
    truth.insert(truth.end(), 3, c % 2);
  }
  CHECK(acc(pred, truth, MatchStrategy::automatic) == acc(pred, truth, MatchStrategy::local));
  CHECK(acc(pred, truth, MatchStrategy::automatic) == 1.0);
}

TEST_CASE("accuracy argument errors") {
  CHECK_THROWS_AS(acc({}, {}, MatchStrategy::global), ArgumentError);
  CHECK_THROWS_AS(acc({0, 1}, {0}, MatchStrategy::global), ArgumentError);
  LabeledPrediction p{{0, 3}, {0, 1}, 2, 2};
  CHECK_THROWS_AS(segmentation_accuracy(p, MatchStrategy::local), ArgumentError);
}

TEST_CASE("contingency counts") {
  const auto p = LabeledPrediction::from_labels({0, 0, 1, 1, 1}, {1, 0, 1, 1, 0});
  const Eigen::MatrixXi C = contingency(p);
  CHECK(C(0, 0) == 1);
  CHECK(C(0, 1) == 1);
  CHECK(C(1, 0) == 1);
  CHECK(C(1, 1) == 2);
}

TEST_CASE("auc closed cases") {
  CHECK(auc({{0.1, 0.2, 0.9, 0.8}, {false, false, true, true}}) == 1.0);
  CHECK(auc({{0.9, 0.8, 0.1, 0.2}, {false, false, true, true}}) == 0.0);
  CHECK(auc({{0.5, 0.5, 0.5, 0.5}, {false, true, false, true}}) == 0.5);
  CHECK_THROWS_AS(auc({{0.1, 0.2}, {true, true}}), ArgumentError);
  CHECK_THROWS_AS(auc({{0.1, 0.2}, {false, false}}), ArgumentError);
  CHECK_THROWS_AS(auc({{0.1}, {true, false}}), ArgumentError);
}

TEST_CASE("auc of a mixed six-point example matches the threshold sweep") {
  const ScoredBinary s{{0.9, 0.4, 0.7, 0.4, 0.2, 0.6}, {true, false, true, true, false, false}};
  const double want = oracle::roc_sweep_auc(s.scores, s.truth);
  CHECK(std::abs(auc(s) - want) <= 1e-12);
  // hand count: pairs (pos, neg) = 3 x 3; 0.4 vs 0.4 tie gives 1/2
  CHECK(auc(s) == doctest::Approx((3 + 3 + 1.5) / 9.0));
}

TEST_CASE("auc matches the threshold sweep on random scores with ties") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 4 + rng() % 40;
    ScoredBinary s;
    for (std::size_t i = 0; i < n; ++i) {
      s.scores.push_back(static_cast<double>(rng() % 7) / 7.0);
      s.truth.push_back(rng() % 3 == 0);
    }
    s.truth[0] = true;
    s.truth[1] = false;
    CHECK(std::abs(auc(s) - oracle::roc_sweep_auc(s.scores, s.truth)) <= 1e-12);

    // strictly monotone transform
    ScoredBinary m = s;
    for (double& v : m.scores) v = std::exp(3.0 * v) - 7.0;
    CHECK(auc(m) == auc(s));
  }
}

TEST_CASE("recovery_error") {
  std::mt19937_64 rng(33);
  const DenseMatrix Q = oracle::orthonormal(12, 6, rng);
  const DenseMatrix V0 = Q.leftCols(3);
  const DenseMatrix W = Q.rightCols(3);
  CHECK(recovery_error(V0 * V0.transpose(), V0) < 1e-12);
  CHECK(recovery_error(W * W.transpose(), V0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(recovery_error(DenseMatrix::Zero(12, 12), V0) == 1.0);

  // any basis of the same column space scores zero; V0 rotations leave the value unchanged
  const DenseMatrix Z = V0 * oracle::gaussian(3, 12, rng) + 0.3 * W * oracle::gaussian(3, 12, rng);
  const DenseMatrix R = oracle::orthonormal(3, 3, rng);
  CHECK(recovery_error(Z, V0 * R) == doctest::Approx(recovery_error(Z, V0)).epsilon(1e-12));
  CHECK(recovery_error(V0 * oracle::gaussian(3, 5, rng), V0) < 1e-10);

  // oracle: projector distance through a Jacobi SVD of Z
  Eigen::JacobiSVD<DenseMatrix> svd(Z, Eigen::ComputeThinU);
  const DenseMatrix U = svd.matrixU().leftCols(6);
  const double want = (U * U.transpose() - V0 * V0.transpose()).norm() / std::sqrt(3.0);
  CHECK(recovery_error(Z, V0) == doctest::Approx(want).epsilon(1e-10));

  CHECK_THROWS_AS(recovery_error(DenseMatrix::Zero(5, 5), V0), ArgumentError);
}

TEST_CASE("rank_r_error_level") {
  DenseMatrix D = DenseMatrix::Zero(3, 3);
  D.diagonal() << 3, 2, 1;
  CHECK(rank_r_error_level(D, 2) == doctest::Approx(1.0 / std::sqrt(14.0)));
  CHECK(rank_r_error_level(D, 3) < 1e-15);
  CHECK(rank_r_error_level(DenseMatrix::Zero(4, 3), 1) == 0.0);

  std::mt19937_64 rng(34);
  const DenseMatrix L = oracle::gaussian(10, 2, rng) * oracle::gaussian(2, 8, rng);
  CHECK(rank_r_error_level(L, 2) < 1e-12);

  const DenseMatrix X = oracle::gaussian(9, 7, rng);
  const Eigen::VectorXd s = oracle::jacobi_singular_values(X);
  double prev = 2.0;
  for (int r = 1; r <= 7; ++r) {
    const double e = rank_r_error_level(X, r);
    CHECK(e <= prev);
    CHECK(e == doctest::Approx(s.tail(7 - r).norm() / s.norm()).epsilon(1e-10));
    prev = e;
  }
  CHECK_THROWS_AS(rank_r_error_level(X, 0), ArgumentError);
  CHECK_THROWS_AS(rank_r_error_level(X, 8), ArgumentError);
}
