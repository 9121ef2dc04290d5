#include "lrr/cluster.hpp"

#include "lrr/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace lrr {

namespace {

Vector inverse_sqrt_degrees(const DenseMatrix& W) {
  const Vector deg = W.rowwise().sum();
  return deg.unaryExpr([](double v) { return v > 0.0 ? 1.0 / std::sqrt(v) : 0.0; });
}

DenseMatrix normalized_laplacian(const DenseMatrix& W) {
  const Vector s = inverse_sqrt_degrees(W);
  DenseMatrix L = -(s.asDiagonal() * W * s.asDiagonal());
  L.diagonal().array() += 1.0;
  // exact symmetry for the eigensolver
  return 0.5 * (L + L.transpose());
}

struct KMeansResult {
  std::vector<int> labels;
  double inertia = std::numeric_limits<double>::infinity();
};

KMeansResult kmeans_once(const DenseMatrix& P, int k, std::mt19937_64& rng, int max_iters) {
  const Eigen::Index n = P.rows();
  DenseMatrix centers(k, P.cols());
  std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);

  // farthest-point seeding from a random first center
  centers.row(0) = P.row(pick(rng));
  Vector dist = (P.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    Eigen::Index far = 0;
    dist.maxCoeff(&far);
    centers.row(c) = P.row(far);
    dist = dist.cwiseMin((P.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }

  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  Vector best(n);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::Index c = 0;
      best(i) = (centers.rowwise() - P.row(i)).rowwise().squaredNorm().minCoeff(&c);
      auto& li = labels[static_cast<std::size_t>(i)];
      if (li != static_cast<int>(c)) {
        li = static_cast<int>(c);
        changed = true;
      }
    }
    if (!changed) break;

    DenseMatrix sums = DenseMatrix::Zero(k, P.cols());
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const int c = labels[static_cast<std::size_t>(i)];
      sums.row(c) += P.row(i);
      ++counts[static_cast<std::size_t>(c)];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        centers.row(c) = sums.row(c) / counts[static_cast<std::size_t>(c)];
      } else {
        // empty cluster: restart it at the worst-fit point
        Eigen::Index far = 0;
        best.maxCoeff(&far);
        centers.row(c) = P.row(far);
        best(far) = 0.0;
      }
    }
  }

  KMeansResult out;
  out.labels = std::move(labels);
  out.inertia = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    out.inertia += (P.row(i) - centers.row(out.labels[static_cast<std::size_t>(i)])).squaredNorm();
  }
  return out;
}

// Renumber clusters in order of first appearance.
void canonicalize(std::vector<int>& labels) {
  std::vector<int> remap;
  for (auto& l : labels) {
    if (l >= static_cast<int>(remap.size())) remap.resize(static_cast<std::size_t>(l) + 1, -1);
    auto& r = remap[static_cast<std::size_t>(l)];
    if (r < 0) r = static_cast<int>(std::count_if(remap.begin(), remap.end(), [](int v) { return v >= 0; }));
    l = r;
  }
}

std::vector<int> spectral_labels(const DenseMatrix& W, int k, std::uint64_t seed,
                                 const NcutOptions& opts) {
  const Eigen::Index n = W.rows();
  if (k == 1) return std::vector<int>(static_cast<std::size_t>(n), 0);

  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(normalized_laplacian(W));
  if (eig.info() != Eigen::Success) {
    throw NumericalError("eigen-decomposition of the normalized Laplacian failed");
  }
  DenseMatrix P = eig.eigenvectors().leftCols(k);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = P.row(i).norm();
    if (r > 0) P.row(i) /= r;
  }

  std::mt19937_64 rng(seed);
  KMeansResult best;
  for (int run = 0; run < std::max(1, opts.restarts); ++run) {
    KMeansResult cur = kmeans_once(P, k, rng, opts.max_lloyd_iters);
    if (cur.inertia < best.inertia) best = std::move(cur);
  }
  canonicalize(best.labels);
  return best.labels;
}

}  // namespace

Affinity build_affinity(const DenseMatrix& Z_star, double rank_tol) {
  require_finite(Z_star, "Z*");
  const Eigen::Index n = Z_star.rows();
  Affinity out;
  if (Z_star.size() == 0 || Z_star.isZero(0.0)) {
    out.W = DenseMatrix::Zero(n, n);
    out.degenerate = true;
    return out;
  }

  const SkinnySvd f = skinny_svd(Z_star, rank_tol);
  DenseMatrix U = f.U * f.sigma.cwiseSqrt().asDiagonal();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = U.row(i).norm();
    if (r > 0) U.row(i) /= r;
  }
  DenseMatrix G(n, n);
  G.setZero();
  G.selfadjointView<Eigen::Lower>().rankUpdate(U);
  G.triangularView<Eigen::StrictlyUpper>() = G.transpose();
  out.W = G.cwiseProduct(G);
  return out;
}

LaplacianSpectrum laplacian_spectrum(const Affinity& W) {
  LaplacianSpectrum out;
  if (W.W.size() == 0) return out;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(normalized_laplacian(W.W),
                                                 Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("eigen-decomposition of the normalized Laplacian failed");
  }
  // L is PSD, so its singular values are |eigenvalues|
  out.sigma = eig.eigenvalues().cwiseAbs();
  std::sort(out.sigma.begin(), out.sigma.end());
  return out;
}

int estimate_k(const LaplacianSpectrum& spectrum, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw ArgumentError("tau must lie in (0, 1)");
  double total = 0.0;
  for (double s : spectrum.sigma) {
    total += s >= tau ? 1.0 : std::log2(1.0 + (s * s) / (tau * tau));
  }
  const auto n = static_cast<long>(spectrum.sigma.size());
  const long k_hat = n - std::lround(total);
  return static_cast<int>(std::max(1L, k_hat));
}

std::vector<int> ncut_segment(const Affinity& W, int k, std::uint64_t seed,
                              const NcutOptions& opts) {
  const Eigen::Index n = W.W.rows();
  if (k < 1 || k > n) {
    throw ArgumentError("ncut_segment: k must lie in [1, " + std::to_string(n) + "]");
  }
  if (k == 1) return std::vector<int>(static_cast<std::size_t>(n), 0);

  // Isolated nodes form the last cluster; the rest are split into k - 1.
  std::vector<Eigen::Index> connected;
  std::vector<Eigen::Index> isolated;
  const Vector deg = W.W.rowwise().sum();
  for (Eigen::Index i = 0; i < n; ++i) (deg(i) > 0 ? connected : isolated).push_back(i);

  if (isolated.empty()) return spectral_labels(W.W, k, seed, opts);

  std::vector<int> labels(static_cast<std::size_t>(n), k - 1);
  const auto m = static_cast<Eigen::Index>(connected.size());
  if (m == 0) return labels;
  const int sub_k = static_cast<int>(std::min<Eigen::Index>(k - 1, m));
  const DenseMatrix sub = W.W(connected, connected);
  const std::vector<int> sub_labels = spectral_labels(sub, sub_k, seed, opts);
  for (Eigen::Index i = 0; i < m; ++i) {
    labels[static_cast<std::size_t>(connected[static_cast<std::size_t>(i)])] =
        sub_labels[static_cast<std::size_t>(i)];
  }
  return labels;
}

std::vector<Eigen::Index> detect_outliers(const DenseMatrix& E_star, double delta) {
  if (!(delta > 0.0)) throw ArgumentError("delta must be positive");
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < E_star.cols(); ++i) {
    if (E_star.col(i).norm() > delta) out.push_back(i);
  }
  return out;
}

SegmentationResult segment_solution(LrrSolution solution, const SegmentOptions& opts) {
  SegmentationResult res;
  res.affinity = build_affinity(solution.Z, opts.rank_tol);
  res.spectrum = laplacian_spectrum(res.affinity);
  if (opts.k) {
    res.k = *opts.k;
  } else {
    res.k_hat = estimate_k(res.spectrum, opts.tau);
    res.k = std::min<int>(*res.k_hat, static_cast<int>(res.affinity.W.rows()));
  }
  res.labels = ncut_segment(res.affinity, res.k, opts.seed);
  if (opts.delta) res.outliers = detect_outliers(solution.E, *opts.delta);
  res.solution = std::move(solution);
  return res;
}

SegmentationResult segment(const DenseMatrix& X, const SegmentOptions& opts) {
  if (opts.k && *opts.k < 1) throw ArgumentError("k must be positive");
  if (!(opts.tau > 0.0 && opts.tau < 1.0)) throw ArgumentError("tau must lie in (0, 1)");
  if (opts.delta && !(*opts.delta > 0.0)) throw ArgumentError("delta must be positive");
  return segment_solution(solve_lrr_self(X, opts.model, opts.solver), opts);
}

}  // namespace lrr
