#include "lrr/synth.hpp"

#include "lrr/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace lrr::synth {

namespace {

constexpr double kDisjointSigmaTol = 1e-6;
constexpr int kMaxEnsembleDraws = 16;

DenseMatrix gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix G(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) G(i, j) = normal(rng);
  }
  return G;
}

DenseMatrix orthonormal_basis(Eigen::Index ambient, Eigen::Index dim, std::mt19937_64& rng) {
  const DenseMatrix G = gaussian(ambient, dim, rng);
  Eigen::HouseholderQR<DenseMatrix> qr(G);
  return qr.householderQ() * DenseMatrix::Identity(ambient, dim);
}

double smallest_singular_value(const DenseMatrix& M) {
  const Vector s = singular_values(M);
  return s.size() == 0 ? 0.0 : s(s.size() - 1);
}

bool is_valid(const SubspaceEnsemble& ens) {
  if (ens.mode == SubspaceMode::disjoint) return min_pairwise_sigma(ens) > kDisjointSigmaTol;
  Eigen::Index total = 0;
  for (const auto& B : ens.bases) total += B.cols();
  DenseMatrix stacked(ens.ambient(), total);
  Eigen::Index c = 0;
  for (const auto& B : ens.bases) {
    stacked.middleCols(c, B.cols()) = B;
    c += B.cols();
  }
  return smallest_singular_value(stacked) > kDisjointSigmaTol;
}

std::vector<bool> mask_of(const std::vector<Eigen::Index>& idx, Eigen::Index n) {
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  for (auto i : idx) mask[static_cast<std::size_t>(i)] = true;
  return mask;
}

}  // namespace

Eigen::Index SyntheticDataset::authentic_count() const {
  return samples() - static_cast<Eigen::Index>(outlier_indices.size());
}

double SyntheticDataset::outlier_fraction() const {
  return samples() == 0 ? 0.0
                        : static_cast<double>(outlier_indices.size()) /
                              static_cast<double>(samples());
}

double SyntheticDataset::error_ratio() const {
  const double x0 = X0.norm();
  return x0 == 0.0 ? 0.0 : E0.norm() / x0;
}

SubspaceEnsemble gen_ensemble(int k, int dim, int ambient, SubspaceMode mode,
                              std::uint64_t seed) {
  if (k < 1 || dim < 1 || ambient < 1) {
    throw ArgumentError("gen_ensemble: k, dim and ambient must be positive");
  }
  if (dim > ambient) throw ArgumentError("gen_ensemble: subspace dimension exceeds ambient");
  if (mode == SubspaceMode::independent && static_cast<long>(k) * dim > ambient) {
    throw ArgumentError("gen_ensemble: independent subspaces need k * dim <= ambient");
  }
  if (mode == SubspaceMode::disjoint && k > 1 && 2 * dim > ambient) {
    throw ArgumentError("gen_ensemble: disjoint subspaces need 2 * dim <= ambient");
  }

  std::mt19937_64 rng(seed);
  SubspaceEnsemble ens;
  ens.mode = mode;
  ens.seed = seed;
  for (int attempt = 0; attempt < kMaxEnsembleDraws; ++attempt) {
    ens.bases.clear();
    for (int i = 0; i < k; ++i) ens.bases.push_back(orthonormal_basis(ambient, dim, rng));
    if (is_valid(ens)) return ens;
  }
  throw NumericalError("gen_ensemble: could not draw a valid subspace ensemble");
}

double min_pairwise_sigma(const SubspaceEnsemble& ens) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ens.bases.size(); ++i) {
    for (std::size_t j = i + 1; j < ens.bases.size(); ++j) {
      DenseMatrix pair(ens.ambient(), ens.bases[i].cols() + ens.bases[j].cols());
      pair << ens.bases[i], ens.bases[j];
      best = std::min(best, smallest_singular_value(pair));
    }
  }
  return best;
}

double min_principal_angle(const SubspaceEnsemble& ens) {
  double best = M_PI / 2;
  for (std::size_t i = 0; i < ens.bases.size(); ++i) {
    for (std::size_t j = i + 1; j < ens.bases.size(); ++j) {
      // cosines of principal angles are the singular values of B_i^T B_j
      const Vector c = singular_values(ens.bases[i].transpose() * ens.bases[j]);
      best = std::min(best, std::acos(std::min(1.0, c(0))));
    }
  }
  return best;
}

void refresh_row_space(SyntheticDataset& ds) { ds.V0 = skinny_svd(ds.X0).V; }

SyntheticDataset sample(const SubspaceEnsemble& ens, int per_subspace, std::uint64_t seed) {
  if (per_subspace < 1) throw ArgumentError("sample: per_subspace must be at least 1");
  if (ens.bases.empty()) throw ArgumentError("sample: empty ensemble");

  std::mt19937_64 rng(seed);
  const Eigen::Index n = static_cast<Eigen::Index>(ens.bases.size()) * per_subspace;
  SyntheticDataset ds;
  ds.X0.resize(ens.ambient(), n);
  Eigen::Index col = 0;
  for (std::size_t s = 0; s < ens.bases.size(); ++s) {
    const DenseMatrix& B = ens.bases[s];
    ds.X0.middleCols(col, per_subspace) = B * gaussian(B.cols(), per_subspace, rng);
    for (int i = 0; i < per_subspace; ++i) ds.true_labels.push_back(static_cast<int>(s));
    col += per_subspace;
  }
  ds.E0 = DenseMatrix::Zero(ds.X0.rows(), n);
  ds.X = ds.X0;
  refresh_row_space(ds);
  return ds;
}

SyntheticDataset add_outliers(SyntheticDataset ds, int count, double magnitude_scale,
                              std::uint64_t seed) {
  if (count < 0) throw ArgumentError("add_outliers: count must be nonnegative");
  if (count == 0) return ds;

  const auto d = ds.X0.rows();
  const auto n = ds.samples();
  const auto outlier_mask = mask_of(ds.outlier_indices, n);
  double mean_norm = 0.0;
  Eigen::Index authentic = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (outlier_mask[static_cast<std::size_t>(j)]) continue;
    mean_norm += ds.X0.col(j).norm();
    ++authentic;
  }
  if (authentic > 0) mean_norm /= static_cast<double>(authentic);
  const double stddev = magnitude_scale * mean_norm / std::sqrt(static_cast<double>(d));

  std::mt19937_64 rng(seed);
  const DenseMatrix outliers = stddev * gaussian(d, count, rng);

  auto append = [count](DenseMatrix& M, const DenseMatrix& tail) {
    DenseMatrix out(M.rows(), M.cols() + count);
    out << M, tail;
    M = std::move(out);
  };
  append(ds.X0, DenseMatrix::Zero(d, count));
  append(ds.E0, outliers);
  ds.X = ds.X0 + ds.E0;
  for (int i = 0; i < count; ++i) {
    ds.true_labels.push_back(-1);
    ds.outlier_indices.push_back(n + i);
  }
  refresh_row_space(ds);
  return ds;
}

SyntheticDataset corrupt_samples(SyntheticDataset ds, double fraction, double magnitude_scale,
                                 std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw ArgumentError("corrupt_samples: fraction must lie in [0, 1]");
  }
  const auto n = ds.samples();
  const auto outlier_mask = mask_of(ds.outlier_indices, n);
  const auto corrupted_mask = mask_of(ds.corrupted_indices, n);
  std::vector<Eigen::Index> candidates;
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto u = static_cast<std::size_t>(j);
    if (!outlier_mask[u] && !corrupted_mask[u]) candidates.push_back(j);
  }
  const auto authentic = static_cast<double>(ds.authentic_count());
  const auto wanted = std::min(candidates.size(),
                               static_cast<std::size_t>(std::ceil(fraction * authentic - 1e-9)));
  if (wanted == 0) return ds;

  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  candidates.resize(wanted);
  std::sort(candidates.begin(), candidates.end());

  const auto d = ds.X0.rows();
  const double per_entry = 1.0 / std::sqrt(static_cast<double>(d));
  for (auto j : candidates) {
    const Vector err = magnitude_scale * ds.X0.col(j).norm() * per_entry * gaussian(d, 1, rng);
    ds.E0.col(j) += err;
    ds.corrupted_indices.push_back(j);
  }
  ds.X = ds.X0 + ds.E0;
  std::sort(ds.corrupted_indices.begin(), ds.corrupted_indices.end());
  return ds;
}

SyntheticDataset add_noise(SyntheticDataset ds, double level, std::uint64_t seed) {
  if (level < 0) throw ArgumentError("add_noise: level must be nonnegative");
  if (level == 0.0) return ds;

  const auto n = ds.samples();
  const auto d = ds.X0.rows();
  const auto outlier_mask = mask_of(ds.outlier_indices, n);
  const auto corrupted_mask = mask_of(ds.corrupted_indices, n);
  const double authentic_entries = static_cast<double>(ds.authentic_count() * d);
  const double rms = authentic_entries > 0 ? ds.X0.norm() / std::sqrt(authentic_entries) : 0.0;

  std::mt19937_64 rng(seed);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto u = static_cast<std::size_t>(j);
    if (outlier_mask[u] || corrupted_mask[u]) continue;
    const Vector noise = level * rms * gaussian(d, 1, rng);
    ds.E0.col(j) += noise;
  }
  ds.X = ds.X0 + ds.E0;
  return ds;
}

SyntheticDataset normalize_columns(SyntheticDataset ds) {
  for (Eigen::Index j = 0; j < ds.samples(); ++j) {
    const double c = ds.X.col(j).norm();
    if (c == 0.0) continue;
    ds.X0.col(j) /= c;
    ds.E0.col(j) /= c;
  }
  ds.X = ds.X0 + ds.E0;
  refresh_row_space(ds);
  return ds;
}

double normalized_error_ratio(const SyntheticDataset& ds) {
  double e = 0.0;
  double x0 = 0.0;
  for (Eigen::Index j = 0; j < ds.samples(); ++j) {
    const double c2 = ds.X.col(j).squaredNorm();
    if (c2 == 0.0) continue;
    e += ds.E0.col(j).squaredNorm() / c2;
    x0 += ds.X0.col(j).squaredNorm() / c2;
  }
  return x0 == 0.0 ? 0.0 : std::sqrt(e / x0);
}

SyntheticDataset shuffle(SyntheticDataset ds, std::uint64_t seed) {
  const auto n = ds.samples();
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Eigen::Index{0});
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);

  // new column j holds old column perm[j]
  std::vector<Eigen::Index> where(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) where[static_cast<std::size_t>(perm[j])] = static_cast<Eigen::Index>(j);

  auto permute = [&](const DenseMatrix& M) {
    DenseMatrix out(M.rows(), M.cols());
    for (Eigen::Index j = 0; j < n; ++j) out.col(j) = M.col(perm[static_cast<std::size_t>(j)]);
    return out;
  };
  auto remap = [&](std::vector<Eigen::Index>& idx) {
    for (auto& i : idx) i = where[static_cast<std::size_t>(i)];
    std::sort(idx.begin(), idx.end());
  };

  ds.X = permute(ds.X);
  ds.X0 = permute(ds.X0);
  ds.E0 = permute(ds.E0);
  std::vector<int> labels(ds.true_labels.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    labels[j] = ds.true_labels[static_cast<std::size_t>(perm[j])];
  }
  ds.true_labels = std::move(labels);
  remap(ds.outlier_indices);
  remap(ds.corrupted_indices);
  refresh_row_space(ds);
  return ds;
}

}  // namespace lrr::synth
