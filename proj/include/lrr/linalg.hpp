#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string_view>

namespace lrr {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Skinny SVD M = U diag(sigma) V^T keeping only singular values above the
/// rank tolerance. sigma is strictly positive and non-increasing.
struct SkinnySvd {
  DenseMatrix U;
  Vector sigma;
  DenseMatrix V;

  Eigen::Index rank() const { return sigma.size(); }
  DenseMatrix reconstruct() const { return U * sigma.asDiagonal() * V.transpose(); }
};

/// Relative cutoff used to read the column space off a solver iterate. The
/// ALM iterate Z matches the exactly low-rank J only to the stopping
/// tolerance, so singular values below this fraction of sigma_max are noise.
inline constexpr double kSolutionRankTol = 1e-4;

enum class MatrixNormKind { l1, l21, frobenius, nuclear, spectral, linf };

std::string_view to_string(MatrixNormKind kind);
MatrixNormKind parse_norm_kind(std::string_view name);

/// Throws ArgumentError if any entry is NaN or infinite.
void require_finite(const DenseMatrix& M, std::string_view what);

/// Relative rank tolerance max(d, n) * machine epsilon.
double default_rank_tol(const DenseMatrix& M);

/// Skinny SVD. Singular values <= rank_tol * sigma_max are dropped; with
/// rank_tol == 0 every strictly positive value is kept. Columns are signed so
/// that the first nonzero entry of each left singular vector is nonnegative.
SkinnySvd skinny_svd(const DenseMatrix& M, std::optional<double> rank_tol = std::nullopt);

/// Singular values only, non-increasing, including zeros.
Vector singular_values(const DenseMatrix& M);

/// Numerical rank at the given relative tolerance.
Eigen::Index numerical_rank(const DenseMatrix& M, std::optional<double> rank_tol = std::nullopt);

/// Moore-Penrose pseudoinverse V Sigma^{-1} U^T.
DenseMatrix pseudoinverse(const DenseMatrix& M, std::optional<double> rank_tol = std::nullopt);

double norm(const DenseMatrix& M, MatrixNormKind kind);

// Counting "norms": number of nonzero entries / nonzero columns.
Eigen::Index count_nonzero_entries(const DenseMatrix& M, double tol = 0.0);
Eigen::Index count_nonzero_columns(const DenseMatrix& M, double tol = 0.0);

/// Singular value thresholding: the proximal operator of theta * ||.||_*.
DenseMatrix svt(const DenseMatrix& M, double theta);

/// Same as svt() and additionally reports the nuclear norm of the result.
DenseMatrix svt(const DenseMatrix& M, double theta, double& shrunk_nuclear_norm);

/// Proximal operator of alpha * ||.||_{2,1}: each column is scaled by
/// (||q|| - alpha) / ||q|| when ||q|| > alpha and zeroed otherwise.
DenseMatrix column_shrink(const DenseMatrix& Q, double alpha);

/// Entrywise soft threshold sign(q) * max(|q| - alpha, 0).
DenseMatrix entry_shrink(const DenseMatrix& Q, double alpha);

/// Orthogonal projector V_A V_A^T onto the row space of A (n x n).
/// Throws DegenerateInputError for a zero matrix.
DenseMatrix row_space_projector(const DenseMatrix& A);

}  // namespace lrr
