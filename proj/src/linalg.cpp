#include "lrr/linalg.hpp"

#include "lrr/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lrr {

namespace {

std::string dims(const DenseMatrix& M) {
  return std::to_string(M.rows()) + "x" + std::to_string(M.cols());
}

Eigen::BDCSVD<DenseMatrix> thin_svd(const DenseMatrix& M) {
  Eigen::BDCSVD<DenseMatrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("SVD failed to converge on a " + dims(M) + " matrix");
  }
  return svd;
}

// Entries below this magnitude do not decide the sign of a singular vector.
constexpr double kSignPivotTol = 1e-10;

void fix_signs(DenseMatrix& U, DenseMatrix& V) {
  for (Eigen::Index j = 0; j < U.cols(); ++j) {
    for (Eigen::Index i = 0; i < U.rows(); ++i) {
      const double u = U(i, j);
      if (std::abs(u) > kSignPivotTol) {
        if (u < 0) {
          U.col(j) = -U.col(j);
          V.col(j) = -V.col(j);
        }
        break;
      }
    }
  }
}

}  // namespace

std::string_view to_string(MatrixNormKind kind) {
  switch (kind) {
    case MatrixNormKind::l1: return "l1";
    case MatrixNormKind::l21: return "l21";
    case MatrixNormKind::frobenius: return "frobenius";
    case MatrixNormKind::nuclear: return "nuclear";
    case MatrixNormKind::spectral: return "spectral";
    case MatrixNormKind::linf: return "linf";
  }
  return "unknown";
}

MatrixNormKind parse_norm_kind(std::string_view name) {
  for (auto k : {MatrixNormKind::l1, MatrixNormKind::l21, MatrixNormKind::frobenius,
                 MatrixNormKind::nuclear, MatrixNormKind::spectral, MatrixNormKind::linf}) {
    if (to_string(k) == name) return k;
  }
  throw ArgumentError("unknown matrix norm '" + std::string(name) + "'");
}

void require_finite(const DenseMatrix& M, std::string_view what) {
  if (!M.allFinite()) {
    throw ArgumentError(std::string(what) + " contains NaN or infinite entries");
  }
}

double default_rank_tol(const DenseMatrix& M) {
  return static_cast<double>(std::max(M.rows(), M.cols())) *
         std::numeric_limits<double>::epsilon();
}

SkinnySvd skinny_svd(const DenseMatrix& M, std::optional<double> rank_tol) {
  const double tol = rank_tol.value_or(default_rank_tol(M));
  if (tol < 0) throw ArgumentError("rank_tol must be nonnegative");
  require_finite(M, "skinny_svd");
  if (M.size() == 0) {
    return {DenseMatrix(M.rows(), 0), Vector(0), DenseMatrix(M.cols(), 0)};
  }

  const auto svd = thin_svd(M);
  const Vector& s = svd.singularValues();
  const double cutoff = tol * s(0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > cutoff && s(r) > 0.0) ++r;

  SkinnySvd out{svd.matrixU().leftCols(r), s.head(r), svd.matrixV().leftCols(r)};
  fix_signs(out.U, out.V);
  return out;
}

Vector singular_values(const DenseMatrix& M) {
  if (M.size() == 0) return Vector(0);
  Eigen::BDCSVD<DenseMatrix> svd(M);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("SVD failed to converge on a " + dims(M) + " matrix");
  }
  return svd.singularValues();
}

Eigen::Index numerical_rank(const DenseMatrix& M, std::optional<double> rank_tol) {
  const Vector s = singular_values(M);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = rank_tol.value_or(default_rank_tol(M)) * s(0);
  return (s.array() > cutoff).count();
}

DenseMatrix pseudoinverse(const DenseMatrix& M, std::optional<double> rank_tol) {
  const SkinnySvd f = skinny_svd(M, rank_tol);
  return f.V * f.sigma.cwiseInverse().asDiagonal() * f.U.transpose();
}

double norm(const DenseMatrix& M, MatrixNormKind kind) {
  if (M.size() == 0) return 0.0;
  switch (kind) {
    case MatrixNormKind::l1: return M.cwiseAbs().sum();
    case MatrixNormKind::l21: return M.colwise().norm().sum();
    case MatrixNormKind::frobenius: return M.norm();
    case MatrixNormKind::nuclear: return singular_values(M).sum();
    case MatrixNormKind::spectral: return singular_values(M)(0);
    case MatrixNormKind::linf: return M.cwiseAbs().maxCoeff();
  }
  return 0.0;
}

Eigen::Index count_nonzero_entries(const DenseMatrix& M, double tol) {
  return (M.array().abs() > tol).count();
}

Eigen::Index count_nonzero_columns(const DenseMatrix& M, double tol) {
  Eigen::Index c = 0;
  for (Eigen::Index j = 0; j < M.cols(); ++j) {
    if (M.col(j).norm() > tol) ++c;
  }
  return c;
}

DenseMatrix svt(const DenseMatrix& M, double theta, double& shrunk_nuclear_norm) {
  if (theta < 0) throw ArgumentError("svt threshold must be nonnegative");
  shrunk_nuclear_norm = 0.0;
  if (M.size() == 0) return M;

  const auto svd = thin_svd(M);
  const Vector& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > theta) ++r;
  if (r == 0) return DenseMatrix::Zero(M.rows(), M.cols());

  const Vector shrunk = (s.head(r).array() - theta).matrix();
  shrunk_nuclear_norm = shrunk.sum();
  return svd.matrixU().leftCols(r) * shrunk.asDiagonal() * svd.matrixV().leftCols(r).transpose();
}

DenseMatrix svt(const DenseMatrix& M, double theta) {
  double unused = 0.0;
  return svt(M, theta, unused);
}

DenseMatrix column_shrink(const DenseMatrix& Q, double alpha) {
  if (alpha < 0) throw ArgumentError("column_shrink alpha must be nonnegative");
  DenseMatrix W = DenseMatrix::Zero(Q.rows(), Q.cols());
  for (Eigen::Index i = 0; i < Q.cols(); ++i) {
    const double nq = Q.col(i).norm();
    if (nq > alpha) W.col(i) = ((nq - alpha) / nq) * Q.col(i);
  }
  return W;
}

DenseMatrix entry_shrink(const DenseMatrix& Q, double alpha) {
  if (alpha < 0) throw ArgumentError("entry_shrink alpha must be nonnegative");
  return Q.unaryExpr([alpha](double q) {
    const double m = std::abs(q) - alpha;
    return m > 0 ? std::copysign(m, q) : 0.0;
  });
}

DenseMatrix row_space_projector(const DenseMatrix& A) {
  if (A.size() == 0 || A.isZero(0.0)) {
    throw DegenerateInputError("row_space_projector: zero matrix has no row space");
  }
  const SkinnySvd f = skinny_svd(A);
  return f.V * f.V.transpose();
}

}  // namespace lrr
