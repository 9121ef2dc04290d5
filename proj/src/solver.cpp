#include "lrr/solver.hpp"

#include "lrr/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lrr {

namespace {

constexpr double kCleanFeasibilityTol = 1e-6;
constexpr double kReducedRankFraction = 0.8;

void check_shapes(const DenseMatrix& X, const DenseMatrix& A) {
  if (X.rows() != A.rows()) {
    throw ArgumentError("dimension mismatch: X has " + std::to_string(X.rows()) +
                        " rows but the dictionary has " + std::to_string(A.rows()));
  }
  if (X.cols() == 0 || A.cols() == 0 || X.rows() == 0) {
    throw ArgumentError("empty data matrix or dictionary");
  }
  require_finite(X, "X");
  require_finite(A, "dictionary");
}

DenseMatrix update_error(const DenseMatrix& G, ErrorModel model, double lambda, double mu) {
  switch (model) {
    case ErrorModel::l21: return column_shrink(G, lambda / mu);
    case ErrorModel::l1: return entry_shrink(G, lambda / mu);
    // argmin lambda |E|_F^2 + mu/2 |E - G|_F^2
    case ErrorModel::frobenius_sq: return (mu / (2.0 * lambda + mu)) * G;
  }
  return G;
}

}  // namespace

std::string_view to_string(ErrorModel model) {
  switch (model) {
    case ErrorModel::l21: return "l21";
    case ErrorModel::l1: return "l1";
    case ErrorModel::frobenius_sq: return "frobenius_sq";
  }
  return "unknown";
}

ErrorModel parse_error_model(std::string_view name) {
  if (name == "l21") return ErrorModel::l21;
  if (name == "l1") return ErrorModel::l1;
  if (name == "frobenius_sq" || name == "fro") return ErrorModel::frobenius_sq;
  throw ArgumentError("unknown error model '" + std::string(name) + "'");
}

double error_norm(const DenseMatrix& E, ErrorModel model) {
  switch (model) {
    case ErrorModel::l21: return norm(E, MatrixNormKind::l21);
    case ErrorModel::l1: return norm(E, MatrixNormKind::l1);
    case ErrorModel::frobenius_sq: return E.squaredNorm();
  }
  return 0.0;
}

void SolverOptions::validate() const {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw ArgumentError("lambda must be positive");
  if (!(mu_init > 0)) throw ArgumentError("mu_init must be positive");
  if (!(mu_max > 0)) throw ArgumentError("mu_max must be positive");
  if (mu_init > mu_max) throw ArgumentError("mu_init must not exceed mu_max");
  if (!(rho > 1)) throw ArgumentError("rho must be greater than 1");
  if (!(eps > 0)) throw ArgumentError("eps must be positive");
  if (max_iters < 1) throw ArgumentError("max_iters must be at least 1");
}

double mu_at_iteration(const SolverOptions& opts, int k) {
  double mu = opts.mu_init;
  for (int i = 0; i < k; ++i) mu = std::min(opts.rho * mu, opts.mu_max);
  return mu;
}

LrrSolution solve_lrr(const DenseMatrix& X, const DenseMatrix& A, ErrorModel model,
                      const SolverOptions& opts) {
  check_shapes(X, A);
  opts.validate();

  const Eigen::Index d = X.rows();
  const Eigen::Index n = X.cols();
  const Eigen::Index m = A.cols();

  // I + A^T A is constant across iterations; factor it once.
  DenseMatrix gram = DenseMatrix::Identity(m, m);
  gram.selfadjointView<Eigen::Lower>().rankUpdate(A.transpose());
  gram.triangularView<Eigen::StrictlyUpper>() = gram.transpose();
  const Eigen::LLT<DenseMatrix> chol(gram);
  if (chol.info() != Eigen::Success) {
    throw NumericalError("Cholesky factorization of I + A^T A failed");
  }

  DenseMatrix Z = DenseMatrix::Zero(m, n);
  DenseMatrix J = DenseMatrix::Zero(m, n);
  DenseMatrix E = DenseMatrix::Zero(d, n);
  DenseMatrix Y1 = DenseMatrix::Zero(d, n);
  DenseMatrix Y2 = DenseMatrix::Zero(m, n);
  DenseMatrix AZ(d, n);
  DenseMatrix rhs(m, n);
  double mu = opts.mu_init;

  LrrSolution sol;
  sol.objective_trace.reserve(static_cast<std::size_t>(std::min(opts.max_iters, 1000)));

  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    // 1. J = argmin (1/mu)|J|_* + 1/2 |J - (Z + Y2/mu)|_F^2
    double nuclear_J = 0.0;
    J = svt(Z + Y2 / mu, 1.0 / mu, nuclear_J);

    // 2. Z = (I + A^T A)^{-1} (A^T (X - E) + J + (A^T Y1 - Y2) / mu)
    rhs.noalias() = A.transpose() * (X - E + Y1 / mu);
    rhs += J - Y2 / mu;
    Z = chol.solve(rhs);

    // 3. E = argmin (lambda/mu)|E| + 1/2 |E - (X - AZ + Y1/mu)|_F^2
    AZ.noalias() = A * Z;
    E = update_error(X - AZ + Y1 / mu, model, opts.lambda, mu);

    // 4. multipliers
    const DenseMatrix r_constraint = X - AZ - E;
    const DenseMatrix r_split = Z - J;
    Y1 += mu * r_constraint;
    Y2 += mu * r_split;

    // 5. penalty
    mu = std::min(opts.rho * mu, opts.mu_max);

    sol.objective_trace.push_back(nuclear_J + opts.lambda * error_norm(E, model));
    sol.iterations = iter;
    sol.residual_constraint = r_constraint.cwiseAbs().maxCoeff();
    sol.residual_split = r_split.cwiseAbs().maxCoeff();

    // 6. convergence
    if (sol.residual_constraint < opts.eps && sol.residual_split < opts.eps) {
      sol.converged = true;
      break;
    }
  }

  sol.objective = norm(Z, MatrixNormKind::nuclear) + opts.lambda * error_norm(E, model);
  sol.Z = std::move(Z);
  sol.E = std::move(E);
  return sol;
}

DenseMatrix solve_lrr_clean(const DenseMatrix& X, const DenseMatrix& A) {
  check_shapes(X, A);
  if (A.isZero(0.0)) throw DegenerateInputError("solve_lrr_clean: dictionary is zero");

  DenseMatrix Z = pseudoinverse(A) * X;
  const double residual = (X - A * Z).norm();
  const double scale = X.norm();
  if (residual > kCleanFeasibilityTol * scale) {
    throw FeasibilityError("X is not in the column space of the dictionary (residual " +
                               std::to_string(residual / scale) + " relative)",
                           residual);
  }
  return Z;
}

ReducedDictionary reduce_dictionary(const DenseMatrix& A) {
  if (A.size() == 0 || A.isZero(0.0)) {
    throw DegenerateInputError("reduce_dictionary: dictionary is zero");
  }
  require_finite(A, "dictionary");
  const SkinnySvd f = skinny_svd(A);
  ReducedDictionary out;
  out.P_star = f.V;
  out.B = A * f.V;
  out.r_A = f.rank();
  return out;
}

LrrSolution solve_lrr_reduced(const DenseMatrix& X, const ReducedDictionary& dict,
                              ErrorModel model, const SolverOptions& opts) {
  LrrSolution sol = solve_lrr(X, dict.B, model, opts);
  // |P* Z~|_* = |Z~|_* since P* has orthonormal columns; the objective is unchanged.
  sol.Z = dict.P_star * sol.Z;
  sol.used_reduced_dictionary = true;
  return sol;
}

bool prefer_reduced(Eigen::Index r_A, Eigen::Index d, Eigen::Index n_A) {
  return static_cast<double>(r_A) <
         kReducedRankFraction * static_cast<double>(std::min(d, n_A));
}

LrrSolution solve_lrr_self(const DenseMatrix& X, ErrorModel model, const SolverOptions& opts) {
  if (X.size() == 0 || X.isZero(0.0)) throw DegenerateInputError("solve_lrr_self: X is zero");
  require_finite(X, "X");
  opts.validate();

  const ReducedDictionary dict = reduce_dictionary(X);
  if (prefer_reduced(dict.r_A, X.rows(), X.cols())) {
    return solve_lrr_reduced(X, dict, model, opts);
  }
  return solve_lrr(X, X, model, opts);
}

double lambda_outlier_default(const DenseMatrix& X, double gamma_star) {
  if (!(gamma_star > 0.0) || gamma_star > 1.0) {
    throw ArgumentError("gamma_star must lie in (0, 1]");
  }
  const double spectral = norm(X, MatrixNormKind::spectral);
  if (spectral == 0.0) throw DegenerateInputError("lambda_outlier_default: X is zero");
  return 3.0 / (7.0 * spectral * std::sqrt(gamma_star * static_cast<double>(X.cols())));
}

}  // namespace lrr
