#pragma once

#include "lrr/linalg.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace lrr {

/// Penalty on the error term E.
///  l21          : sum of column norms, for sample-specific corruptions and outliers
///  l1           : sum of absolute entries, for random entry corruptions
///  frobenius_sq : squared Frobenius norm, for small dense noise
enum class ErrorModel { l21, l1, frobenius_sq };

std::string_view to_string(ErrorModel model);
ErrorModel parse_error_model(std::string_view name);

/// Value of the chosen error penalty, without the lambda factor.
double error_norm(const DenseMatrix& E, ErrorModel model);

struct SolverOptions {
  double lambda = 1.0;
  double mu_init = 1e-6;
  double mu_max = 1e6;
  double rho = 1.1;
  double eps = 1e-8;
  int max_iters = 1000;
  std::uint64_t seed = 0;  // unused by the deterministic solver

  /// Throws ArgumentError when a field is out of range.
  void validate() const;
};

struct LrrSolution {
  DenseMatrix Z;
  DenseMatrix E;
  int iterations = 0;
  bool converged = false;
  double residual_constraint = 0.0;  // ||X - AZ - E||_inf
  double residual_split = 0.0;       // ||Z - J||_inf
  double objective = 0.0;            // ||Z||_* + lambda * error_norm(E)
  std::vector<double> objective_trace;
  bool used_reduced_dictionary = false;
};

/// Orthonormal basis P of span(A^T) with B = A P of full column rank.
struct ReducedDictionary {
  DenseMatrix B;
  DenseMatrix P_star;
  Eigen::Index r_A = 0;
};

/// min ||Z||_* + lambda * |E|  s.t.  X = A Z + E, by inexact ALM.
LrrSolution solve_lrr(const DenseMatrix& X, const DenseMatrix& A, ErrorModel model,
                      const SolverOptions& opts);

/// Clean-data minimizer Z* = pinv(A) X. Throws FeasibilityError when X is not
/// in the column space of A (relative residual above 1e-6).
DenseMatrix solve_lrr_clean(const DenseMatrix& X, const DenseMatrix& A);

/// solve_lrr(X, X, ...) with the reduced-dictionary fast path when it pays off.
LrrSolution solve_lrr_self(const DenseMatrix& X, ErrorModel model, const SolverOptions& opts);

ReducedDictionary reduce_dictionary(const DenseMatrix& A);

/// Solves the problem over B = A P* and maps the coefficients back with P*.
LrrSolution solve_lrr_reduced(const DenseMatrix& X, const ReducedDictionary& dict,
                              ErrorModel model, const SolverOptions& opts);

/// True when the reduced problem is expected to be cheaper than the direct one.
bool prefer_reduced(Eigen::Index r_A, Eigen::Index d, Eigen::Index n_A);

/// Outlier-exactness parameter 3 / (7 ||X|| sqrt(gamma_star n)).
double lambda_outlier_default(const DenseMatrix& X, double gamma_star);

/// mu after k updates: min(rho^k mu_init, mu_max).
double mu_at_iteration(const SolverOptions& opts, int k);

}  // namespace lrr
