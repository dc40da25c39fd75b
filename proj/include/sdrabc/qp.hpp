#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sdrabc/linalg.hpp"

namespace sdrabc {

/// Dual of one sliced SVM:
///
///   min_alpha  -1'alpha + (1/4) alpha' M alpha
///   s.t.       0 <= alpha <= cost,  y_tilde' alpha = 0
///
/// with M = diag(y_tilde) P diag(y_tilde) symmetric PSD and y_tilde in {-1,+1}.
struct SvmDualProblem {
  Matrix m;
  std::vector<double> y_tilde;
  double cost = 1.0;

  void validate() const;
};

struct SvmDualSolution {
  std::vector<double> alpha;
  double objective = 0.0;
  double kkt_violation = 0.0;
  std::size_t iterations = 0;
};

/// Solver ran out of iterations; carries the best iterate found.
class QpConvergenceError : public std::runtime_error {
 public:
  QpConvergenceError(const std::string& what, SvmDualSolution best)
      : std::runtime_error(what), best_iterate(std::move(best)) {}
  SvmDualSolution best_iterate;
};

double qp_objective(const SvmDualProblem& problem, std::span<const double> alpha);

/// Largest first-order optimality gap over feasible coordinate pairs: with
/// F_i = -y_i * grad_i, the gap is max(F over coordinates free to move up)
/// minus min(F over coordinates free to move down), clamped at zero. Zero iff
/// some multiplier nu certifies KKT stationarity.
double kkt_violation(const SvmDualProblem& problem, std::span<const double> alpha);

/// SMO: repeatedly picks the maximal-violating pair and solves the 2-variable
/// subproblem exactly, clipped to the box. max_iter == 0 means 100 m^2.
SvmDualSolution solve_sliced_svm_dual(const SvmDualProblem& problem,
                                      double tol = 1e-8, std::size_t max_iter = 0);

}  // namespace sdrabc
