#pragma once

// Minimization of spectral objectives over the positive part of a real span
// of Hermitian matrices. The driver follows a projected-subgradient scheme
// with diminishing steps for the nonsmooth log-condition objective and then
// tightens the result with a log-sum-exp smoothing stage driven by BFGS,
// which the consistency tolerances of the similarity checks require.

#include <vector>

#include "conegeo/matcore.hpp"

namespace conegeo {

/// Generic dense BFGS with Armijo backtracking. `fg` returns the objective
/// and fills the gradient; +inf marks an infeasible point (the line search
/// backtracks out of it).
struct BfgsOutcome {
  RVector x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};
BfgsOutcome bfgs_minimize(
    const RVector& x0,
    const std::function<double(const RVector&, RVector&)>& fg,
    double grad_tol, int max_iter);

/// Optimization context over an orthonormal Hermitian basis.
class SpanProblem {
 public:
  SpanProblem(std::vector<CMatrix> basis, int dim);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<CMatrix>& basis() const { return basis_; }

  CMatrix assemble(const RVector& coords) const;
  /// Coordinates of the orthogonal projection of `h` onto the span.
  RVector project_coords(const CMatrix& h) const;
  /// Per-basis traces; also the coordinates of the projection of id.
  const RVector& trace_vector() const { return traces_; }

  /// Gradient coordinates of a spectral functional with eigenvalue weights
  /// w: grad_k = sum_i w_i / lambda_i * <u_i, B_k u_i>.
  RVector spectral_gradient(const RVector& evals, const CMatrix& frame,
                            const RVector& weights) const;

 private:
  std::vector<CMatrix> basis_;
  int dim_;
  RVector traces_;
};

struct SpanOptResult {
  RVector coords;
  double objective = 0.0;     // raw (unsmoothed) objective at coords
  int iterations = 0;
  bool converged = false;
};

/// Phase one: a strictly positive point of the span, found by subgradient
/// ascent of lambda_min on the trace-one slice (500 iterations). Throws
/// NotUnitarizable when the positive part is empty at tolerance.
RVector feasible_positive_point(const SpanProblem& prob,
                                const Tolerances& tol);

/// Minimize log lambda_max - log lambda_min over positive span elements.
/// Subgradient phase: steps 0.1/sqrt(k+1), extreme-eigenprojector means on
/// ties, projection onto the span with trace renormalization, stop when the
/// best value improves by less than 1e-10 over 50 iterations or at 20000
/// iterations. Then the smoothing polish. Coordinates are returned with
/// trace(A(c)) = dim.
SpanOptResult minimize_log_condition(const SpanProblem& prob,
                                     const Tolerances& tol);

/// Minimize sum_i log^2 lambda_i (squared Frobenius distance from id to the
/// span element) by smooth BFGS from the feasibility point.
SpanOptResult minimize_frobenius_logsq(const SpanProblem& prob,
                                       const Tolerances& tol);

}  // namespace conegeo
