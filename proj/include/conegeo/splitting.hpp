#pragma once

// Conditional expectations (pinchings and unitary group averages), the
// splitting a = e^Y e^X e^Y of positive elements and g = u e^Z e^Y of
// invertibles along an expectation, the canonical unitarizer built from the
// splitting, and the norm-product minimality report.

#include <functional>
#include <vector>

#include "conegeo/groups.hpp"
#include "conegeo/unitarize.hpp"

namespace conegeo {

enum class ExpectationKind { Pinching, GroupAverage };

/// A norm-one idempotent projection E onto a subalgebra, carried with
/// orthonormal Hermitian bases of its range and of its Hermitian kernel
/// (orthogonal complement under Re tr(XY)).
class CondExpectation {
 public:
  int dim() const { return dim_; }
  ExpectationKind kind() const { return kind_; }
  const std::vector<CMatrix>& range_basis() const { return range_basis_; }
  const std::vector<CMatrix>& kernel_basis() const { return kernel_basis_; }
  const RMatrix& range_coords() const { return range_coords_; }

  CMatrix apply(const CMatrix& x) const { return apply_(x); }
  /// Frobenius distance from a Hermitian h to the range span.
  double range_residual(const CMatrix& h) const;

  friend CondExpectation pinching_expectation(const CMatrix& p,
                                              const Tolerances& tol);
  friend CondExpectation pinching_expectation(
      const std::vector<CMatrix>& projections, const Tolerances& tol);
  friend CondExpectation group_average_expectation(const MatrixGroup& h,
                                                   const Tolerances& tol);
  friend CondExpectation conjugated_expectation(const CondExpectation& e,
                                                const CMatrix& u,
                                                const Tolerances& tol);

 private:
  int dim_ = 0;
  ExpectationKind kind_ = ExpectationKind::Pinching;
  std::vector<CMatrix> range_basis_;
  std::vector<CMatrix> kernel_basis_;
  RMatrix range_coords_;
  std::function<CMatrix(const CMatrix&)> apply_;

  void finish_bases(const RMatrix& range_cols, const Tolerances& tol);
};

/// E(X) = pXp + (id-p)X(id-p) for an orthogonal projection p. The restriction
/// of I-E to Hermitians has operator norm exactly one.
CondExpectation pinching_expectation(const CMatrix& p,
                                     const Tolerances& tol = {});

/// E(X) = sum_i q_i X q_i for mutually orthogonal projections summing to id;
/// a direct sum of two-corner pinchings when the q_i refine a block split.
CondExpectation pinching_expectation(const std::vector<CMatrix>& projections,
                                     const Tolerances& tol = {});

/// E(X) = (1/|H|) sum_h h X h^* for a finite unitary group; the range is the
/// commutant and E is trace compatible.
CondExpectation group_average_expectation(const MatrixGroup& h,
                                          const Tolerances& tol = {});

/// Ad_u o E o Ad_{u^*} for unitary u.
CondExpectation conjugated_expectation(const CondExpectation& e,
                                       const CMatrix& u,
                                       const Tolerances& tol = {});

/// a = e^Y e^X e^Y with Y in the range of E and E(X) = 0. Fixed-point
/// iteration Y <- Y + damping * E(log(e^{-Y} a e^{-Y})) starting from
/// Y = E(log a)/2, damping 1/2 dropping to 1/4 when the kernel residual
/// increases; stops at ||E(X)|| <= 1e-11 within 10000 iterations or throws
/// NoConvergence carrying the final residual.
struct PositiveSplit {
  HermitianMatrix x;
  HermitianMatrix y;
  int iterations = 0;
};
PositiveSplit pr_split_positive(const PosDefMatrix& a,
                                const CondExpectation& e,
                                const Tolerances& tol = {});

/// g = u e^Z e^Y with u unitary, Z in the kernel and Y in the range of E,
/// obtained by splitting g^* g = e^Y e^{2Z} e^Y.
struct SplitTriple {
  UnitaryMatrix u;
  HermitianMatrix z;
  HermitianMatrix y;
  int iterations = 0;
};
SplitTriple pr_split_invertible(const InvertibleMatrix& g,
                                const CondExpectation& e,
                                const Tolerances& tol = {});

/// Canonical unitarizer of pi_1 = Ad_g o pi_0: with g = u e^{Z0} e^{Y0},
/// X0 = u Z0 u^* and rho = Ad_u o pi_0 satisfy Ad_{e^{-X0}} o pi_1 = rho and
/// X0 in Ker(Ad_u o E o Ad_{u^*}). Requires the range of E to match the
/// commutant of the pi_0 image.
struct CanonicalUnitarizer {
  HermitianMatrix x0;
  Representation rho;
  UnitaryMatrix u;
  double unitarity_residual = 0.0;  // of Ad_{e^{-X0}} o pi_1 on generators
  double kernel_residual = 0.0;     // ||E_rho(X0)||
};
CanonicalUnitarizer canonical_unitarizer(const InvertibleMatrix& g,
                                         const Representation& pi0,
                                         const CondExpectation& e,
                                         const Tolerances& tol = {});

/// Estimate of ||(I-E)|_{Hermitian}|| with respect to the operator norm:
/// best of `samples` random Hermitians plus a local ascent refinement.
/// Returns {best found, analytic upper bound} (1 for pinchings, 2 else).
std::pair<double, double> complement_norm_estimate(const CondExpectation& e,
                                                   int samples,
                                                   CounterRng& rng);

/// Norm-product minimality report: lhs = ||e^{X0}|| ||e^{-X0}||, rhs = the
/// similarity number of the pi_1 image group over the block-diagonal
/// algebra, and the intermediate exp(dist(e^{-2 X0}, fixed cone of rho)).
struct ThmacsReport {
  double lhs = 1.0;
  double rhs = 1.0;
  double ratio = 1.0;
  double intermediate = 1.0;
  double unitarity_residual = 0.0;
  double complement_norm = 1.0;  // exact for pinching-compatible setups
};
ThmacsReport thmacs_check(const InvertibleMatrix& g, const Representation& pi0,
                          const CondExpectation& e,
                          const std::vector<int>& block_sizes,
                          const Tolerances& tol = {});

}  // namespace conegeo
