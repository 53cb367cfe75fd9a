#pragma once

// Metric geometry of the positive-definite cone: the operator-norm and
// Frobenius metrics, geodesics, the canonical isometric action g.a = g a g*,
// the Banach-Mazur distance between the induced quadratic forms, and the
// classical inequality residuals (Segal, exponential metric increasing).

#include "conegeo/matcore.hpp"

namespace conegeo {

enum class MetricKind { OperatorNorm, Frobenius };

/// d(a,b) = ||log(a^{-1/2} b a^{-1/2})|| in the chosen norm: max |log lambda|
/// for OperatorNorm, sqrt(sum log^2 lambda) for Frobenius.
double dist(const PosDefMatrix& a, const PosDefMatrix& b, MetricKind m);

/// Geodesic through a and b with cached a^{1/2}, a^{-1/2} and the spectral
/// data of a^{-1/2} b a^{-1/2}; eval(t) costs one spectral power. t outside
/// [0,1] extends the geodesic line.
class Geodesic {
 public:
  Geodesic(const PosDefMatrix& a, const PosDefMatrix& b,
           const Tolerances& tol = {});

  PosDefMatrix eval(double t) const;
  const PosDefMatrix& endpoint_a() const { return a_; }
  const PosDefMatrix& endpoint_b() const { return b_; }

 private:
  PosDefMatrix a_;
  PosDefMatrix b_;
  CMatrix sqrt_a_;
  RVector mid_evals_;   // eigenvalues of a^{-1/2} b a^{-1/2}
  CMatrix mid_frame_;
  Tolerances tol_;
};

PosDefMatrix geodesic_eval(const Geodesic& g, double t);

/// The canonical action g.a = g a g*; an isometry of both metrics.
PosDefMatrix act(const InvertibleMatrix& g, const PosDefMatrix& a,
                 const Tolerances& tol = {});
CMatrix act_raw(const CMatrix& g, const CMatrix& a);

/// Convention for the Banach-Mazur distance between the forms attached to
/// a and b. QuadraticFormPencil compares <a xi, xi> against <b xi, xi>
/// (generalized eigenvalues of the pencil (a, b)); NormSquaredPencil reads
/// the norm ||a xi|| literally and compares the pencil (a^2, b^2) at half
/// log scale. Both agree on commuting pairs; only the first matches the
/// metric d on non-commuting pairs, which the geometry suite records.
enum class BanachMazurConvention { QuadraticFormPencil, NormSquaredPencil };

double banach_mazur_delta(
    const PosDefMatrix& a, const PosDefMatrix& b,
    BanachMazurConvention convention =
        BanachMazurConvention::QuadraticFormPencil);

/// ||e^{X/2} e^Y e^{X/2}|| - ||e^{X+Y}||; nonnegative for all Hermitian X, Y.
double segal_residual(const HermitianMatrix& x, const HermitianMatrix& y);

/// dist(exp_a(X), exp_a(Y)) - ||a^{-1/2}(X-Y)a^{-1/2}|| with
/// exp_a(Z) = a^{1/2} exp(a^{-1/2} Z a^{-1/2}) a^{1/2}; nonnegative.
double emi_residual(const PosDefMatrix& a, const HermitianMatrix& x,
                    const HermitianMatrix& y);

}  // namespace conegeo
