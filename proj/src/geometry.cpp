#include "conegeo/geometry.hpp"

#include <cmath>

namespace conegeo {

namespace {

void check_same_dim(int a, int b) {
  if (a != b)
    throw DimMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                      std::to_string(b));
}

double log_norm(const RVector& evals, MetricKind m) {
  double op = 0.0, fr = 0.0;
  for (int i = 0; i < evals.size(); ++i) {
    if (!(evals(i) > 0.0))
      throw NotPositiveDefinite("pencil eigenvalue not positive", evals(i));
    const double l = std::log(evals(i));
    op = std::max(op, std::abs(l));
    fr += l * l;
  }
  return m == MetricKind::OperatorNorm ? op : std::sqrt(fr);
}

}  // namespace

double dist(const PosDefMatrix& a, const PosDefMatrix& b, MetricKind m) {
  check_same_dim(a.dim(), b.dim());
  const CMatrix isq = a.inv_sqrt();
  const RVector evals = herm_eigenvalues(isq * b.mat() * isq);
  return log_norm(evals, m);
}

Geodesic::Geodesic(const PosDefMatrix& a, const PosDefMatrix& b,
                   const Tolerances& tol)
    : a_(a), b_(b), tol_(tol) {
  check_same_dim(a.dim(), b.dim());
  sqrt_a_ = a.sqrt();
  const CMatrix isq = a.inv_sqrt();
  herm_eig_raw(isq * b.mat() * isq, mid_evals_, mid_frame_);
}

PosDefMatrix Geodesic::eval(double t) const {
  RVector powered(mid_evals_.size());
  for (int i = 0; i < mid_evals_.size(); ++i)
    powered(i) = std::pow(mid_evals_(i), t);
  const CMatrix mid = mid_frame_ * powered.asDiagonal() * mid_frame_.adjoint();
  CMatrix out = sqrt_a_ * mid * sqrt_a_;
  return PosDefMatrix((out + out.adjoint()) / 2.0, tol_);
}

PosDefMatrix geodesic_eval(const Geodesic& g, double t) { return g.eval(t); }

CMatrix act_raw(const CMatrix& g, const CMatrix& a) {
  CMatrix out = g * a * g.adjoint();
  return (out + out.adjoint()) / 2.0;
}

PosDefMatrix act(const InvertibleMatrix& g, const PosDefMatrix& a,
                 const Tolerances& tol) {
  check_same_dim(g.dim(), a.dim());
  return PosDefMatrix(act_raw(g.mat(), a.mat()), tol);
}

double banach_mazur_delta(const PosDefMatrix& a, const PosDefMatrix& b,
                          BanachMazurConvention convention) {
  check_same_dim(a.dim(), b.dim());
  if (convention == BanachMazurConvention::QuadraticFormPencil) {
    // sup_xi |log(<a xi,xi>/<b xi,xi>)| = max |log| generalized eigenvalue
    // of the pencil (a, b), reduced by congruence to b^{-1/2} a b^{-1/2}.
    const CMatrix isq = b.inv_sqrt();
    const RVector evals = herm_eigenvalues(isq * a.mat() * isq);
    return log_norm(evals, MetricKind::OperatorNorm);
  }
  // sup_xi |log(||a xi||/||b xi||)| = half the max |log| generalized
  // eigenvalue of the pencil (a^2, b^2).
  const PosDefMatrix b2(b.power(2.0));
  const CMatrix isq = b2.inv_sqrt();
  const RVector evals =
      herm_eigenvalues(isq * a.mat() * a.mat() * isq);
  return 0.5 * log_norm(evals, MetricKind::OperatorNorm);
}

double segal_residual(const HermitianMatrix& x, const HermitianMatrix& y) {
  check_same_dim(x.dim(), y.dim());
  const CMatrix half = herm_exp(x.mat() / 2.0);
  const CMatrix lhs = half * herm_exp(y.mat()) * half;
  const RVector lhs_evals = herm_eigenvalues(lhs);
  const RVector sum_evals = herm_eigenvalues(x.mat() + y.mat());
  // Both sides are positive definite, so the operator norm is the top
  // eigenvalue.
  return lhs_evals(lhs_evals.size() - 1) -
         std::exp(sum_evals(sum_evals.size() - 1));
}

double emi_residual(const PosDefMatrix& a, const HermitianMatrix& x,
                    const HermitianMatrix& y) {
  check_same_dim(a.dim(), x.dim());
  check_same_dim(a.dim(), y.dim());
  const CMatrix sq = a.sqrt();
  const CMatrix isq = a.inv_sqrt();
  const auto exp_at_a = [&](const CMatrix& z) {
    CMatrix out = sq * herm_exp(isq * z * isq) * sq;
    return PosDefMatrix((out + out.adjoint()) / 2.0);
  };
  const double lhs = dist(exp_at_a(x.mat()), exp_at_a(y.mat()),
                          MetricKind::OperatorNorm);
  const double rhs = operator_norm(isq * (x.mat() - y.mat()) * isq);
  return lhs - rhs;
}

}  // namespace conegeo
