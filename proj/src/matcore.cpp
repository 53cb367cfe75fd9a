#include "conegeo/matcore.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace conegeo {

void Tolerances::set(const std::string& key, double value) {
  if (key == "herm") herm = value;
  else if (key == "unitary") unitary = value;
  else if (key == "recon") recon = value;
  else if (key == "posdef_floor") posdef_floor = value;
  else if (key == "invertible_floor") invertible_floor = value;
  else if (key == "group") group = value;
  else if (key == "fix") fix = value;
  else if (key == "unitarize") unitarize = value;
  else if (key == "split") split = value;
  else if (key == "cc") cc = value;
  else if (key == "sim") sim = value;
  else if (key == "nullspace") nullspace = value;
  else if (key == "eig") eig = value;
  else if (key == "iso") iso = value;
  else throw BadSpec("unknown tolerance key: " + key);
}

double frobenius_norm(const CMatrix& m) { return m.norm(); }

double operator_norm(const CMatrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

HermitianMatrix::HermitianMatrix(const CMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw NonHermitian("matrix is not square");
  const double scale = std::max(1.0, m.norm());
  const double defect = (m - m.adjoint()).norm();
  if (defect > tol.herm * scale)
    throw NonHermitian("hermiticity defect " + std::to_string(defect));
  m_ = (m + m.adjoint()) / 2.0;
}

void herm_eig_raw(const CMatrix& m, RVector& evals, CMatrix& frame) {
  const CMatrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  evals = es.eigenvalues();
  frame = es.eigenvectors();
}

RVector herm_eigenvalues(const CMatrix& m) {
  const CMatrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

CMatrix herm_log(const CMatrix& m) {
  RVector evals;
  CMatrix frame;
  herm_eig_raw(m, evals, frame);
  RVector logs(evals.size());
  for (int i = 0; i < evals.size(); ++i) {
    if (!(evals(i) > 0.0))
      throw NotPositiveDefinite("log of a non-positive matrix", evals(i));
    logs(i) = std::log(evals(i));
  }
  CMatrix out = frame * logs.asDiagonal() * frame.adjoint();
  return (out + out.adjoint()) / 2.0;
}

CMatrix herm_exp(const CMatrix& m) {
  RVector evals;
  CMatrix frame;
  herm_eig_raw(m, evals, frame);
  RVector exps = evals.array().exp();
  CMatrix out = frame * exps.asDiagonal() * frame.adjoint();
  return (out + out.adjoint()) / 2.0;
}

PosDefMatrix::PosDefMatrix(const CMatrix& m, const Tolerances& tol)
    : PosDefMatrix(HermitianMatrix(m, tol), tol) {}

PosDefMatrix::PosDefMatrix(const HermitianMatrix& h, const Tolerances& tol) {
  herm_eig_raw(h.mat(), evals_, frame_);
  const double lo = evals_(0);
  const double hi = evals_(evals_.size() - 1);
  if (!(lo > tol.posdef_floor * std::max(hi, 0.0)) || !(lo > 0.0))
    throw NotPositiveDefinite(
        "matrix fails the positivity floor (min eigenvalue " +
            std::to_string(lo) + ")",
        lo);
  m_ = h.mat();
}

CMatrix PosDefMatrix::power(double t) const {
  RVector powered(evals_.size());
  for (int i = 0; i < evals_.size(); ++i) powered(i) = std::pow(evals_(i), t);
  CMatrix out = frame_ * powered.asDiagonal() * frame_.adjoint();
  return (out + out.adjoint()) / 2.0;
}

CMatrix PosDefMatrix::log() const {
  RVector logs = evals_.array().log();
  CMatrix out = frame_ * logs.asDiagonal() * frame_.adjoint();
  return (out + out.adjoint()) / 2.0;
}

InvertibleMatrix::InvertibleMatrix(const CMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw NotInvertible("matrix is not square");
  Eigen::JacobiSVD<CMatrix> svd(m);
  sigma_max_ = svd.singularValues()(0);
  sigma_min_ = svd.singularValues()(m.rows() - 1);
  if (!(sigma_min_ > tol.invertible_floor * sigma_max_) || !(sigma_min_ > 0.0))
    throw NotInvertible("matrix is numerically singular (sigma_min " +
                        std::to_string(sigma_min_) + ")");
  m_ = m;
}

UnitaryMatrix::UnitaryMatrix(const CMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw NotUnitary("matrix is not square");
  const CMatrix gram = m.adjoint() * m;
  const double defect =
      (gram - CMatrix::Identity(m.rows(), m.cols())).norm();
  if (defect > tol.unitary * std::max(1.0, gram.norm()))
    throw NotUnitary("unitarity defect " + std::to_string(defect));
  m_ = m;
}

std::pair<RVector, UnitaryMatrix> herm_eig(const HermitianMatrix& h,
                                           const Tolerances& tol) {
  RVector evals;
  CMatrix frame;
  herm_eig_raw(h.mat(), evals, frame);
  return {evals, UnitaryMatrix(frame, tol)};
}

HermitianMatrix mat_fn(const PosDefMatrix& a,
                       const std::function<double(double)>& f,
                       const Tolerances& tol) {
  RVector mapped(a.eigenvalues().size());
  for (int i = 0; i < mapped.size(); ++i) {
    const double v = f(a.eigenvalues()(i));
    if (!std::isfinite(v))
      throw DomainError("scalar map undefined at eigenvalue " +
                        std::to_string(a.eigenvalues()(i)));
    mapped(i) = v;
  }
  CMatrix out = a.frame() * mapped.asDiagonal() * a.frame().adjoint();
  return HermitianMatrix((out + out.adjoint()) / 2.0, tol);
}

PosDefMatrix exp_herm(const HermitianMatrix& x, const Tolerances& tol) {
  return PosDefMatrix(herm_exp(x.mat()), tol);
}

PosDefMatrix validate_posdef(const HermitianMatrix& h, const Tolerances& tol) {
  return PosDefMatrix(h, tol);
}

}  // namespace conegeo
