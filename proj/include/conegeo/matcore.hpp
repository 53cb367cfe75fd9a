#pragma once

// Hermitian / positive-definite matrix types and the spectral matrix-function
// kernels every other module consumes. Eigendecomposition is the single
// primitive; sqrt/log/pow are always spectral so all modules share one error
// model. Values are immutable after construction and safe to share.

#include <functional>
#include <utility>
#include <vector>

#include "conegeo/types.hpp"

namespace conegeo {

class UnitaryMatrix;

double frobenius_norm(const CMatrix& m);
double operator_norm(const CMatrix& m);  // largest singular value

/// Hermitian matrix; entries are symmetrized once the tolerance check passes,
/// so downstream code may rely on exact hermiticity.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const CMatrix& m, const Tolerances& tol = {});
  static HermitianMatrix zero(int dim) {
    return HermitianMatrix(CMatrix::Zero(dim, dim));
  }

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& mat() const { return m_; }

 private:
  CMatrix m_;
};

/// Positive-definite matrix with cached spectral data. The relative floor
/// `posdef_floor` rejects numerically singular inputs at construction.
class PosDefMatrix {
 public:
  PosDefMatrix() = default;
  explicit PosDefMatrix(const CMatrix& m, const Tolerances& tol = {});
  explicit PosDefMatrix(const HermitianMatrix& h, const Tolerances& tol = {});
  static PosDefMatrix identity(int dim) {
    return PosDefMatrix(CMatrix::Identity(dim, dim));
  }

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& mat() const { return m_; }
  const RVector& eigenvalues() const { return evals_; }  // ascending
  const CMatrix& frame() const { return frame_; }

  double lambda_min() const { return evals_(0); }
  double lambda_max() const { return evals_(evals_.size() - 1); }
  double condition() const { return lambda_max() / lambda_min(); }

  /// Spectral power a^t through the cached frame.
  CMatrix power(double t) const;
  CMatrix sqrt() const { return power(0.5); }
  CMatrix inv_sqrt() const { return power(-0.5); }
  CMatrix inverse() const { return power(-1.0); }
  CMatrix log() const;

 private:
  CMatrix m_;
  RVector evals_;
  CMatrix frame_;
};

/// Invertible matrix with a cached condition estimate from extreme singular
/// values.
class InvertibleMatrix {
 public:
  InvertibleMatrix() = default;
  explicit InvertibleMatrix(const CMatrix& m, const Tolerances& tol = {});

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& mat() const { return m_; }
  double sigma_max() const { return sigma_max_; }
  double sigma_min() const { return sigma_min_; }
  double condition() const { return sigma_max_ / sigma_min_; }

 private:
  CMatrix m_;
  double sigma_max_ = 0.0;
  double sigma_min_ = 0.0;
};

class UnitaryMatrix {
 public:
  UnitaryMatrix() = default;
  explicit UnitaryMatrix(const CMatrix& m, const Tolerances& tol = {});

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& mat() const { return m_; }

 private:
  CMatrix m_;
};

/// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and an
/// orthonormal frame with frame * diag(eigenvalues) * frame^* = H.
std::pair<RVector, UnitaryMatrix> herm_eig(const HermitianMatrix& h,
                                           const Tolerances& tol = {});

/// Spectral calculus: f applied to the eigenvalues of a. Throws DomainError
/// if f is undefined (non-finite) at some eigenvalue.
HermitianMatrix mat_fn(const PosDefMatrix& a,
                       const std::function<double(double)>& f,
                       const Tolerances& tol = {});

/// exp on the self-adjoint tangent space; total, lands in the cone.
PosDefMatrix exp_herm(const HermitianMatrix& x, const Tolerances& tol = {});

/// Positivity gate: builds the cached spectral form or throws
/// NotPositiveDefinite carrying the offending minimum eigenvalue.
PosDefMatrix validate_posdef(const HermitianMatrix& h,
                             const Tolerances& tol = {});

// Internal helpers shared across modules (inputs assumed exactly Hermitian
// up to roundoff; matrices are symmetrized before the eigensolve).
RVector herm_eigenvalues(const CMatrix& m);
void herm_eig_raw(const CMatrix& m, RVector& evals, CMatrix& frame);
CMatrix herm_log(const CMatrix& m);   // spectral log of a PD matrix
CMatrix herm_exp(const CMatrix& m);   // spectral exp of a Hermitian matrix

}  // namespace conegeo
