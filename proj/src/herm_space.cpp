#include "conegeo/herm_space.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace conegeo {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

RVector herm_to_coords(const CMatrix& h) {
  const int n = static_cast<int>(h.rows());
  RVector v(herm_space_dim(n));
  int k = 0;
  for (int i = 0; i < n; ++i) v(k++) = h(i, i).real();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      v(k++) = kSqrt2 * h(i, j).real();
      v(k++) = kSqrt2 * h(i, j).imag();
    }
  return v;
}

CMatrix coords_to_herm(const RVector& v, int n) {
  CMatrix h = CMatrix::Zero(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i) h(i, i) = v(k++);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double re = v(k++) / kSqrt2;
      const double im = v(k++) / kSqrt2;
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  return h;
}

std::vector<CMatrix> herm_basis_from_coords(const RMatrix& coords, int n) {
  std::vector<CMatrix> out;
  out.reserve(coords.cols());
  for (int j = 0; j < coords.cols(); ++j)
    out.push_back(coords_to_herm(coords.col(j), n));
  return out;
}

RMatrix herm_linear_map_matrix(
    int n, const std::function<CMatrix(const CMatrix&)>& map) {
  const int d = herm_space_dim(n);
  RMatrix out(d, d);
  RVector unit = RVector::Zero(d);
  for (int j = 0; j < d; ++j) {
    unit(j) = 1.0;
    out.col(j) = herm_to_coords(map(coords_to_herm(unit, n)));
    unit(j) = 0.0;
  }
  return out;
}

RMatrix nullspace_basis(const RMatrix& stacked, double rel_threshold) {
  Eigen::JacobiSVD<RMatrix> svd(stacked, Eigen::ComputeThinV);
  const RVector& sing = svd.singularValues();
  const double cutoff =
      sing.size() > 0 ? rel_threshold * std::max(sing(0), 1e-300) : 0.0;
  int rank = 0;
  for (int i = 0; i < sing.size(); ++i)
    if (sing(i) > cutoff) ++rank;
  const int cols = static_cast<int>(stacked.cols());
  // JacobiSVD with thin V returns min(rows, cols) right singular vectors;
  // when rows < cols the missing directions are null as well.
  const int computed = static_cast<int>(svd.matrixV().cols());
  if (computed == cols) return svd.matrixV().rightCols(cols - rank);
  // Complete the orthonormal system through a full-pivot factorization of
  // the projector complement.
  RMatrix v = svd.matrixV().leftCols(rank);
  RMatrix proj = RMatrix::Identity(cols, cols) - v * v.transpose();
  Eigen::JacobiSVD<RMatrix> psvd(proj, Eigen::ComputeThinU);
  return psvd.matrixU().leftCols(cols - rank);
}

RMatrix column_span_basis(const RMatrix& vectors, double rel_threshold) {
  if (vectors.cols() == 0) return RMatrix(vectors.rows(), 0);
  Eigen::JacobiSVD<RMatrix> svd(vectors, Eigen::ComputeThinU);
  const RVector& sing = svd.singularValues();
  const double cutoff = rel_threshold * std::max(sing(0), 1e-300);
  int rank = 0;
  for (int i = 0; i < sing.size(); ++i)
    if (sing(i) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

double subspace_gap(const RMatrix& u, const RMatrix& v) {
  if (u.rows() != v.rows())
    throw DimMismatch("subspace_gap: ambient dimensions differ");
  const RMatrix pu = u * u.transpose();
  const RMatrix pv = v * v.transpose();
  return (pu - pv).norm();
}

}  // namespace conegeo
