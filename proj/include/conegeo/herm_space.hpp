#pragma once

// Real-linear coordinates on the space of n x n Hermitian matrices, using
// the orthonormal basis (under Re tr(XY)) of diagonal units and normalized
// symmetric / antisymmetric off-diagonal pairs. Shared by the fixed-cone
// solver, the span optimizer and the conditional expectations.

#include <functional>
#include <vector>

#include "conegeo/types.hpp"

namespace conegeo {

/// Real dimension of the Hermitian space: n^2.
inline int herm_space_dim(int n) { return n * n; }

/// Coordinates of a Hermitian matrix in the orthonormal basis.
RVector herm_to_coords(const CMatrix& h);

/// Inverse of herm_to_coords.
CMatrix coords_to_herm(const RVector& v, int n);

/// Orthonormal basis matrices of a coordinate subspace given by the columns
/// of `coords` (each column one basis vector).
std::vector<CMatrix> herm_basis_from_coords(const RMatrix& coords, int n);

/// Matrix of a real-linear map on Hermitian space, column j = coords of
/// map(B_j) for the j-th basis matrix.
RMatrix herm_linear_map_matrix(
    int n, const std::function<CMatrix(const CMatrix&)>& map);

/// Orthonormal basis (columns) of the null space of `stacked`, keeping right
/// singular vectors whose singular value is <= rel_threshold * sigma_max.
RMatrix nullspace_basis(const RMatrix& stacked, double rel_threshold);

/// Orthonormal basis (columns) of the column span of `vectors`, dropping
/// directions below rel_threshold * sigma_max.
RMatrix column_span_basis(const RMatrix& vectors, double rel_threshold);

/// Frobenius distance between the orthogonal projectors onto two subspaces
/// given by orthonormal columns; zero iff the subspaces agree.
double subspace_gap(const RMatrix& u, const RMatrix& v);

}  // namespace conegeo
