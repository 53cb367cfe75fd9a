#pragma once

// Finite matrix groups from generators: closure enumeration, orbits and
// orbit diameters, the size norm sup ||h||, the fixed cone P^H through the
// linear fixed equation h a h* = a, and commutants of unitary groups.

#include <optional>
#include <vector>

#include "conegeo/geometry.hpp"
#include "conegeo/herm_space.hpp"
#include "conegeo/matcore.hpp"

namespace conegeo {

constexpr int kDefaultClosureCap = 10000;

/// A finite group of invertible matrices: generators plus the enumerated
/// closure (deduplicated within tol.group). Immutable after construction.
class MatrixGroup {
 public:
  int dim() const { return dim_; }
  const std::vector<CMatrix>& generators() const { return generators_; }
  const std::vector<CMatrix>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool is_unitary(const Tolerances& tol = {}) const;

  /// Index of an element equal to m within tol.group, or nullopt.
  std::optional<int> find(const CMatrix& m, const Tolerances& tol = {}) const;

  friend MatrixGroup close_group(const std::vector<CMatrix>& generators,
                                 int cap, const Tolerances& tol);

 private:
  int dim_ = 0;
  std::vector<CMatrix> generators_;
  std::vector<CMatrix> elements_;  // elements_[0] is the identity
};

/// Smallest product-closed set containing the generators (hence the
/// generated subgroup, for a finite group). Throws CapExceeded when the
/// enumeration passes `cap`, which also flags numeric drift duplicating
/// elements.
MatrixGroup close_group(const std::vector<CMatrix>& generators,
                        int cap = kDefaultClosureCap,
                        const Tolerances& tol = {});

/// |H| = sup over elements of the operator norm.
double group_size_norm(const MatrixGroup& h);

/// Orbit {h a h* : h in H}, deduplicated within tol.group.
std::vector<PosDefMatrix> orbit(const MatrixGroup& h, const PosDefMatrix& a,
                                const Tolerances& tol = {});

/// D_H(a): max pairwise distance over the orbit of a.
double orbit_diameter(const MatrixGroup& h, const PosDefMatrix& a,
                      MetricKind m, const Tolerances& tol = {});

/// The linear space V = {a Hermitian : h a h* = a for all generators h},
/// with an orthonormal basis under Re tr(XY). P^H is the positive part of
/// span(basis). Fixing the generators fixes the whole group.
class FixedCone {
 public:
  int dim() const { return dim_; }
  const std::vector<CMatrix>& basis() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const RMatrix& coords() const { return coords_; }  // columns = basis coords
  const std::vector<CMatrix>& group_generators() const { return generators_; }

  /// Frobenius distance from h to its orthogonal projection onto the span.
  double span_residual(const CMatrix& h) const;
  /// Orthogonal projection onto the span (as a Hermitian matrix).
  CMatrix project(const CMatrix& h) const;

  friend FixedCone fixed_cone(const std::vector<CMatrix>& generators,
                              const std::vector<int>& block_sizes,
                              const Tolerances& tol);

 private:
  int dim_ = 0;
  std::vector<CMatrix> basis_;
  RMatrix coords_;
  std::vector<CMatrix> generators_;
};

/// Fixed cone of the group generated by `generators`. When `block_sizes` is
/// nonempty the solution space is additionally constrained to the block
/// diagonal algebra with those block sizes (in order), which realizes the
/// fixed cone inside a diagonal subalgebra.
FixedCone fixed_cone(const std::vector<CMatrix>& generators,
                     const std::vector<int>& block_sizes = {},
                     const Tolerances& tol = {});

/// Orthonormal basis of {X Hermitian : hX = Xh for all h}; for a unitary
/// group this is the fixed-cone space. Throws NotUnitaryGroup otherwise.
std::vector<CMatrix> commutant_basis(const MatrixGroup& h,
                                     const Tolerances& tol = {});

/// An abstract finite group (multiplication table over element ids) together
/// with a matrix image per id.
struct Representation {
  std::vector<std::vector<int>> table;  // table[i][j] = id of g_i * g_j
  int identity = 0;
  std::vector<CMatrix> images;

  int order() const { return static_cast<int>(table.size()); }
  int dim() const {
    return images.empty() ? 0 : static_cast<int>(images.front().rows());
  }

  /// Max over all pairs of ||image(xy) - image(x) image(y)||.
  double homomorphism_residual() const;
  /// Group generated by the images.
  MatrixGroup image_group(int cap = kDefaultClosureCap,
                          const Tolerances& tol = {}) const;
};

}  // namespace conegeo
