#include "conegeo/groups.hpp"

#include <cmath>
#include <deque>
#include <map>

namespace conegeo {

namespace {

// Tolerance-aware set of matrices keyed by Frobenius norm for fast lookup.
class MatrixSet {
 public:
  explicit MatrixSet(double tol) : tol_(tol) {}

  std::optional<int> find(const CMatrix& m,
                          const std::vector<CMatrix>& store) const {
    const double key = m.norm();
    auto lo = index_.lower_bound(key - tol_);
    auto hi = index_.upper_bound(key + tol_);
    for (auto it = lo; it != hi; ++it)
      if ((store[it->second] - m).norm() <= tol_) return it->second;
    return std::nullopt;
  }

  void insert(const CMatrix& m, int id) { index_.emplace(m.norm(), id); }

 private:
  double tol_;
  std::multimap<double, int> index_;
};

void require_square_same_dim(const std::vector<CMatrix>& mats) {
  if (mats.empty()) throw EmptyInput("no generators given");
  const int n = static_cast<int>(mats.front().rows());
  for (const auto& m : mats)
    if (m.rows() != n || m.cols() != n)
      throw DimMismatch("generators must be square with a shared dimension");
}

}  // namespace

MatrixGroup close_group(const std::vector<CMatrix>& generators, int cap,
                        const Tolerances& tol) {
  require_square_same_dim(generators);
  const int n = static_cast<int>(generators.front().rows());
  for (const auto& g : generators) InvertibleMatrix gate(g, tol);

  MatrixGroup out;
  out.dim_ = n;
  out.generators_ = generators;
  out.elements_.push_back(CMatrix::Identity(n, n));

  MatrixSet seen(tol.group);
  seen.insert(out.elements_[0], 0);
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int at = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      CMatrix next = out.elements_[at] * g;
      if (seen.find(next, out.elements_)) continue;
      if (static_cast<int>(out.elements_.size()) >= cap)
        throw CapExceeded("closure exceeded cap " + std::to_string(cap) +
                          "; group not finite at this tolerance");
      const int id = static_cast<int>(out.elements_.size());
      out.elements_.push_back(std::move(next));
      seen.insert(out.elements_.back(), id);
      frontier.push_back(id);
    }
  }
  return out;
}

bool MatrixGroup::is_unitary(const Tolerances& tol) const {
  const CMatrix id = CMatrix::Identity(dim_, dim_);
  for (const auto& h : elements_) {
    const CMatrix gram = h.adjoint() * h;
    if ((gram - id).norm() > tol.unitary * std::max(1.0, gram.norm()))
      return false;
  }
  return true;
}

std::optional<int> MatrixGroup::find(const CMatrix& m,
                                     const Tolerances& tol) const {
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
    if ((elements_[i] - m).norm() <= tol.group) return i;
  return std::nullopt;
}

double group_size_norm(const MatrixGroup& h) {
  double best = 0.0;
  for (const auto& g : h.elements()) best = std::max(best, operator_norm(g));
  return best;
}

std::vector<PosDefMatrix> orbit(const MatrixGroup& h, const PosDefMatrix& a,
                                const Tolerances& tol) {
  if (h.dim() != a.dim()) throw DimMismatch("orbit: dimension mismatch");
  std::vector<CMatrix> points;
  MatrixSet seen(tol.group);
  for (const auto& g : h.elements()) {
    CMatrix p = act_raw(g, a.mat());
    if (seen.find(p, points)) continue;
    seen.insert(p, static_cast<int>(points.size()));
    points.push_back(std::move(p));
  }
  std::vector<PosDefMatrix> out;
  out.reserve(points.size());
  for (const auto& p : points) out.emplace_back(p, tol);
  return out;
}

double orbit_diameter(const MatrixGroup& h, const PosDefMatrix& a,
                      MetricKind m, const Tolerances& tol) {
  const auto pts = orbit(h, a, tol);
  double best = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, dist(pts[i], pts[j], m));
  return best;
}

double FixedCone::span_residual(const CMatrix& h) const {
  return (h - project(h)).norm();
}

CMatrix FixedCone::project(const CMatrix& h) const {
  const RVector v = herm_to_coords((h + h.adjoint()) / 2.0);
  return coords_to_herm(coords_ * (coords_.transpose() * v), dim_);
}

FixedCone fixed_cone(const std::vector<CMatrix>& generators,
                     const std::vector<int>& block_sizes,
                     const Tolerances& tol) {
  require_square_same_dim(generators);
  const int n = static_cast<int>(generators.front().rows());
  const int d = herm_space_dim(n);

  std::vector<RMatrix> blocks;
  for (const auto& g : generators) {
    InvertibleMatrix gate(g, tol);
    blocks.push_back(herm_linear_map_matrix(
        n, [&](const CMatrix& a) { return CMatrix(act_raw(g, a) - a); }));
  }
  if (!block_sizes.empty()) {
    int total = 0;
    for (int b : block_sizes) total += b;
    if (total != n)
      throw DimMismatch("block sizes must sum to the matrix dimension");
    // Constrain to the block-diagonal algebra: kill off-block coordinates.
    std::vector<int> block_of(n);
    int at = 0, id = 0;
    for (int b : block_sizes) {
      for (int i = 0; i < b; ++i) block_of[at++] = id;
      ++id;
    }
    RMatrix mask = RMatrix::Zero(d, d);
    int k = n;  // first n coords are diagonal entries, always in-block
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (block_of[i] != block_of[j]) {
          mask(k, k) = 1.0;
          mask(k + 1, k + 1) = 1.0;
        }
        k += 2;
      }
    blocks.push_back(std::move(mask));
  }

  RMatrix stacked(static_cast<int>(blocks.size()) * d, d);
  for (size_t i = 0; i < blocks.size(); ++i)
    stacked.middleRows(static_cast<int>(i) * d, d) = blocks[i];

  FixedCone cone;
  cone.dim_ = n;
  cone.generators_ = generators;
  cone.coords_ = nullspace_basis(stacked, tol.nullspace);
  cone.basis_ = herm_basis_from_coords(cone.coords_, n);
  return cone;
}

std::vector<CMatrix> commutant_basis(const MatrixGroup& h,
                                     const Tolerances& tol) {
  if (!h.is_unitary(tol))
    throw NotUnitaryGroup("commutant basis requires a unitary group");
  const int n = h.dim();
  const int d = herm_space_dim(n);
  const auto& gens = h.generators();
  RMatrix stacked(static_cast<int>(gens.size()) * d, d);
  for (size_t i = 0; i < gens.size(); ++i) {
    const CMatrix& g = gens[i];
    stacked.middleRows(static_cast<int>(i) * d, d) = herm_linear_map_matrix(
        n, [&](const CMatrix& a) { return CMatrix(g * a - a * g); });
  }
  return herm_basis_from_coords(nullspace_basis(stacked, tol.nullspace), n);
}

double Representation::homomorphism_residual() const {
  const int m = order();
  double worst = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      worst = std::max(
          worst, (images[table[i][j]] - images[i] * images[j]).norm());
  return worst;
}

MatrixGroup Representation::image_group(int cap, const Tolerances& tol) const {
  return close_group(images, cap, tol);
}

}  // namespace conegeo
