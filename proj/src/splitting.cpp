#include "conegeo/splitting.hpp"

#include <cmath>
#include <limits>

namespace conegeo {

double CondExpectation::range_residual(const CMatrix& h) const {
  const RVector v = herm_to_coords((h + h.adjoint()) / 2.0);
  const RVector proj = range_coords_ * (range_coords_.transpose() * v);
  return (v - proj).norm();
}

void CondExpectation::finish_bases(const RMatrix& range_cols,
                                   const Tolerances& tol) {
  range_coords_ = column_span_basis(range_cols, tol.nullspace);
  range_basis_ = herm_basis_from_coords(range_coords_, dim_);
  // Hermitian kernel = orthogonal complement of the range under Re tr(XY)
  // (both expectations here are self-adjoint for that inner product).
  const RMatrix kernel_coords =
      nullspace_basis(range_coords_.transpose(), tol.nullspace);
  kernel_basis_ = herm_basis_from_coords(kernel_coords, dim_);
}

namespace {

RMatrix expectation_range_cols(int n,
                               const std::function<CMatrix(const CMatrix&)>& e) {
  const int d = herm_space_dim(n);
  RMatrix cols(d, d);
  RVector unit = RVector::Zero(d);
  for (int j = 0; j < d; ++j) {
    unit(j) = 1.0;
    const CMatrix img = e(coords_to_herm(unit, n));
    cols.col(j) = herm_to_coords((img + img.adjoint()) / 2.0);
    unit(j) = 0.0;
  }
  return cols;
}

void validate_projection(const CMatrix& p, const Tolerances& tol) {
  const double scale = std::max(1.0, p.norm());
  if (p.rows() != p.cols() || (p - p.adjoint()).norm() > tol.herm * scale ||
      (p * p - p).norm() > tol.herm * scale)
    throw NotProjection("matrix is not an orthogonal projection");
}

}  // namespace

CondExpectation pinching_expectation(const CMatrix& p, const Tolerances& tol) {
  validate_projection(p, tol);
  const int n = static_cast<int>(p.rows());
  const CMatrix q = CMatrix::Identity(n, n) - p;
  CondExpectation e;
  e.dim_ = n;
  e.kind_ = ExpectationKind::Pinching;
  const CMatrix pc = p;
  e.apply_ = [pc, q](const CMatrix& x) -> CMatrix {
    return pc * x * pc + q * x * q;
  };
  e.finish_bases(expectation_range_cols(n, e.apply_), tol);
  return e;
}

CondExpectation pinching_expectation(const std::vector<CMatrix>& projections,
                                     const Tolerances& tol) {
  if (projections.empty()) throw EmptyInput("no projections given");
  const int n = static_cast<int>(projections.front().rows());
  CMatrix total = CMatrix::Zero(n, n);
  for (const auto& p : projections) {
    validate_projection(p, tol);
    if (p.rows() != n) throw DimMismatch("projection dimension mismatch");
    total += p;
  }
  for (size_t i = 0; i < projections.size(); ++i)
    for (size_t j = i + 1; j < projections.size(); ++j)
      if ((projections[i] * projections[j]).norm() > tol.herm * n)
        throw NotProjection("projections are not mutually orthogonal");
  if ((total - CMatrix::Identity(n, n)).norm() > tol.herm * n)
    throw NotProjection("projections do not sum to the identity");
  CondExpectation e;
  e.dim_ = n;
  e.kind_ = ExpectationKind::Pinching;
  const std::vector<CMatrix> ps = projections;
  e.apply_ = [ps](const CMatrix& x) -> CMatrix {
    CMatrix out = CMatrix::Zero(x.rows(), x.cols());
    for (const auto& q : ps) out += q * x * q;
    return out;
  };
  e.finish_bases(expectation_range_cols(n, e.apply_), tol);
  return e;
}

CondExpectation group_average_expectation(const MatrixGroup& h,
                                          const Tolerances& tol) {
  if (!h.is_unitary(tol))
    throw NotUnitaryGroup("group averaging requires a unitary group");
  CondExpectation e;
  e.dim_ = h.dim();
  e.kind_ = ExpectationKind::GroupAverage;
  const std::vector<CMatrix> elements = h.elements();
  e.apply_ = [elements](const CMatrix& x) -> CMatrix {
    CMatrix out = CMatrix::Zero(x.rows(), x.cols());
    for (const auto& g : elements) out += g * x * g.adjoint();
    return out / static_cast<double>(elements.size());
  };
  e.finish_bases(expectation_range_cols(h.dim(), e.apply_), tol);
  return e;
}

CondExpectation conjugated_expectation(const CondExpectation& e,
                                       const CMatrix& u,
                                       const Tolerances& tol) {
  UnitaryMatrix gate(u, tol);
  CondExpectation out;
  out.dim_ = e.dim_;
  out.kind_ = e.kind_;
  const auto inner = e.apply_;
  const CMatrix uc = u;
  out.apply_ = [inner, uc](const CMatrix& x) -> CMatrix {
    return uc * inner(uc.adjoint() * x * uc) * uc.adjoint();
  };
  out.finish_bases(expectation_range_cols(out.dim_, out.apply_), tol);
  return out;
}

PositiveSplit pr_split_positive(const PosDefMatrix& a,
                                const CondExpectation& e,
                                const Tolerances& tol) {
  if (a.dim() != e.dim())
    throw DimMismatch("pr_split_positive: dimension mismatch");
  const auto sym = [](const CMatrix& m) -> CMatrix {
    return (m + m.adjoint()) / 2.0;
  };
  CMatrix y = sym(e.apply(a.log())) / 2.0;
  CMatrix x;
  double damping = 0.5;
  double prev = std::numeric_limits<double>::infinity();
  int k = 0;
  for (; k < 10000; ++k) {
    const CMatrix em = herm_exp(-y);
    x = herm_log(sym(em * a.mat() * em));
    const CMatrix ex = sym(e.apply(x));
    const double residual = ex.norm();
    if (residual <= 1e-11) {
      PositiveSplit out;
      out.x = HermitianMatrix(x, tol);
      out.y = HermitianMatrix(y, tol);
      out.iterations = k;
      return out;
    }
    if (residual > prev) damping = 0.25;
    y += damping * ex;
    prev = residual;
  }
  throw NoConvergence("splitting iteration exhausted its budget", prev);
}

SplitTriple pr_split_invertible(const InvertibleMatrix& g,
                                const CondExpectation& e,
                                const Tolerances& tol) {
  const PosDefMatrix gram(g.mat().adjoint() * g.mat(), tol);
  const PositiveSplit split = pr_split_positive(gram, e, tol);
  const CMatrix z = split.x.mat() / 2.0;
  const CMatrix u = g.mat() * herm_exp(-split.y.mat()) * herm_exp(-z);
  SplitTriple out;
  out.u = UnitaryMatrix(u, tol);
  out.z = HermitianMatrix(z, tol);
  out.y = split.y;
  out.iterations = split.iterations;
  return out;
}

CanonicalUnitarizer canonical_unitarizer(const InvertibleMatrix& g,
                                         const Representation& pi0,
                                         const CondExpectation& e,
                                         const Tolerances& tol) {
  const int n = pi0.dim();
  if (g.dim() != n || e.dim() != n)
    throw DimMismatch("canonical_unitarizer: dimension mismatch");
  // The range of E must be the commutant of the pi_0 image.
  const int d = herm_space_dim(n);
  RMatrix stacked(static_cast<int>(pi0.images.size()) * d, d);
  for (size_t i = 0; i < pi0.images.size(); ++i) {
    const CMatrix& img = pi0.images[i];
    stacked.middleRows(static_cast<int>(i) * d, d) = herm_linear_map_matrix(
        n, [&](const CMatrix& a) { return CMatrix(img * a - a * img); });
  }
  const RMatrix commutant = nullspace_basis(stacked, tol.nullspace);
  if (subspace_gap(commutant, e.range_coords()) > tol.fix)
    throw RangeMismatch(
        "expectation range does not match the commutant of the "
        "representation image");

  const SplitTriple split = pr_split_invertible(g, e, tol);
  const CMatrix u = split.u.mat();
  const CMatrix x0 = (u * split.z.mat() * u.adjoint() +
                      (u * split.z.mat() * u.adjoint()).adjoint()) /
                     2.0;

  CanonicalUnitarizer out;
  out.x0 = HermitianMatrix(x0, tol);
  out.u = split.u;
  out.rho = pi0;
  for (auto& img : out.rho.images) img = u * img * u.adjoint();

  const CMatrix gi = g.mat().inverse();
  const CMatrix conj = herm_exp(-x0);
  const CMatrix conj_inv = herm_exp(x0);
  const CMatrix id = CMatrix::Identity(n, n);
  double worst = 0.0;
  for (const auto& img : pi0.images) {
    const CMatrix t = conj * g.mat() * img * gi * conj_inv;
    worst = std::max(worst, operator_norm(t * t.adjoint() - id));
  }
  out.unitarity_residual = worst;
  // E_rho = Ad_u o E o Ad_{u^*}; X0 = u Z0 u^* so E_rho(X0) = u E(Z0) u^*.
  out.kernel_residual = e.apply(split.z.mat()).norm();
  return out;
}

std::pair<double, double> complement_norm_estimate(const CondExpectation& e,
                                                   int samples,
                                                   CounterRng& rng) {
  const int n = e.dim();
  const auto ratio = [&](const CMatrix& x) {
    const double nx = operator_norm(x);
    if (nx <= 1e-300) return 0.0;
    return operator_norm(x - e.apply(x)) / nx;
  };
  double best = 0.0;
  CMatrix best_x = CMatrix::Identity(n, n);
  for (int s = 0; s < samples; ++s) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
    const CMatrix x = (m + m.adjoint()) / 2.0;
    const double r = ratio(x);
    if (r > best) {
      best = r;
      best_x = x;
    }
  }
  // Local refinement: random perturbation ascent around the best sample.
  double step = 0.5;
  for (int it = 0; it < 200; ++it) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
    const CMatrix cand =
        best_x + step * operator_norm(best_x) * (m + m.adjoint()) / 2.0;
    const double r = ratio(cand);
    if (r > best) {
      best = r;
      best_x = cand;
    } else {
      step *= 0.95;
    }
  }
  const double bound = e.kind() == ExpectationKind::Pinching ? 1.0 : 2.0;
  return {best, bound};
}

ThmacsReport thmacs_check(const InvertibleMatrix& g, const Representation& pi0,
                          const CondExpectation& e,
                          const std::vector<int>& block_sizes,
                          const Tolerances& tol) {
  const int n = pi0.dim();
  if (block_sizes.empty())
    throw BadSpec("thmacs_check requires a block-diagonal algebra");
  int total = 0;
  for (int b : block_sizes) total += b;
  if (total != n) throw BadSpec("block sizes must sum to the dimension");
  // Structural hypothesis: everything lives in the diagonal subalgebra.
  {
    std::vector<int> block_of(n);
    int at = 0, id = 0;
    for (int b : block_sizes) {
      for (int i = 0; i < b; ++i) block_of[at++] = id;
      ++id;
    }
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (block_of[i] != block_of[j]) {
          off = std::max(off, std::abs(g.mat()(i, j)));
          for (const auto& img : pi0.images)
            off = std::max(off, std::abs(img(i, j)));
        }
    if (off > tol.group)
      throw BadSpec("inputs are not block diagonal for the given blocks");
  }

  const CanonicalUnitarizer canon = canonical_unitarizer(g, pi0, e, tol);
  ThmacsReport report;
  report.unitarity_residual = canon.unitarity_residual;

  const RVector x0_evals = herm_eigenvalues(canon.x0.mat());
  report.lhs = std::exp(x0_evals(x0_evals.size() - 1)) *
               std::exp(-x0_evals(0));

  // Sim of the pi_1 image group over the block-diagonal algebra.
  std::vector<CMatrix> pi1_images;
  const CMatrix gi = g.mat().inverse();
  for (const auto& img : pi0.images)
    pi1_images.push_back(g.mat() * img * gi);
  const FixedCone pi1_cone = fixed_cone(pi1_images, block_sizes, tol);
  const SimReport sim = similarity_number(pi1_cone, tol);
  report.rhs = sim.sim_value;
  report.ratio = report.lhs / report.rhs;

  // Intermediate identity: exp(dist(e^{-2 X0}, fixed cone of the rho image)).
  const FixedCone rho_cone = fixed_cone(canon.rho.images, block_sizes, tol);
  const PosDefMatrix shifted = exp_herm(
      HermitianMatrix(-2.0 * canon.x0.mat(), tol), tol);
  report.intermediate = std::exp(
      dist_to_fixed_cone(shifted, rho_cone, MetricKind::OperatorNorm, tol)
          .value);

  if (e.kind() == ExpectationKind::Pinching) {
    report.complement_norm = 1.0;
  } else {
    CounterRng rng(fnv1a("thmacs-complement"));
    report.complement_norm = complement_norm_estimate(e, 2000, rng).first;
  }
  return report;
}

}  // namespace conegeo
