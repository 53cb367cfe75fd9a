#include "conegeo/interpolate.hpp"

#include <cmath>
#include <limits>

namespace conegeo {

std::vector<FamilyPoint> conjugate_family(const MatrixGroup& h,
                                          const PosDefMatrix& r2,
                                          const PosDefMatrix& s2,
                                          const std::vector<double>& grid,
                                          const Tolerances& tol) {
  if (h.dim() != r2.dim() || h.dim() != s2.dim())
    throw DimMismatch("conjugate_family: dimension mismatch");
  const Geodesic gamma(r2, s2, tol);
  std::vector<FamilyPoint> out;
  out.reserve(grid.size());
  for (double t : grid) {
    FamilyPoint pt;
    pt.t = t;
    pt.gamma_t = gamma.eval(t);
    const CMatrix half = pt.gamma_t.sqrt();
    const CMatrix ihalf = pt.gamma_t.inv_sqrt();
    std::vector<CMatrix> gens;
    gens.reserve(h.generators().size());
    for (const auto& g : h.generators()) gens.push_back(ihalf * g * half);
    pt.group_t = close_group(gens, 2 * h.order() + 16, tol);
    if (pt.group_t.order() != h.order())
      throw CapExceeded("conjugated closure order drifted: " +
                        std::to_string(pt.group_t.order()) + " vs " +
                        std::to_string(h.order()));
    pt.size_t_ = group_size_norm(pt.group_t);
    pt.sim_t = similarity_number(pt.group_t, tol).sim_value;
    out.push_back(std::move(pt));
  }
  return out;
}

InterpolationReport verify_interpolation(const MatrixGroup& h,
                                         const PosDefMatrix& r2,
                                         const PosDefMatrix& s2,
                                         const std::vector<double>& grid,
                                         double equality_target,
                                         const Tolerances& tol) {
  InterpolationReport report;
  report.family = conjugate_family(h, r2, s2, grid, tol);
  if (report.family.empty()) return report;

  // Endpoint groups evaluated directly (t = 0 and t = 1 of the same family).
  const CMatrix r_half = r2.sqrt(), r_ihalf = r2.inv_sqrt();
  const CMatrix s_half = s2.sqrt(), s_ihalf = s2.inv_sqrt();
  std::vector<CMatrix> gens0, gens1;
  for (const auto& g : h.generators()) {
    gens0.push_back(r_ihalf * g * r_half);
    gens1.push_back(s_ihalf * g * s_half);
  }
  const MatrixGroup h0 = close_group(gens0, 2 * h.order() + 16, tol);
  const MatrixGroup h1 = close_group(gens1, 2 * h.order() + 16, tol);
  const double size0 = group_size_norm(h0);
  const double size1 = group_size_norm(h1);
  const double sim0 = similarity_number(h0, tol).sim_value;
  const double sim1 = similarity_number(h1, tol).sim_value;

  report.worst_size_margin = std::numeric_limits<double>::infinity();
  report.worst_sim_margin = std::numeric_limits<double>::infinity();
  report.worst_equality_error = 0.0;
  for (const auto& pt : report.family) {
    const double size_bound =
        std::pow(size0, 1.0 - pt.t) * std::pow(size1, pt.t);
    const double sim_bound = std::pow(sim0, 1.0 - pt.t) * std::pow(sim1, pt.t);
    report.size_margin.push_back(size_bound - pt.size_t_);
    report.sim_margin.push_back(sim_bound - pt.sim_t);
    report.worst_size_margin =
        std::min(report.worst_size_margin, report.size_margin.back());
    report.worst_sim_margin =
        std::min(report.worst_sim_margin, report.sim_margin.back());
    if (equality_target > 0.0) {
      const double target = std::pow(equality_target, 1.0 - pt.t);
      report.equality_error.push_back(std::abs(pt.sim_t / target - 1.0));
      report.worst_equality_error = std::max(report.worst_equality_error,
                                             report.equality_error.back());
    }
  }
  return report;
}

ExtensionReport extension_experiment(const std::vector<CMatrix>& sigma_gens,
                                     const std::vector<CMatrix>& gamma_gens,
                                     const Tolerances& tol) {
  const MatrixGroup sigma = close_group(sigma_gens, kDefaultClosureCap, tol);
  const MatrixGroup gamma = close_group(gamma_gens, kDefaultClosureCap, tol);
  // Normality: conjugates of Sigma generators by Gamma generators stay in
  // Sigma; the homomorphism property extends this to the whole groups.
  for (const auto& g : gamma.generators()) {
    const CMatrix gi = g.inverse();
    for (const auto& s : sigma.generators())
      if (!sigma.find(g * s * gi, tol))
        throw NotNormal("subgroup is not normal in the ambient group");
  }

  ExtensionReport report;
  const PosDefMatrix id = PosDefMatrix::identity(sigma.dim());
  const FixedCone sigma_cone = fixed_cone(sigma.generators(), {}, tol);
  const DistToConeResult to_sigma =
      dist_to_fixed_cone(id, sigma_cone, MetricKind::OperatorNorm, tol);
  report.dist_sigma = to_sigma.value;
  const PosDefMatrix a = to_sigma.witness;

  report.orbit_diam_a = orbit_diameter(gamma, a, MetricKind::OperatorNorm, tol);

  // Averaged Gamma-fixed point of the orbit of a; lies in the convex hull,
  // hence within D_Gamma(a) of a.
  CMatrix b_raw = CMatrix::Zero(sigma.dim(), sigma.dim());
  for (const auto& g : gamma.elements()) b_raw += act_raw(g, a.mat());
  b_raw /= static_cast<double>(gamma.order());
  const PosDefMatrix b((b_raw + b_raw.adjoint()) / 2.0, tol);

  report.d_id_b = dist(id, b, MetricKind::OperatorNorm);
  report.d_a_b = dist(a, b, MetricKind::OperatorNorm);

  const FixedCone gamma_cone = fixed_cone(gamma.generators(), {}, tol);
  report.dist_gamma =
      dist_to_fixed_cone(id, gamma_cone, MetricKind::OperatorNorm, tol).value;

  const double slack1 = report.d_id_b - report.dist_gamma;
  const double slack2 =
      report.dist_sigma + report.d_a_b - report.d_id_b;
  const double slack3 = report.orbit_diam_a - report.d_a_b;
  report.chain_margin = std::min({slack1, slack2, slack3});
  return report;
}

}  // namespace conegeo
