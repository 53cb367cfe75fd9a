#pragma once

// One-parameter families of conjugated groups along cone geodesics, the
// interpolation bounds for size and similarity number along the family, and
// the distance chain for extensions by a normal subgroup.

#include <vector>

#include "conegeo/unitarize.hpp"

namespace conegeo {

/// One grid point of the family H_t = gamma_t^{-1/2} H gamma_t^{1/2}.
struct FamilyPoint {
  double t = 0.0;
  PosDefMatrix gamma_t;
  MatrixGroup group_t;
  double size_t_ = 1.0;  // |H_t|
  double sim_t = 1.0;    // Sim(H_t)
};

/// Evaluate the family along the geodesic from r2 to s2 on the grid. Each
/// group is re-closed from conjugated generators; an order mismatch against
/// H flags numeric drift and throws CapExceeded.
std::vector<FamilyPoint> conjugate_family(const MatrixGroup& h,
                                          const PosDefMatrix& r2,
                                          const PosDefMatrix& s2,
                                          const std::vector<double>& grid,
                                          const Tolerances& tol = {});

inline std::vector<double> uniform_grid(int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i)
    out.push_back(points == 1 ? 0.0 : static_cast<double>(i) / (points - 1));
  return out;
}

/// Margins of the interpolation bounds per grid point (negative = violated):
///   size_margin[i] = |H_0|^{1-t}|H_1|^t - |H_t|
///   sim_margin[i]  = Sim(H_0)^{1-t} Sim(H_1)^t - Sim(H_t)
/// When `equality_target` > 0 (the distance-minimizing endpoint case with
/// r2 = id), equality_error[i] = |Sim(H_t)/target^{1-t} - 1|.
struct InterpolationReport {
  std::vector<FamilyPoint> family;
  std::vector<double> size_margin;
  std::vector<double> sim_margin;
  std::vector<double> equality_error;
  double worst_size_margin = 0.0;
  double worst_sim_margin = 0.0;
  double worst_equality_error = 0.0;
};

InterpolationReport verify_interpolation(const MatrixGroup& h,
                                         const PosDefMatrix& r2,
                                         const PosDefMatrix& s2,
                                         const std::vector<double>& grid,
                                         double equality_target = 0.0,
                                         const Tolerances& tol = {});

/// Distance chain for a normal subgroup Sigma of Gamma: with a the closest
/// fixed-cone point to id for Sigma and b the averaged Gamma-fixed point of
/// the Gamma-orbit of a,
///   dist(id, P^Gamma) <= d(id,b) <= d(id,a) + d(a,b),  d(a,b) <= D_Gamma(a).
/// Throws NotNormal when Sigma is not normal in Gamma.
struct ExtensionReport {
  double dist_sigma = 0.0;       // dist(id, P^Sigma) = d(id, a)
  double dist_gamma = 0.0;       // dist(id, P^Gamma)
  double d_id_b = 0.0;
  double d_a_b = 0.0;
  double orbit_diam_a = 0.0;     // D_Gamma(a)
  double chain_margin = 0.0;     // min slack over the chain inequalities
};
ExtensionReport extension_experiment(const std::vector<CMatrix>& sigma_gens,
                                     const std::vector<CMatrix>& gamma_gens,
                                     const Tolerances& tol = {});

}  // namespace conegeo
