#pragma once

// Unitarizer construction by group averaging and by circumcenters of orbits,
// the similarity-number optimizer over the fixed cone, symmetric-spectrum
// rescaling, and distances to fixed cones in both metrics.

#include <vector>

#include "conegeo/groups.hpp"
#include "conegeo/span_opt.hpp"

namespace conegeo {

enum class UnitarizerMethod { Average, Circumcenter, SimOptimizer };

/// A positive unitarizer s with symmetric spectrum; `residual` is the max
/// over generators of ||s^{-1} h s (s^{-1} h s)^* - id||.
struct Unitarizer {
  PosDefMatrix s;
  UnitarizerMethod method = UnitarizerMethod::Average;
  double residual = 0.0;
};

struct SimReport {
  double sim_value = 1.0;
  PosDefMatrix minimizer;   // fixed-cone point, trace-normalized
  double dist_to_fixed = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Per-trial record and fitted envelope for the similarity-versus-size sweep.
struct ConstantsReport {
  double K = 1.0;
  double alpha = 0.0;
  std::vector<std::pair<double, double>> samples;  // (log|H|, log Sim(H))
};

/// alpha*s with alpha = (lambda_max lambda_min)^{-1/2}, so that
/// ||result|| = ||result^{-1}||. Conjugation action unchanged.
PosDefMatrix symmetric_rescale(const PosDefMatrix& s,
                               const Tolerances& tol = {});

/// Max over generators of ||s^{-1} h s (s^{-1} h s)^* - id|| (operator norm).
double unitarize_residual(const PosDefMatrix& s,
                          const std::vector<CMatrix>& generators);

/// s = ((1/|H|) sum h h^*)^{1/2}, rescaled to symmetric spectrum. The
/// averaged fixed point lies in the operator interval [|H|^{-2} id, |H|^2 id].
Unitarizer average_unitarizer(const MatrixGroup& h,
                              const Tolerances& tol = {});

/// Approximate minimizer of x -> max_i dist(x, points[i], Frobenius).
/// Minimax-center iteration toward the farthest point with 1/(k+2) steps and
/// 5 restarts, then a smoothed BFGS stage; returns the best point over
/// restarts (radius within tol.cc of the best seen).
PosDefMatrix circumcenter(const std::vector<PosDefMatrix>& points,
                          const Tolerances& tol = {},
                          std::uint64_t seed = 0);

/// Circumcenter of the orbit of id in the Frobenius metric, stabilized to an
/// exact fixed point by group averaging, then square root and rescale.
Unitarizer circumcenter_unitarizer(const MatrixGroup& h,
                                   const Tolerances& tol = {});

/// Similarity number through the fixed-cone optimizer; sim = exp(half the
/// minimal log-condition), dist_to_fixed is evaluated independently on the
/// rescaled minimizer. Throws NotUnitarizable when the cone has no positive
/// part.
SimReport similarity_number(const FixedCone& cone, const Tolerances& tol = {});
SimReport similarity_number(const MatrixGroup& h, const Tolerances& tol = {});
SimReport similarity_number(const std::vector<CMatrix>& generators,
                            const Tolerances& tol = {});

struct DistToConeResult {
  double value = 0.0;
  PosDefMatrix witness;
  int iterations = 0;
  bool converged = false;
};

/// dist(b, P^H) in the chosen metric, by the span optimizer after the
/// isometric translation of b to id; returns the value and a witness in the
/// cone.
DistToConeResult dist_to_fixed_cone(const PosDefMatrix& b,
                                    const FixedCone& cone, MetricKind m,
                                    const Tolerances& tol = {});

}  // namespace conegeo
