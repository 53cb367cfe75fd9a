#include "conegeo/unitarize.hpp"

#include <cmath>
#include <limits>

namespace conegeo {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PosDefMatrix symmetric_rescale(const PosDefMatrix& s, const Tolerances& tol) {
  const double alpha = 1.0 / std::sqrt(s.lambda_max() * s.lambda_min());
  return PosDefMatrix(alpha * s.mat(), tol);
}

double unitarize_residual(const PosDefMatrix& s,
                          const std::vector<CMatrix>& generators) {
  const CMatrix si = s.inverse();
  const CMatrix id = CMatrix::Identity(s.dim(), s.dim());
  double worst = 0.0;
  for (const auto& h : generators) {
    const CMatrix c = si * h * s.mat();
    worst = std::max(worst, operator_norm(c * c.adjoint() - id));
  }
  return worst;
}

Unitarizer average_unitarizer(const MatrixGroup& h, const Tolerances& tol) {
  const int n = h.dim();
  CMatrix avg = CMatrix::Zero(n, n);
  for (const auto& g : h.elements()) avg += g * g.adjoint();
  avg /= static_cast<double>(h.order());
  const PosDefMatrix fixed((avg + avg.adjoint()) / 2.0, tol);
  Unitarizer out;
  out.method = UnitarizerMethod::Average;
  out.s = symmetric_rescale(PosDefMatrix(fixed.sqrt(), tol), tol);
  out.residual = unitarize_residual(out.s, h.generators());
  return out;
}

namespace {

double frob_dist_sq(const PosDefMatrix& x, const PosDefMatrix& p) {
  const CMatrix isq = x.inv_sqrt();
  const RVector evals = herm_eigenvalues(isq * p.mat() * isq);
  double s = 0.0;
  for (int i = 0; i < evals.size(); ++i) {
    const double l = std::log(evals(i));
    s += l * l;
  }
  return s;
}

double radius_at(const PosDefMatrix& x,
                 const std::vector<PosDefMatrix>& points) {
  double r2 = 0.0;
  for (const auto& p : points) r2 = std::max(r2, frob_dist_sq(x, p));
  return std::sqrt(r2);
}

// Smoothed max of squared Frobenius distances with its Euclidean gradient:
// grad_x d^2(x,p) = -2 x^{-1/2} log(x^{-1/2} p x^{-1/2}) x^{-1/2}.
double smoothed_radius_sq(const RVector& coords, int n,
                          const std::vector<PosDefMatrix>& points, double mu,
                          RVector& grad) {
  const CMatrix xm = coords_to_herm(coords, n);
  RVector evals;
  CMatrix frame;
  herm_eig_raw(xm, evals, frame);
  if (!(evals(0) > 0.0)) return kInf;
  RVector half = evals.array().sqrt();
  RVector ihalf = half.cwiseInverse();
  const CMatrix sq = frame * half.asDiagonal() * frame.adjoint();
  const CMatrix isq = frame * ihalf.asDiagonal() * frame.adjoint();

  const int m = static_cast<int>(points.size());
  RVector d2(m);
  std::vector<CMatrix> logs(m);
  for (int i = 0; i < m; ++i) {
    logs[i] = herm_log(isq * points[i].mat() * isq);
    d2(i) = logs[i].squaredNorm();
  }
  const double mx = d2.maxCoeff();
  RVector w(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    w(i) = std::exp((d2(i) - mx) / mu);
    total += w(i);
  }
  const double value = mx + mu * std::log(total);
  CMatrix g = CMatrix::Zero(n, n);
  for (int i = 0; i < m; ++i)
    g += (w(i) / total) * (-2.0) * (isq * logs[i] * isq);
  grad = herm_to_coords((g + g.adjoint()) / 2.0);
  return value;
}

}  // namespace

PosDefMatrix circumcenter(const std::vector<PosDefMatrix>& points,
                          const Tolerances& tol, std::uint64_t seed) {
  if (points.empty()) throw EmptyInput("circumcenter of an empty set");
  if (points.size() == 1) return points.front();
  const int n = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != n) throw DimMismatch("circumcenter: dimension mismatch");

  CounterRng rng(seed ^ 0x636972636d63ULL);
  PosDefMatrix best = points.front();
  double best_radius = radius_at(best, points);
  if (best_radius <= 1e-14) return best;

  const int restarts = 5;
  for (int r = 0; r < restarts; ++r) {
    PosDefMatrix x =
        points[rng.next_u64() % points.size()];
    // Minimax-center phase: step toward the current farthest point.
    for (int k = 0; k < 200; ++k) {
      double worst = -1.0;
      int far_idx = 0;
      for (size_t i = 0; i < points.size(); ++i) {
        const double d2 = frob_dist_sq(x, points[i]);
        if (d2 > worst) {
          worst = d2;
          far_idx = static_cast<int>(i);
        }
      }
      if (worst <= tol.cc * tol.cc) break;
      x = Geodesic(x, points[far_idx], tol).eval(1.0 / (k + 2));
    }
    // Smoothing polish on the squared radius.
    RVector coords = herm_to_coords(x.mat());
    const double scale = std::max(radius_at(x, points), 1e-6);
    for (double mu = scale * scale * 1e-2; mu >= scale * scale * 0.99e-12;
         mu *= 0.1) {
      auto fg = [&](const RVector& v, RVector& grad) {
        return smoothed_radius_sq(v, n, points, mu, grad);
      };
      BfgsOutcome step = bfgs_minimize(coords, fg, 1e-12 * scale, 200);
      if (std::isfinite(step.value)) coords = step.x;
    }
    const PosDefMatrix candidate(coords_to_herm(coords, n), tol);
    const double radius = radius_at(candidate, points);
    if (radius < best_radius) {
      best_radius = radius;
      best = candidate;
    }
  }
  return best;
}

Unitarizer circumcenter_unitarizer(const MatrixGroup& h,
                                   const Tolerances& tol) {
  const auto pts = orbit(h, PosDefMatrix::identity(h.dim()), tol);
  const PosDefMatrix center = circumcenter(pts, tol, 0);
  // The center of an orbit is a fixed point; averaging over the group pins
  // the fixed-point equation down to roundoff before taking the square root.
  CMatrix fixed = CMatrix::Zero(h.dim(), h.dim());
  for (const auto& g : h.elements()) fixed += act_raw(g, center.mat());
  fixed /= static_cast<double>(h.order());
  const PosDefMatrix pinned((fixed + fixed.adjoint()) / 2.0, tol);
  Unitarizer out;
  out.method = UnitarizerMethod::Circumcenter;
  out.s = symmetric_rescale(PosDefMatrix(pinned.sqrt(), tol), tol);
  out.residual = unitarize_residual(out.s, h.generators());
  return out;
}

namespace {

SimReport sim_from_span(const SpanProblem& prob, const Tolerances& tol) {
  const SpanOptResult opt = minimize_log_condition(prob, tol);
  SimReport report;
  report.sim_value = std::exp(0.5 * opt.objective);
  report.minimizer = PosDefMatrix(prob.assemble(opt.coords), tol);
  report.dist_to_fixed =
      dist(PosDefMatrix::identity(prob.dim()),
           symmetric_rescale(report.minimizer, tol), MetricKind::OperatorNorm);
  report.iterations = opt.iterations;
  report.converged = opt.converged;
  return report;
}

}  // namespace

SimReport similarity_number(const FixedCone& cone, const Tolerances& tol) {
  return sim_from_span(SpanProblem(cone.basis(), cone.dim()), tol);
}

SimReport similarity_number(const MatrixGroup& h, const Tolerances& tol) {
  return similarity_number(fixed_cone(h.generators(), {}, tol), tol);
}

SimReport similarity_number(const std::vector<CMatrix>& generators,
                            const Tolerances& tol) {
  return similarity_number(fixed_cone(generators, {}, tol), tol);
}

DistToConeResult dist_to_fixed_cone(const PosDefMatrix& b,
                                    const FixedCone& cone, MetricKind m,
                                    const Tolerances& tol) {
  if (b.dim() != cone.dim())
    throw DimMismatch("dist_to_fixed_cone: dimension mismatch");
  const int n = b.dim();
  const bool at_identity =
      (b.mat() - CMatrix::Identity(n, n)).norm() <= 1e-14 * n;

  // Translate b to id; the cone maps to the span of the translated basis.
  std::vector<CMatrix> basis;
  if (at_identity) {
    basis = cone.basis();
  } else {
    const CMatrix isq = b.inv_sqrt();
    RMatrix cols(herm_space_dim(n), cone.rank());
    for (int k = 0; k < cone.rank(); ++k) {
      const CMatrix t = isq * cone.basis()[k] * isq;
      cols.col(k) = herm_to_coords((t + t.adjoint()) / 2.0);
    }
    basis = herm_basis_from_coords(column_span_basis(cols, tol.nullspace), n);
  }
  SpanProblem prob(basis, n);

  DistToConeResult out;
  if (m == MetricKind::OperatorNorm) {
    const SpanOptResult opt = minimize_log_condition(prob, tol);
    out.value = 0.5 * opt.objective;
    const PosDefMatrix translated =
        symmetric_rescale(PosDefMatrix(prob.assemble(opt.coords), tol), tol);
    out.iterations = opt.iterations;
    out.converged = opt.converged;
    if (at_identity) {
      out.witness = translated;
    } else {
      const CMatrix sq = b.sqrt();
      out.witness = PosDefMatrix(act_raw(sq, translated.mat()), tol);
    }
  } else {
    const SpanOptResult opt = minimize_frobenius_logsq(prob, tol);
    out.value = std::sqrt(std::max(opt.objective, 0.0));
    const PosDefMatrix translated(prob.assemble(opt.coords), tol);
    out.iterations = opt.iterations;
    out.converged = opt.converged;
    if (at_identity) {
      out.witness = translated;
    } else {
      const CMatrix sq = b.sqrt();
      out.witness = PosDefMatrix(act_raw(sq, translated.mat()), tol);
    }
  }
  return out;
}

}  // namespace conegeo
