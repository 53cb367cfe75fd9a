#include "conegeo/span_opt.hpp"

#include <cmath>
#include <limits>

namespace conegeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sum_exp(const RVector& v) {
  const double m = v.maxCoeff();
  double s = 0.0;
  for (int i = 0; i < v.size(); ++i) s += std::exp(v(i) - m);
  return m + std::log(s);
}

RVector softmax(const RVector& v) {
  const double m = v.maxCoeff();
  RVector out(v.size());
  double s = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    out(i) = std::exp(v(i) - m);
    s += out(i);
  }
  return out / s;
}

}  // namespace

BfgsOutcome bfgs_minimize(
    const RVector& x0,
    const std::function<double(const RVector&, RVector&)>& fg,
    double grad_tol, int max_iter) {
  const int n = static_cast<int>(x0.size());
  BfgsOutcome out;
  out.x = x0;
  RMatrix hinv = RMatrix::Identity(n, n);
  RVector grad(n), grad_new(n);
  double f = fg(out.x, grad);
  ++out.evaluations;
  if (!std::isfinite(f)) {
    out.value = f;
    return out;
  }
  for (int it = 0; it < max_iter; ++it) {
    if (grad.norm() <= grad_tol) {
      out.converged = true;
      break;
    }
    RVector dir = -(hinv * grad);
    double slope = grad.dot(dir);
    if (slope >= 0.0) {  // reset on a non-descent direction
      hinv = RMatrix::Identity(n, n);
      dir = -grad;
      slope = -grad.squaredNorm();
    }
    double alpha = 1.0;
    double f_new = kInf;
    RVector x_new;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      x_new = out.x + alpha * dir;
      f_new = fg(x_new, grad_new);
      ++out.evaluations;
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      out.converged = grad.norm() <= 10.0 * grad_tol;
      break;
    }
    const RVector s = x_new - out.x;
    const RVector y = grad_new - grad;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const RVector hy = hinv * y;
      const double yhy = y.dot(hy);
      hinv += ((sy + yhy) / (sy * sy)) * (s * s.transpose()) -
              (hy * s.transpose() + s * hy.transpose()) / sy;
    }
    out.x = x_new;
    f = f_new;
    grad = grad_new;
  }
  out.value = f;
  return out;
}

SpanProblem::SpanProblem(std::vector<CMatrix> basis, int dim)
    : basis_(std::move(basis)), dim_(dim) {
  traces_ = RVector(basis_.size());
  for (size_t k = 0; k < basis_.size(); ++k)
    traces_(static_cast<int>(k)) = basis_[k].trace().real();
}

CMatrix SpanProblem::assemble(const RVector& coords) const {
  CMatrix out = CMatrix::Zero(dim_, dim_);
  for (size_t k = 0; k < basis_.size(); ++k)
    out += coords(static_cast<int>(k)) * basis_[k];
  return (out + out.adjoint()) / 2.0;
}

RVector SpanProblem::project_coords(const CMatrix& h) const {
  RVector out(basis_.size());
  for (size_t k = 0; k < basis_.size(); ++k)
    out(static_cast<int>(k)) = (basis_[k] * h).trace().real();
  return out;
}

RVector SpanProblem::spectral_gradient(const RVector& evals,
                                       const CMatrix& frame,
                                       const RVector& weights) const {
  CMatrix g = CMatrix::Zero(dim_, dim_);
  for (int i = 0; i < evals.size(); ++i)
    g += (weights(i) / evals(i)) * frame.col(i) * frame.col(i).adjoint();
  RVector out(basis_.size());
  for (size_t k = 0; k < basis_.size(); ++k)
    out(static_cast<int>(k)) = (g * basis_[k]).trace().real();
  return out;
}

RVector feasible_positive_point(const SpanProblem& prob,
                                const Tolerances& tol) {
  if (prob.rank() == 0)
    throw NotUnitarizable("fixed space is zero; cone has no positive part");
  const RVector tau = prob.trace_vector();
  const double tau_norm = tau.norm();
  if (tau_norm <= 1e-14)
    throw NotUnitarizable(
        "every span element is traceless; cone has no positive part");

  RVector c = tau;  // projection of id onto the span
  c /= tau.dot(c);  // trace-one slice
  RVector best = c;
  double best_min = -kInf, best_max = 1.0;

  RVector evals;
  CMatrix frame;
  for (int k = 0; k < 500; ++k) {
    herm_eig_raw(prob.assemble(c), evals, frame);
    const double lam_min = evals(0);
    const double lam_abs = evals.cwiseAbs().maxCoeff();
    if (lam_min > best_min) {
      best_min = lam_min;
      best_max = lam_abs;
      best = c;
    }
    if (lam_min > 0.2 * lam_abs) break;  // comfortably interior
    // Ascent along the mean projector of the bottom eigenvalue cluster.
    const double tie = 1e-9 * std::max(1.0, lam_abs);
    int r = 0;
    for (int i = 0; i < evals.size(); ++i)
      if (evals(i) <= evals(0) + tie) ++r;
    CMatrix proj = CMatrix::Zero(prob.dim(), prob.dim());
    for (int i = 0; i < r; ++i)
      proj += frame.col(i) * frame.col(i).adjoint();
    RVector g = prob.project_coords(proj / r);
    g -= (g.dot(tau) / (tau_norm * tau_norm)) * tau;  // stay on the slice
    const double gn = g.norm();
    if (gn <= 1e-15) break;
    c += (0.1 / std::sqrt(static_cast<double>(k + 1))) * (g / gn);
    const double tr = tau.dot(c);
    if (tr <= 1e-14)
      c = best;  // step left the slice cone; restart from the incumbent
    else
      c /= tr;
  }
  if (!(best_min > 1e-8 * std::max(best_max, 1e-300)))
    throw NotUnitarizable(
        "no positive-definite element found in the fixed cone (best min "
        "eigenvalue " +
        std::to_string(best_min) + ")");
  return best * (prob.dim() / tau.dot(best));  // trace = dim
}

namespace {

// Raw nonsmooth objective and an extreme-eigenprojector subgradient.
double log_condition_value(const RVector& evals) {
  return std::log(evals(evals.size() - 1)) - std::log(evals(0));
}

RVector log_condition_subgradient(const SpanProblem& prob,
                                  const RVector& evals,
                                  const CMatrix& frame) {
  const int n = static_cast<int>(evals.size());
  const double span = std::max(evals(n - 1) - evals(0), 0.0);
  const double tie = 1e-9 * std::max(1.0, std::abs(evals(n - 1)) + span);
  RVector w = RVector::Zero(n);
  int r_top = 0, r_bot = 0;
  for (int i = 0; i < n; ++i) {
    if (evals(i) >= evals(n - 1) - tie) ++r_top;
    if (evals(i) <= evals(0) + tie) ++r_bot;
  }
  for (int i = 0; i < n; ++i) {
    if (evals(i) >= evals(n - 1) - tie) w(i) += 1.0 / r_top;
    if (evals(i) <= evals(0) + tie) w(i) -= 1.0 / r_bot;
  }
  return prob.spectral_gradient(evals, frame, w);
}

// Smoothed objective mu*(LSE(nu/mu) + LSE(-nu/mu)) with gradient.
double smoothed_log_condition(const SpanProblem& prob, const RVector& c,
                              double mu, RVector& grad) {
  RVector evals;
  CMatrix frame;
  herm_eig_raw(prob.assemble(c), evals, frame);
  if (!(evals(0) > 0.0)) return kInf;
  const RVector nu = evals.array().log();
  const double value = mu * (log_sum_exp(nu / mu) + log_sum_exp(-nu / mu));
  const RVector w = softmax(nu / mu) - softmax(-nu / mu);
  grad = prob.spectral_gradient(evals, frame, w);
  return value;
}

}  // namespace

SpanOptResult minimize_log_condition(const SpanProblem& prob,
                                     const Tolerances& tol) {
  const RVector tau = prob.trace_vector();
  const double n = prob.dim();
  const auto renormalize = [&](RVector& c) {
    const double tr = tau.dot(c);
    if (tr > 1e-14) c *= n / tr;
  };

  RVector c = feasible_positive_point(prob, tol);
  SpanOptResult result;

  RVector evals;
  CMatrix frame;
  herm_eig_raw(prob.assemble(c), evals, frame);
  RVector c_best = c;
  double f_best = log_condition_value(evals);

  // Subgradient phase with diminishing steps.
  double window_best = f_best;
  int window_start = 0;
  int k = 0;
  for (; k < 20000; ++k) {
    const RVector g = log_condition_subgradient(prob, evals, frame);
    if (g.norm() <= 1e-15) break;
    double eta = 0.1 / std::sqrt(static_cast<double>(k + 1));
    RVector c_next;
    bool ok = false;
    for (int back = 0; back < 60; ++back) {
      c_next = c - eta * g;
      renormalize(c_next);
      herm_eig_raw(prob.assemble(c_next), evals, frame);
      if (evals(0) > 0.0 && tau.dot(c_next) > 0.0) {
        ok = true;
        break;
      }
      eta *= 0.5;
    }
    if (!ok) break;
    c = c_next;
    const double f = log_condition_value(evals);
    if (f < f_best) {
      f_best = f;
      c_best = c;
    }
    if (k - window_start >= 50) {
      if (window_best - f_best < 1e-10) {
        ++k;
        break;
      }
      window_best = f_best;
      window_start = k;
    }
  }
  result.iterations = k;

  // Smoothing polish: continuation in mu, BFGS per stage, keep the best
  // point under the raw objective.
  c = c_best;
  for (double mu = 1e-2; mu >= 0.99e-10; mu *= 0.1) {
    auto fg = [&](const RVector& x, RVector& grad) {
      return smoothed_log_condition(prob, x, mu, grad);
    };
    BfgsOutcome step = bfgs_minimize(c, fg, 1e-11, 300);
    result.iterations += step.evaluations;
    if (std::isfinite(step.value)) {
      c = step.x;
      renormalize(c);
      herm_eig_raw(prob.assemble(c), evals, frame);
      if (evals(0) > 0.0) {
        const double f = log_condition_value(evals);
        if (f < f_best) {
          f_best = f;
          c_best = c;
        }
      }
      result.converged = step.converged;
    }
  }

  renormalize(c_best);
  result.coords = c_best;
  result.objective = f_best;
  return result;
}

SpanOptResult minimize_frobenius_logsq(const SpanProblem& prob,
                                       const Tolerances& tol) {
  RVector c = feasible_positive_point(prob, tol);
  auto fg = [&](const RVector& x, RVector& grad) {
    RVector evals;
    CMatrix frame;
    herm_eig_raw(prob.assemble(x), evals, frame);
    if (!(evals(0) > 0.0)) return kInf;
    const RVector nu = evals.array().log();
    grad = prob.spectral_gradient(evals, frame, 2.0 * nu);
    return nu.squaredNorm();
  };
  // Two rounds: the second restarts the Hessian model near the optimum.
  BfgsOutcome a = bfgs_minimize(c, fg, 1e-12, 800);
  BfgsOutcome b = bfgs_minimize(a.x, fg, 1e-12, 800);
  SpanOptResult result;
  result.coords = b.x;
  result.objective = b.value;
  result.iterations = a.evaluations + b.evaluations;
  result.converged = b.converged;
  return result;
}

}  // namespace conegeo
