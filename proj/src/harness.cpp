#include "conegeo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace conegeo {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;
}  // namespace

// ---------------------------------------------------------------------------
// Instance generation

CMatrix random_complex_matrix(int n, CounterRng& rng) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
  return m;
}

CMatrix random_hermitian(int n, CounterRng& rng) {
  const CMatrix m = random_complex_matrix(n, rng);
  return (m + m.adjoint()) / 2.0;
}

CMatrix random_hermitian_scaled(int n, double op_norm, CounterRng& rng) {
  for (;;) {
    const CMatrix h = random_hermitian(n, rng);
    const double norm = operator_norm(h);
    if (norm > 1e-8) return (op_norm / norm) * h;
  }
}

PosDefMatrix random_posdef(int n, double log_radius, CounterRng& rng) {
  return PosDefMatrix(herm_exp(random_hermitian_scaled(n, log_radius, rng)));
}

UnitaryMatrix random_unitary(int n, CounterRng& rng) {
  const CMatrix m = random_complex_matrix(n, rng);
  Eigen::HouseholderQR<CMatrix> qr(m);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double a = std::abs(d);
    if (a > 0) q.col(i) *= d / a;
  }
  return UnitaryMatrix(q);
}

PosDefMatrix random_posdef_cond(int n, double cond, CounterRng& rng) {
  if (cond < 1.0) throw BadSpec("condition target must be >= 1");
  if (cond == 1.0 || n == 1) return PosDefMatrix::identity(n);
  for (;;) {
    const CMatrix h = random_hermitian(n, rng);
    const RVector evals = herm_eigenvalues(h);
    const double spread = evals(n - 1) - evals(0);
    if (spread < 1e-6) continue;
    // Affine spectral rescale to a symmetric log spectrum of width log cond.
    const double alpha = std::log(cond) / spread;
    const double beta = -alpha * (evals(n - 1) + evals(0)) / 2.0;
    return PosDefMatrix(
        herm_exp(alpha * h + beta * CMatrix::Identity(n, n)));
  }
}

InvertibleMatrix random_invertible(int n, double cond, CounterRng& rng) {
  const PosDefMatrix p = random_posdef_cond(n, cond, rng);
  return InvertibleMatrix(p.mat() * random_unitary(n, rng).mat());
}

CMatrix random_projection(int n, int rank, CounterRng& rng) {
  if (rank <= 0 || rank >= n)
    throw BadSpec("projection rank must be strictly between 0 and dim");
  RVector evals;
  CMatrix frame;
  herm_eig_raw(random_hermitian(n, rng), evals, frame);
  CMatrix p = CMatrix::Zero(n, n);
  for (int i = 0; i < rank; ++i)
    p += frame.col(i) * frame.col(i).adjoint();
  return (p + p.adjoint()) / 2.0;
}

Representation rep_from_group(const MatrixGroup& g, const Tolerances& tol) {
  Representation rep;
  const int m = g.order();
  rep.images = g.elements();
  rep.table.assign(m, std::vector<int>(m, 0));
  rep.identity = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto id = g.find(g.elements()[i] * g.elements()[j], tol);
      if (!id)
        throw CapExceeded("closure is not multiplication-closed at tolerance");
      rep.table[i][j] = *id;
    }
  return rep;
}

Representation rep_cyclic_chars(int order, const std::vector<int>& exponents,
                                const Tolerances& tol) {
  if (order < 1 || exponents.empty())
    throw BadSpec("cyclic representation needs order >= 1 and exponents");
  const int d = static_cast<int>(exponents.size());
  Representation rep;
  rep.identity = 0;
  rep.table.assign(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) rep.table[i][j] = (i + j) % order;
  rep.images.reserve(order);
  for (int k = 0; k < order; ++k) {
    CMatrix m = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      const double theta = 2.0 * kPi * exponents[i] * k / order;
      m(i, i) = Complex(std::cos(theta), std::sin(theta));
    }
    rep.images.push_back(std::move(m));
  }
  (void)tol;
  return rep;
}

Representation rep_dihedral(int n, int pad_chars, const Tolerances& tol) {
  if (n < 3) throw BadSpec("dihedral parameter must be >= 3");
  const int d = 2 + pad_chars;
  const double theta = 2.0 * kPi / n;
  CMatrix r = CMatrix::Identity(d, d);
  r(0, 0) = Complex(std::cos(theta), std::sin(theta));
  r(1, 1) = Complex(std::cos(theta), -std::sin(theta));
  CMatrix s = CMatrix::Identity(d, d);
  s(0, 0) = s(1, 1) = 0;
  s(0, 1) = s(1, 0) = 1;
  for (int i = 0; i < pad_chars; ++i) s(2 + i, 2 + i) = -1.0;  // sign character
  return rep_from_group(close_group({r, s}, 4 * n + 8, tol), tol);
}

Representation rep_quaternion(const Tolerances& tol) {
  CMatrix i2(2, 2), j2(2, 2);
  i2 << Complex(0, 1), 0, 0, Complex(0, -1);
  j2 << 0, 1, -1, 0;
  return rep_from_group(close_group({i2, j2}, 16, tol), tol);
}

Representation rep_clock_shift(int d, const Tolerances& tol) {
  if (d < 2) throw BadSpec("clock-shift dimension must be >= 2");
  CMatrix clock = CMatrix::Zero(d, d);
  CMatrix shift = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double theta = 2.0 * kPi * i / d;
    clock(i, i) = Complex(std::cos(theta), std::sin(theta));
    shift((i + 1) % d, i) = 1.0;
  }
  return rep_from_group(close_group({clock, shift}, d * d * d + 8, tol), tol);
}

Representation rep_product_blocks(const Representation& a,
                                  const Representation& b,
                                  const Tolerances& tol) {
  Representation rep;
  const int na = a.order(), nb = b.order();
  const int da = a.dim(), db = b.dim();
  rep.identity = a.identity * nb + b.identity;
  rep.table.assign(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      rep.table[i][j] =
          a.table[i / nb][j / nb] * nb + b.table[i % nb][j % nb];
  rep.images.reserve(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      CMatrix m = CMatrix::Zero(da + db, da + db);
      m.topLeftCorner(da, da) = a.images[i];
      m.bottomRightCorner(db, db) = b.images[j];
      rep.images.push_back(std::move(m));
    }
  (void)tol;
  return rep;
}

Representation rep_conjugate(const Representation& rep, const CMatrix& s) {
  Representation out = rep;
  const CMatrix si = s.inverse();
  for (auto& img : out.images) img = s * img * si;
  return out;
}

Representation gen_bounded_rep(const RepSpec& spec, double cond_target,
                               std::uint64_t seed, const Tolerances& tol) {
  if (cond_target < 1.0) throw BadSpec("condition target must be >= 1");
  CounterRng rng(seed);
  Representation unitary;
  switch (spec.family) {
    case RepSpec::Family::Cyclic: {
      if (spec.dim < 1) throw BadSpec("cyclic representation needs dim >= 1");
      std::vector<int> exps(spec.dim);
      for (int i = 0; i < spec.dim; ++i)
        exps[i] = static_cast<int>(rng.next_u64() % spec.order_param);
      unitary = rep_cyclic_chars(spec.order_param, exps, tol);
      break;
    }
    case RepSpec::Family::CyclicRegular: {
      std::vector<int> exps(spec.order_param);
      for (int i = 0; i < spec.order_param; ++i) exps[i] = i;
      unitary = rep_cyclic_chars(spec.order_param, exps, tol);
      break;
    }
    case RepSpec::Family::Dihedral:
      unitary = rep_dihedral(spec.order_param, std::max(0, spec.dim - 2), tol);
      break;
    case RepSpec::Family::Quaternion:
      unitary = rep_quaternion(tol);
      break;
    case RepSpec::Family::ClockShift:
      unitary = rep_clock_shift(spec.order_param, tol);
      break;
  }
  if (cond_target == 1.0) return unitary;
  const PosDefMatrix s = random_posdef_cond(unitary.dim(), cond_target, rng);
  return rep_conjugate(unitary, s.mat());
}

// ---------------------------------------------------------------------------
// Suite plumbing

namespace {

struct CheckContext {
  const ExperimentConfig& cfg;
  CounterRng rng;
  std::vector<std::pair<double, double>> scatter;

  int count(int base) const {
    return static_cast<int>(std::llround(base * cfg.trials));
  }
};

struct Margin {
  double worst = kInf;
  int instances = 0;
  void add(double m) {
    worst = std::min(worst, m);
    ++instances;
  }
};

struct CheckDef {
  std::string id;
  std::string suite;
  std::string anchor;
  std::function<void(CheckContext&, CheckRecord&)> run;
};

const std::vector<CheckDef>& registry();

}  // namespace

std::vector<std::string> suite_names() {
  return {"geometry", "groups", "unitarize", "split", "interpolate"};
}

std::vector<std::string> check_ids(const std::string& suite) {
  std::vector<std::string> out;
  for (const auto& def : registry())
    if (suite.empty() || def.suite == suite) out.push_back(def.id);
  return out;
}

int SuiteReport::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

int SuiteReport::failed() const {
  return static_cast<int>(checks.size()) - passed();
}

std::string SuiteReport::to_jsonl() const {
  using nlohmann::json;
  std::ostringstream out;
  for (const auto& c : checks) {
    json j{{"check", c.id},          {"anchor", c.anchor},
           {"instances", c.instances}, {"worst_margin", c.worst_margin},
           {"pass", c.pass},         {"runtime_s", c.runtime_s}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out << j.dump() << "\n";
  }
  nlohmann::json summary{
      {"summary",
       {{"checks", checks.size()},
        {"passed", passed()},
        {"failed", failed()},
        {"seed", seed},
        {"dims", dims},
        {"total_runtime_s", total_runtime_s}}}};
  out << summary.dump() << "\n";
  return out.str();
}

std::string SuiteReport::scatter_csv() const {
  std::ostringstream out;
  out << "log_size,log_sim\n";
  out.precision(17);
  for (const auto& [ls, lsim] : scatter) out << ls << "," << lsim << "\n";
  return out.str();
}

SuiteReport run_suite(const ExperimentConfig& cfg, const std::string& suite) {
  std::vector<const CheckDef*> selected;
  for (const auto& def : registry())
    if (suite.empty() || suite == "all" || def.suite == suite)
      selected.push_back(&def);
  if (selected.empty() && !suite.empty() && suite != "all")
    throw BadSpec("unknown suite: " + suite);

  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CONEGEO_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) threads = std::min(threads, cap);
  }
  threads = std::max(1, std::min<int>(threads, selected.size()));

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckRecord> records(selected.size());
  std::vector<std::vector<std::pair<double, double>>> scatters(
      selected.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= selected.size()) break;
      const CheckDef& def = *selected[i];
      CheckRecord rec;
      rec.id = def.id;
      rec.anchor = def.anchor;
      // Seed per check id, independent of scheduling.
      CheckContext ctx{cfg, CounterRng(cfg.seed).fork(fnv1a(def.id)), {}};
      const auto c0 = std::chrono::steady_clock::now();
      try {
        def.run(ctx, rec);
      } catch (const std::exception& e) {
        rec.pass = false;
        rec.worst_margin = -kInf;
        rec.detail = std::string("exception: ") + e.what();
      }
      rec.runtime_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - c0)
              .count();
      records[i] = std::move(rec);
      scatters[i] = std::move(ctx.scatter);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  SuiteReport report;
  report.seed = cfg.seed;
  report.dims = cfg.dims;
  report.checks = std::move(records);
  for (auto& s : scatters)
    report.scatter.insert(report.scatter.end(), s.begin(), s.end());
  report.total_runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    if (!out) throw IoError("cannot write report to " + cfg.out_path);
    out << report.to_jsonl();
  }
  if (!cfg.csv_path.empty()) {
    std::ofstream out(cfg.csv_path);
    if (!out) throw IoError("cannot write scatter to " + cfg.csv_path);
    out << report.scatter_csv();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Check implementations

namespace {

void finish(CheckRecord& rec, const Margin& m) {
  rec.instances = m.instances;
  rec.worst_margin = m.instances == 0 ? 0.0 : m.worst;
  rec.pass = rec.worst_margin >= 0.0;
}

// A deterministic mix of catalog groups across the configured dimensions.
struct GroupInstance {
  std::string name;
  Representation rep;
  MatrixGroup group;
  double cond_target = 1.0;
};

std::vector<GroupInstance> catalog_groups(CheckContext& ctx, int count,
                                          bool include_unitary) {
  const Tolerances& tol = ctx.cfg.tol;
  std::vector<RepSpec> specs;
  for (int dim : ctx.cfg.dims) {
    if (dim >= 2) {
      specs.push_back({RepSpec::Family::Cyclic, 6, dim});
      specs.push_back({RepSpec::Family::Dihedral, 4, dim});
    }
    if (dim == 2) {
      specs.push_back({RepSpec::Family::Quaternion, 0, 2});
      specs.push_back({RepSpec::Family::ClockShift, 2, 2});
      specs.push_back({RepSpec::Family::Cyclic, 8, 2});
    }
    if (dim == 4) {
      specs.push_back({RepSpec::Family::ClockShift, 4, 4});
      specs.push_back({RepSpec::Family::CyclicRegular, 4, 4});
    }
    if (dim == 8) specs.push_back({RepSpec::Family::CyclicRegular, 8, 8});
    if (dim == 16) specs.push_back({RepSpec::Family::CyclicRegular, 16, 16});
  }
  if (specs.empty()) specs.push_back({RepSpec::Family::Cyclic, 4, 2});
  const double conds[] = {1.0, 1.5, 2.0, 4.0};
  std::vector<GroupInstance> out;
  for (int i = 0; i < count; ++i) {
    const RepSpec& spec = specs[i % specs.size()];
    double cond = conds[(i / specs.size()) % 4];
    if (!include_unitary && cond == 1.0) cond = 3.0;
    GroupInstance inst;
    inst.cond_target = cond;
    inst.rep = gen_bounded_rep(spec, cond, ctx.rng.next_u64(), tol);
    inst.group = inst.rep.image_group(kDefaultClosureCap, tol);
    std::ostringstream name;
    name << "spec" << (i % specs.size()) << "/dim" << inst.rep.dim()
         << "/cond" << cond;
    inst.name = name.str();
    out.push_back(std::move(inst));
  }
  return out;
}

// --------------------------- geometry suite --------------------------------

void check_exp_log_roundtrip(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  for (int dim = 2; dim <= 16; ++dim) {
    const int trials = ctx.count(1000 / 15 + 1);
    for (int t = 0; t < trials; ++t) {
      const CMatrix x = random_hermitian_scaled(dim, 1.5, ctx.rng);
      const PosDefMatrix a = exp_herm(HermitianMatrix(x, tol), tol);
      const double back = (a.log() - x).norm() / std::max(1.0, x.norm());
      m.add(tol.recon - back);
      const PosDefMatrix b = random_posdef(dim, 1.5, ctx.rng);
      const double fwd =
          (herm_exp(b.log()) - b.mat()).norm() / std::max(1.0, b.mat().norm());
      m.add(tol.recon - fwd);
    }
  }
  finish(rec, m);
}

void check_power_composition(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(250);
    for (int t = 0; t < trials; ++t) {
      const PosDefMatrix a = random_posdef(dim, 1.5, ctx.rng);
      const double s = 0.2 + 2.0 * ctx.rng.next_double();
      const double u = 0.2 + 2.0 * ctx.rng.next_double();
      const PosDefMatrix as(a.power(s), tol);
      const double resid =
          (as.power(u) - a.power(s * u)).norm() / std::max(1.0, a.mat().norm());
      m.add(tol.recon - resid);
    }
  }
  finish(rec, m);
}

void check_eig_frame_invariance(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(250);
    for (int t = 0; t < trials; ++t) {
      const CMatrix h = random_hermitian(dim, ctx.rng);
      const CMatrix u = random_unitary(dim, ctx.rng).mat();
      const RVector e1 = herm_eigenvalues(h);
      const RVector e2 = herm_eigenvalues(u * h * u.adjoint());
      const double scale = std::max(1.0, e1.cwiseAbs().maxCoeff());
      m.add(tol.eig - (e1 - e2).cwiseAbs().maxCoeff() / scale);
    }
  }
  finish(rec, m);
}

void check_geodesic_endpoints(CheckContext& ctx, CheckRecord& rec) {
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(1000);
    for (int t = 0; t < trials; ++t) {
      const PosDefMatrix a = random_posdef(dim, 1.0, ctx.rng);
      const PosDefMatrix b = random_posdef(dim, 1.0, ctx.rng);
      const Geodesic g(a, b, ctx.cfg.tol);
      const double r0 =
          (g.eval(0.0).mat() - a.mat()).norm() / std::max(1.0, a.mat().norm());
      const double r1 =
          (g.eval(1.0).mat() - b.mat()).norm() / std::max(1.0, b.mat().norm());
      m.add(1e-9 - r0);
      m.add(1e-9 - r1);
    }
  }
  finish(rec, m);
}

void check_geodesic_proportional(CheckContext& ctx, CheckRecord& rec) {
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(120);
    for (int t = 0; t < trials; ++t) {
      const PosDefMatrix a = random_posdef(dim, 1.0, ctx.rng);
      const PosDefMatrix b = random_posdef(dim, 1.0, ctx.rng);
      const Geodesic g(a, b, ctx.cfg.tol);
      for (MetricKind mk :
           {MetricKind::OperatorNorm, MetricKind::Frobenius}) {
        const double base = dist(a, b, mk);
        const double s = ctx.rng.next_double();
        const double u = ctx.rng.next_double();
        const double d =
            dist(g.eval(s), g.eval(u), mk) - std::abs(u - s) * base;
        m.add(1e-9 - std::abs(d));
      }
    }
  }
  finish(rec, m);
}

void check_action_isometry(CheckContext& ctx, CheckRecord& rec) {
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(1000);
    for (int t = 0; t < trials; ++t) {
      const PosDefMatrix a = random_posdef(dim, 1.0, ctx.rng);
      const PosDefMatrix b = random_posdef(dim, 1.0, ctx.rng);
      const InvertibleMatrix g =
          random_invertible(dim, 1.0 + 9.0 * ctx.rng.next_double(), ctx.rng);
      for (MetricKind mk :
           {MetricKind::OperatorNorm, MetricKind::Frobenius}) {
        const double before = dist(a, b, mk);
        const double after =
            dist(act(g, a, ctx.cfg.tol), act(g, b, ctx.cfg.tol), mk);
        m.add(1e-9 - std::abs(after - before));
      }
    }
  }
  finish(rec, m);
}

void check_action_composition(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(1000);
    for (int t = 0; t < trials; ++t) {
      const PosDefMatrix a = random_posdef(dim, 1.0, ctx.rng);
      const InvertibleMatrix g =
          random_invertible(dim, 1.0 + 4.0 * ctx.rng.next_double(), ctx.rng);
      const InvertibleMatrix h =
          random_invertible(dim, 1.0 + 4.0 * ctx.rng.next_double(), ctx.rng);
      const InvertibleMatrix gh(g.mat() * h.mat(), tol);
      const CMatrix lhs = act(gh, a, tol).mat();
      const CMatrix rhs = act(g, act(h, a, tol), tol).mat();
      m.add(1e-9 - (lhs - rhs).norm() / std::max(1.0, lhs.norm()));
    }
  }
  finish(rec, m);
}

void check_segal(CheckContext& ctx, CheckRecord& rec) {
  Margin m;
  std::uint64_t worst_seed = 0;
  double worst = kInf;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(1000);
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t tag = (static_cast<std::uint64_t>(dim) << 32) | t;
      const HermitianMatrix x(random_hermitian_scaled(dim, 1.5, ctx.rng));
      const HermitianMatrix y(random_hermitian_scaled(dim, 1.5, ctx.rng));
      const double r = segal_residual(x, y);
      if (r < worst) {
        worst = r;
        worst_seed = tag;
      }
      m.add(r + 1e-10);
    }
  }
  finish(rec, m);
  rec.detail = "worst_seed=" + std::to_string(worst_seed);
}

void check_emi(CheckContext& ctx, CheckRecord& rec) {
  Margin m;
  std::uint64_t worst_seed = 0;
  double worst = kInf;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(1000);
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t tag = (static_cast<std::uint64_t>(dim) << 32) | t;
      const PosDefMatrix a = random_posdef(dim, 1.0, ctx.rng);
      const HermitianMatrix x(random_hermitian_scaled(dim, 1.0, ctx.rng));
      const HermitianMatrix y(random_hermitian_scaled(dim, 1.0, ctx.rng));
      const double r = emi_residual(a, x, y);
      if (r < worst) {
        worst = r;
        worst_seed = tag;
      }
      m.add(r + 1e-10);
    }
  }
  finish(rec, m);
  rec.detail = "worst_seed=" + std::to_string(worst_seed);
}

void check_joint_convexity(CheckContext& ctx, CheckRecord& rec) {
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(60);
    for (int t = 0; t < trials; ++t) {
      const Geodesic alpha(random_posdef(dim, 1.0, ctx.rng),
                           random_posdef(dim, 1.0, ctx.rng), ctx.cfg.tol);
      const Geodesic beta(random_posdef(dim, 1.0, ctx.rng),
                          random_posdef(dim, 1.0, ctx.rng), ctx.cfg.tol);
      for (MetricKind mk :
           {MetricKind::OperatorNorm, MetricKind::Frobenius}) {
        std::vector<double> vals;
        const double d0 = dist(alpha.eval(0.0), beta.eval(0.0), mk);
        const double d1 = dist(alpha.eval(1.0), beta.eval(1.0), mk);
        for (int i = 0; i <= 10; ++i) {
          const double s = i / 10.0;
          const double v = dist(alpha.eval(s), beta.eval(s), mk);
          vals.push_back(v);
          m.add(s * d1 + (1.0 - s) * d0 + 1e-9 - v);  // chord bound
        }
        for (size_t i = 1; i + 1 < vals.size(); ++i)  // second differences
          m.add(vals[i - 1] - 2.0 * vals[i] + vals[i + 1] + 1e-8);
      }
    }
  }
  finish(rec, m);
}

void check_cat0_midpoint(CheckContext& ctx, CheckRecord& rec) {
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(200);
    for (int t = 0; t < trials; ++t) {
      const PosDefMatrix a = random_posdef(dim, 1.0, ctx.rng);
      const PosDefMatrix b = random_posdef(dim, 1.0, ctx.rng);
      const PosDefMatrix x = random_posdef(dim, 1.0, ctx.rng);
      const PosDefMatrix mid = Geodesic(a, b, ctx.cfg.tol).eval(0.5);
      const double dxm = dist(x, mid, MetricKind::Frobenius);
      const double dxa = dist(x, a, MetricKind::Frobenius);
      const double dxb = dist(x, b, MetricKind::Frobenius);
      const double dab = dist(a, b, MetricKind::Frobenius);
      m.add(0.5 * dxa * dxa + 0.5 * dxb * dxb - 0.25 * dab * dab + 1e-8 -
            dxm * dxm);
    }
  }
  finish(rec, m);
}

void check_banach_mazur(CheckContext& ctx, CheckRecord& rec) {
  Margin m;
  double worst_literal = 0.0;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(250);
    for (int t = 0; t < trials; ++t) {
      const PosDefMatrix a = random_posdef(dim, 1.0, ctx.rng);
      const PosDefMatrix b = random_posdef(dim, 1.0, ctx.rng);
      const double d = dist(a, b, MetricKind::OperatorNorm);
      const double quad = banach_mazur_delta(
          a, b, BanachMazurConvention::QuadraticFormPencil);
      m.add(1e-8 - std::abs(quad - d));
      // The literal norm-squared reading only matches on commuting pairs;
      // record how far it strays on generic ones.
      const double lit =
          banach_mazur_delta(a, b, BanachMazurConvention::NormSquaredPencil);
      worst_literal = std::max(worst_literal, std::abs(lit - d));
    }
  }
  finish(rec, m);
  std::ostringstream detail;
  detail << "norm_squared_convention_max_gap=" << worst_literal;
  rec.detail = detail.str();
}

// ---------------------------- groups suite ---------------------------------

void check_closure_catalog(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto expect_order = [&](const Representation& rep, int order) {
    m.add(rep.image_group(kDefaultClosureCap, tol).order() == order ? 0.0
                                                                    : -1.0);
    m.add(rep.homomorphism_residual() <= tol.group ? 0.0 : -1.0);
  };
  expect_order(rep_dihedral(4, 0, tol), 8);
  expect_order(rep_quaternion(tol), 8);
  expect_order(rep_cyclic_chars(6, {1, 5}, tol), 6);
  expect_order(rep_clock_shift(2, tol), 8);
  expect_order(rep_clock_shift(3, tol), 27);
  expect_order(rep_product_blocks(rep_dihedral(3, 0, tol),
                                  rep_cyclic_chars(4, {1, 3}, tol), tol),
               24);
  // CapExceeded on an infinite cyclic generator.
  CMatrix grow = CMatrix::Identity(2, 2);
  grow(0, 0) = 2.0;
  try {
    close_group({grow}, 64, tol);
    m.add(-1.0);
  } catch (const CapExceeded&) {
    m.add(0.0);
  }
  finish(rec, m);
}

void check_orbit_divides(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(12), true);
  for (const auto& inst : groups) {
    const PosDefMatrix a = random_posdef(inst.group.dim(), 0.7, ctx.rng);
    const auto orb = orbit(inst.group, a, tol);
    m.add(inst.group.order() % static_cast<int>(orb.size()) == 0 ? 0.0 : -1.0);
  }
  finish(rec, m);
}

void check_translation_laws(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(10), true);
  for (const auto& inst : groups) {
    const int n = inst.group.dim();
    const InvertibleMatrix f =
        random_invertible(n, 1.5 + 2.0 * ctx.rng.next_double(), ctx.rng);
    const CMatrix fi = f.mat().inverse();
    const PosDefMatrix a = random_posdef(n, 0.7, ctx.rng);

    // Orbit translation: f^{-1}.orbit_H(a) = orbit_{f^{-1}Hf}(f^{-1}.a).
    std::vector<CMatrix> conj_gens;
    for (const auto& g : inst.group.generators())
      conj_gens.push_back(fi * g * f.mat());
    const MatrixGroup conj_group =
        close_group(conj_gens, kDefaultClosureCap, tol);
    const PosDefMatrix fa(act_raw(fi, a.mat()), tol);
    const auto lhs = orbit(inst.group, a, tol);
    const auto rhs = orbit(conj_group, fa, tol);
    m.add(lhs.size() == rhs.size() ? 0.0 : -1.0);
    double worst_pt = 0.0;
    for (const auto& p : lhs) {
      const CMatrix moved = act_raw(fi, p.mat());
      double best = kInf;
      for (const auto& q : rhs) best = std::min(best, (moved - q.mat()).norm());
      worst_pt = std::max(worst_pt, best);
    }
    m.add(tol.fix * 10.0 - worst_pt);

    // Fixed-space translation as subspace equality.
    const FixedCone cone = fixed_cone(inst.group.generators(), {}, tol);
    const FixedCone conj_cone = fixed_cone(conj_gens, {}, tol);
    RMatrix moved(herm_space_dim(n), cone.rank());
    for (int k = 0; k < cone.rank(); ++k)
      moved.col(k) = herm_to_coords(act_raw(fi, cone.basis()[k]));
    m.add(tol.fix -
          subspace_gap(column_span_basis(moved, tol.nullspace),
                       conj_cone.coords()));
  }
  finish(rec, m);
}

void check_fixed_cone_geodesic(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(10), false);
  for (const auto& inst : groups) {
    const FixedCone cone = fixed_cone(inst.group.generators(), {}, tol);
    if (cone.rank() == 0) continue;
    // Random positive points of the cone.
    const auto sample = [&]() -> PosDefMatrix {
      const SpanProblem prob(cone.basis(), cone.dim());
      RVector c = feasible_positive_point(prob, tol);
      for (int k = 0; k < c.size(); ++k)
        c(k) *= 0.75 + 0.5 * ctx.rng.next_double();
      CMatrix raw = prob.assemble(c);
      RVector evals = herm_eigenvalues(raw);
      if (evals(0) <= 0)  // fall back to the feasibility point
        raw = prob.assemble(feasible_positive_point(prob, tol));
      return PosDefMatrix(raw, tol);
    };
    const PosDefMatrix a = sample();
    const PosDefMatrix b = sample();
    const Geodesic g(a, b, tol);
    for (int i = 0; i <= 10; ++i) {
      const PosDefMatrix pt = g.eval(i / 10.0);
      m.add(tol.fix -
            cone.span_residual(pt.mat()) / std::max(1.0, pt.mat().norm()));
    }
    // Fixedness of the basis elements under the generators.
    for (const auto& basis : cone.basis())
      for (const auto& gen : inst.group.generators())
        m.add(tol.fix - (act_raw(gen, basis) - basis).norm());
  }
  finish(rec, m);
}

void check_commutant_matches_fixed(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(8), true);
  for (const auto& inst : groups) {
    if (!inst.group.is_unitary(tol)) continue;
    const auto comm = commutant_basis(inst.group, tol);
    const FixedCone cone = fixed_cone(inst.group.generators(), {}, tol);
    RMatrix comm_coords(herm_space_dim(inst.group.dim()),
                        static_cast<int>(comm.size()));
    for (size_t k = 0; k < comm.size(); ++k)
      comm_coords.col(static_cast<int>(k)) = herm_to_coords(comm[k]);
    m.add(tol.fix - subspace_gap(comm_coords, cone.coords()));
  }
  // Schur: irreducible unitary groups have a one-dimensional commutant.
  m.add(commutant_basis(rep_dihedral(4, 0, tol).image_group(100, tol), tol)
                .size() == 1
            ? 0.0
            : -1.0);
  m.add(commutant_basis(rep_quaternion(tol).image_group(100, tol), tol)
                .size() == 1
            ? 0.0
            : -1.0);
  // Two inequivalent irreducible blocks: commutant dimension 2.
  const Representation two_blocks = rep_product_blocks(
      rep_dihedral(4, 0, tol), rep_dihedral(3, 0, tol), tol);
  m.add(commutant_basis(two_blocks.image_group(200, tol), tol).size() == 2
            ? 0.0
            : -1.0);
  finish(rec, m);
}

void check_dh_lipschitz_convex(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(8), false);
  for (const auto& inst : groups) {
    const int n = inst.group.dim();
    const PosDefMatrix a = random_posdef(n, 0.8, ctx.rng);
    const PosDefMatrix b = random_posdef(n, 0.8, ctx.rng);
    const double da = orbit_diameter(inst.group, a, MetricKind::OperatorNorm,
                                     tol);
    const double db = orbit_diameter(inst.group, b, MetricKind::OperatorNorm,
                                     tol);
    const double dab = dist(a, b, MetricKind::OperatorNorm);
    m.add(2.0 * dab + 1e-9 - std::abs(da - db));  // 2-Lipschitz

    // Invariance under the group action.
    const InvertibleMatrix h(inst.group.elements()[1 % inst.group.order()],
                             tol);
    const double moved =
        orbit_diameter(inst.group, act(h, a, tol), MetricKind::OperatorNorm,
                       tol);
    m.add(1e-8 - std::abs(moved - da));

    // Convexity along the geodesic (second differences).
    const Geodesic g(a, b, tol);
    std::vector<double> vals;
    for (int i = 0; i <= 10; ++i)
      vals.push_back(orbit_diameter(inst.group, g.eval(i / 10.0),
                                    MetricKind::OperatorNorm, tol));
    for (size_t i = 1; i + 1 < vals.size(); ++i)
      m.add(vals[i - 1] - 2.0 * vals[i] + vals[i + 1] + 1e-8);
  }
  finish(rec, m);
}

void check_dist_cone_lipschitz(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(4), false);
  for (const auto& inst : groups) {
    const int n = inst.group.dim();
    const FixedCone cone = fixed_cone(inst.group.generators(), {}, tol);
    const PosDefMatrix a = random_posdef(n, 0.8, ctx.rng);
    const PosDefMatrix b = random_posdef(n, 0.8, ctx.rng);
    const double fa =
        dist_to_fixed_cone(a, cone, MetricKind::OperatorNorm, tol).value;
    const double fb =
        dist_to_fixed_cone(b, cone, MetricKind::OperatorNorm, tol).value;
    const double dab = dist(a, b, MetricKind::OperatorNorm);
    m.add(dab + 1e-6 - std::abs(fa - fb));  // 1-Lipschitz

    const Geodesic g(a, b, tol);
    std::vector<double> vals;
    for (int i = 0; i <= 6; ++i)
      vals.push_back(
          dist_to_fixed_cone(g.eval(i / 6.0), cone, MetricKind::OperatorNorm,
                             tol)
              .value);
    for (size_t i = 1; i + 1 < vals.size(); ++i)
      m.add(vals[i - 1] - 2.0 * vals[i] + vals[i + 1] + 1e-6);
  }
  finish(rec, m);
}

// --------------------------- unitarize suite --------------------------------

void check_distdiam_identity(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(50), true);
  for (const auto& inst : groups) {
    const FixedCone cone = fixed_cone(inst.group.generators(), {}, tol);
    const SimReport sim = similarity_number(cone, tol);
    const auto to_cone = dist_to_fixed_cone(
        PosDefMatrix::identity(inst.group.dim()), cone,
        MetricKind::OperatorNorm, tol);
    m.add(1e-5 - std::abs(std::log(sim.sim_value) - to_cone.value));
    m.add(tol.sim - std::abs(std::log(sim.sim_value) - sim.dist_to_fixed));
    ctx.scatter.emplace_back(std::log(group_size_norm(inst.group)),
                             std::log(sim.sim_value));
  }
  finish(rec, m);
}

void check_diam_size_identity(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(50), true);
  for (const auto& inst : groups) {
    const double diam = orbit_diameter(
        inst.group, PosDefMatrix::identity(inst.group.dim()),
        MetricKind::OperatorNorm, tol);
    const double size = group_size_norm(inst.group);
    m.add(1e-8 - std::abs(diam - 2.0 * std::log(size)));
  }
  finish(rec, m);
}

void check_sim_irreducible(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  CMatrix s = CMatrix::Zero(2, 2);
  s(0, 0) = 2.0;
  s(1, 1) = 0.5;
  const CMatrix si = s.inverse();
  std::vector<Representation> reps;
  for (int n = 3; n <= 6; ++n) reps.push_back(rep_dihedral(n, 0, tol));
  reps.push_back(rep_quaternion(tol));
  reps.push_back(rep_clock_shift(2, tol));
  for (const auto& rep : reps) {
    std::vector<CMatrix> gens;
    for (const auto& img : rep.images) gens.push_back(s * img * si);
    const auto cone = fixed_cone(gens, {}, tol);
    m.add(cone.rank() == 1 ? 0.0 : -1.0);  // Schur after conjugation
    const SimReport sim = similarity_number(cone, tol);
    m.add(1e-4 - std::abs(sim.sim_value / 4.0 - 1.0));
  }
  finish(rec, m);
}

void check_average_unitarizer(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(24), true);
  for (const auto& inst : groups) {
    const Unitarizer u = average_unitarizer(inst.group, tol);
    m.add(tol.unitarize - u.residual);
    // Finite-average fixed point lies in [|H|^{-2} id, |H|^2 id], hence the
    // rescaled square root stays within [|H|^{-1} id, |H| id].
    const double size = group_size_norm(inst.group);
    m.add(size + 1e-9 - u.s.lambda_max());
    m.add(u.s.lambda_min() - 1.0 / size + 1e-9);
    // Symmetric spectrum after rescale.
    m.add(1e-10 -
          std::abs(std::log(u.s.lambda_max()) + std::log(u.s.lambda_min())));
  }
  finish(rec, m);
}

void check_circumcenter_unitarizer(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(10), true);
  for (const auto& inst : groups) {
    if (inst.group.dim() > 8) continue;  // circumcenter checks stay desk-size
    const Unitarizer u = circumcenter_unitarizer(inst.group, tol);
    m.add(tol.unitarize - u.residual);

    // Per-instance bound from the square-sum estimate: the log-diameter of
    // the orbit is controlled by D^2 C^2 with C the Frobenius defect of the
    // orbit points from id and D the log Lipschitz constant on the spectral
    // interval.
    const auto pts = orbit(inst.group, PosDefMatrix::identity(inst.group.dim()),
                           tol);
    double c2 = 0.0, interval_lo = kInf, interval_hi = 0.0;
    for (const auto& p : pts) {
      c2 = std::max(
          c2, (p.mat() - CMatrix::Identity(p.dim(), p.dim())).squaredNorm());
      interval_lo = std::min(interval_lo, p.lambda_min());
      interval_hi = std::max(interval_hi, p.lambda_max());
    }
    double dconst = 0.0;  // max |log x| / |x-1| over the spectral interval
    for (double x : {interval_lo, interval_hi})
      if (std::abs(x - 1.0) > 1e-12)
        dconst = std::max(dconst, std::abs(std::log(x)) / std::abs(x - 1.0));
    dconst = std::max(dconst, 1.0 / std::min(interval_lo, 1.0));
    double diam2 = 0.0;
    for (const auto& p : pts) {
      const double d = dist(PosDefMatrix::identity(p.dim()), p,
                            MetricKind::Frobenius);
      diam2 = std::max(diam2, d * d);
    }
    m.add(dconst * dconst * c2 + 1e-9 - diam2);
  }
  finish(rec, m);
}

void check_circumcenter_fixed(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(8), true);
  for (const auto& inst : groups) {
    if (inst.group.dim() > 8) continue;
    const PosDefMatrix base = random_posdef(inst.group.dim(), 0.6, ctx.rng);
    const auto pts = orbit(inst.group, base, tol);
    const PosDefMatrix center = circumcenter(pts, tol, ctx.rng.next_u64());
    double worst = 0.0;
    for (const auto& g : inst.group.generators())
      worst = std::max(worst,
                       (act_raw(g, center.mat()) - center.mat()).norm() /
                           std::max(1.0, center.mat().norm()));
    m.add(1e-5 - worst);
  }
  finish(rec, m);
}

void check_circumcenter_two_point(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  for (int dim : ctx.cfg.dims) {
    if (dim > 8) continue;
    const int trials = ctx.count(4);
    for (int t = 0; t < trials; ++t) {
      const PosDefMatrix a = random_posdef(dim, 0.8, ctx.rng);
      const PosDefMatrix b = random_posdef(dim, 0.8, ctx.rng);
      const PosDefMatrix mid = Geodesic(a, b, tol).eval(0.5);
      const PosDefMatrix center = circumcenter({a, b}, tol, ctx.rng.next_u64());
      m.add(10.0 * tol.cc - dist(center, mid, MetricKind::Frobenius));
      const double radius =
          std::max(dist(center, a, MetricKind::Frobenius),
                   dist(center, b, MetricKind::Frobenius));
      m.add(10.0 * tol.cc -
            std::abs(radius - 0.5 * dist(a, b, MetricKind::Frobenius)));
    }
  }
  finish(rec, m);
}

void check_leaf_circumcenter(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  std::vector<Representation> reps = {rep_dihedral(4, 0, tol),
                                      rep_quaternion(tol),
                                      rep_dihedral(3, 1, tol)};
  const int trials = ctx.count(4);
  for (const auto& rep : reps) {
    const MatrixGroup h = rep.image_group(200, tol);
    const auto comm = commutant_basis(h, tol);
    const int n = h.dim();
    RMatrix comm_coords(herm_space_dim(n), static_cast<int>(comm.size()));
    for (size_t k = 0; k < comm.size(); ++k)
      comm_coords.col(static_cast<int>(k)) = herm_to_coords(comm[k]);
    for (int t = 0; t < trials; ++t) {
      // Y in the commutant, X trace-orthogonal to it.
      RVector yc(comm.size());
      for (int k = 0; k < yc.size(); ++k)
        yc(k) = 0.6 * (2.0 * ctx.rng.next_double() - 1.0);
      CMatrix y = CMatrix::Zero(n, n);
      for (size_t k = 0; k < comm.size(); ++k) y += yc(k) * comm[k];
      RVector xv = herm_to_coords(random_hermitian_scaled(n, 0.7, ctx.rng));
      xv -= comm_coords * (comm_coords.transpose() * xv);
      const CMatrix x = coords_to_herm(xv, n);

      const CMatrix ey = herm_exp(y);
      const PosDefMatrix point(ey * herm_exp(x) * ey, tol);
      const auto pts = orbit(h, point, tol);
      const PosDefMatrix center = circumcenter(pts, tol, ctx.rng.next_u64());
      const CMatrix target = herm_exp(2.0 * y);
      m.add(1e-5 - (center.mat() - target).norm() /
                       std::max(1.0, target.norm()));
    }
  }
  finish(rec, m);
}

void check_block_diag_sim(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const int trials = ctx.count(6);
  for (int t = 0; t < trials; ++t) {
    const double cond1 = 1.5 + 2.0 * ctx.rng.next_double();
    const double cond2 = 1.5 + 2.0 * ctx.rng.next_double();
    const Representation r1 = gen_bounded_rep(
        {RepSpec::Family::Dihedral, 4, 2}, cond1, ctx.rng.next_u64(), tol);
    const Representation r2 = gen_bounded_rep(
        {RepSpec::Family::Quaternion, 0, 2}, cond2, ctx.rng.next_u64(), tol);
    const Representation sum = rep_product_blocks(r1, r2, tol);
    const MatrixGroup h = sum.image_group(kDefaultClosureCap, tol);
    const double sim1 =
        similarity_number(r1.image_group(200, tol), tol).sim_value;
    const double sim2 =
        similarity_number(r2.image_group(200, tol), tol).sim_value;
    const FixedCone cone = fixed_cone(h.generators(), {2, 2}, tol);
    const double combined = similarity_number(cone, tol).sim_value;
    m.add(1e-5 - std::abs(combined - std::max(sim1, sim2)));
  }
  finish(rec, m);
}

void check_amenable_bound(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(40), false);
  for (const auto& inst : groups) {
    const FixedCone cone = fixed_cone(inst.group.generators(), {}, tol);
    const int pts = 5;
    for (int p = 0; p < pts; ++p) {
      const PosDefMatrix a = random_posdef(inst.group.dim(), 0.7, ctx.rng);
      const double lhs =
          dist_to_fixed_cone(a, cone, MetricKind::OperatorNorm, tol).value;
      const double rhs =
          orbit_diameter(inst.group, a, MetricKind::OperatorNorm, tol);
      m.add(rhs + 1e-8 - lhs);
    }
  }
  finish(rec, m);
}

void check_kalpha_envelope(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(40), true);
  double k_fit = 1.0, alpha_fit = 0.0;
  for (const auto& inst : groups) {
    const double size = group_size_norm(inst.group);
    const SimReport sim = similarity_number(inst.group, tol);
    const double ls = std::log(size);
    const double lsim = std::log(sim.sim_value);
    ctx.scatter.emplace_back(ls, lsim);
    m.add(2.0 * ls + 1e-8 - lsim);  // (K, alpha) = (1, 2) envelope
    // Reverse bound: the orbit diameter at id is at most 2 log Sim.
    const double diam = orbit_diameter(
        inst.group, PosDefMatrix::identity(inst.group.dim()),
        MetricKind::OperatorNorm, tol);
    m.add(2.0 * lsim + 1e-8 - diam);
    if (ls > 1e-9) alpha_fit = std::max(alpha_fit, lsim / ls);
    else k_fit = std::max(k_fit, std::exp(lsim));
  }
  finish(rec, m);
  std::ostringstream detail;
  detail << "fit_K=" << k_fit << ",fit_alpha=" << alpha_fit;
  rec.detail = detail.str();
}

// ----------------------------- split suite ----------------------------------

CondExpectation random_expectation(CheckContext& ctx, int dim, bool pinching) {
  const Tolerances& tol = ctx.cfg.tol;
  if (pinching) {
    const int rank = 1 + static_cast<int>(ctx.rng.next_u64() %
                                          static_cast<std::uint64_t>(dim - 1));
    return pinching_expectation(random_projection(dim, rank, ctx.rng), tol);
  }
  // Small unitary groups acting in the given dimension.
  switch (ctx.rng.next_u64() % 3) {
    case 0: {
      std::vector<int> exps(dim);
      for (int i = 0; i < dim; ++i)
        exps[i] = static_cast<int>(ctx.rng.next_u64() % 4);
      return group_average_expectation(
          rep_cyclic_chars(4, exps, tol).image_group(16, tol), tol);
    }
    case 1: {
      const CMatrix u = random_unitary(dim, ctx.rng).mat();
      Representation rep = rep_cyclic_chars(2, std::vector<int>(dim, 0), tol);
      // Order-two subgroup generated by a conjugated diagonal sign matrix.
      CMatrix sign = CMatrix::Identity(dim, dim);
      for (int i = 0; i < dim / 2; ++i) sign(i, i) = -1.0;
      return group_average_expectation(
          close_group({u * sign * u.adjoint()}, 8, tol), tol);
    }
    default: {
      if (dim % 2 == 0) {
        Representation base = rep_dihedral(4, dim - 2, tol);
        return group_average_expectation(base.image_group(64, tol), tol);
      }
      std::vector<int> exps(dim);
      for (int i = 0; i < dim; ++i) exps[i] = i % 3;
      return group_average_expectation(
          rep_cyclic_chars(3, exps, tol).image_group(8, tol), tol);
    }
  }
}

void check_expectation_props(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  for (int dim : ctx.cfg.dims) {
    for (bool pinch : {true, false}) {
      const CondExpectation e = random_expectation(ctx, dim, pinch);
      const CMatrix id = CMatrix::Identity(dim, dim);
      m.add(tol.recon - (e.apply(id) - id).norm());
      const int trials = ctx.count(20);
      for (int t = 0; t < trials; ++t) {
        const CMatrix x = random_complex_matrix(dim, ctx.rng);
        const CMatrix ex = e.apply(x);
        m.add(tol.recon - (e.apply(ex) - ex).norm() /
                              std::max(1.0, ex.norm()));  // idempotent
        m.add(tol.recon - (e.apply(x.adjoint()) - ex.adjoint()).norm() /
                              std::max(1.0, ex.norm()));  // self-adjointness
        // Bimodule property over random range elements.
        RVector c1(e.range_basis().size()), c2(e.range_basis().size());
        for (int k = 0; k < c1.size(); ++k) {
          c1(k) = ctx.rng.next_gaussian();
          c2(k) = ctx.rng.next_gaussian();
        }
        CMatrix b1 = CMatrix::Zero(dim, dim), b2 = CMatrix::Zero(dim, dim);
        for (size_t k = 0; k < e.range_basis().size(); ++k) {
          b1 += c1(static_cast<int>(k)) * e.range_basis()[k];
          b2 += c2(static_cast<int>(k)) * e.range_basis()[k];
        }
        const double scale =
            std::max(1.0, b1.norm() * x.norm() * b2.norm());
        m.add(1e-8 - (e.apply(b1 * x * b2) - b1 * ex * b2).norm() / scale);
        if (!pinch)  // trace compatibility of the group average
          m.add(tol.recon -
                std::abs((e.apply(x) - x).trace().real()) /
                    std::max(1.0, std::abs(x.trace().real())));
      }
      // Range and kernel are orthogonal complements inside Hermitians.
      m.add(static_cast<double>(
                herm_space_dim(dim) -
                static_cast<int>(e.range_basis().size() +
                                 e.kernel_basis().size())) == 0.0
                ? 0.0
                : -1.0);
    }
  }
  finish(rec, m);
}

void check_pinching_contraction(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  double best_ratio = 0.0;
  for (int dim : ctx.cfg.dims) {
    const CondExpectation e = random_expectation(ctx, dim, true);
    const int trials = ctx.count(1000);
    for (int t = 0; t < trials; ++t) {
      const CMatrix x = random_hermitian(dim, ctx.rng);
      const double nx = operator_norm(x);
      const double r = operator_norm(x - e.apply(x));
      m.add(nx + 1e-10 - r);
      best_ratio = std::max(best_ratio, r / nx);
    }
    // Purely off-diagonal input attains the norm.
    const CMatrix probe = random_hermitian(dim, ctx.rng);
    const CMatrix off = probe - e.apply(probe);
    if (off.norm() > 1e-9) {
      const double r = operator_norm(off - e.apply(off)) / operator_norm(off);
      m.add(1e-10 - std::abs(r - 1.0));
      best_ratio = std::max(best_ratio, r);
    }
  }
  finish(rec, m);
  std::ostringstream detail;
  detail << "best_ratio=" << best_ratio;
  rec.detail = detail.str();
}

void check_schur_average(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  for (const auto& rep :
       {rep_dihedral(4, 0, tol), rep_quaternion(tol), rep_clock_shift(3, tol)}) {
    const MatrixGroup h = rep.image_group(200, tol);
    const CondExpectation e = group_average_expectation(h, tol);
    const int n = h.dim();
    const int trials = ctx.count(20);
    for (int t = 0; t < trials; ++t) {
      const CMatrix x = random_complex_matrix(n, ctx.rng);
      const CMatrix expected =
          (x.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
      m.add(1e-9 - (e.apply(x) - expected).norm() / std::max(1.0, x.norm()));
    }
  }
  finish(rec, m);
}

void check_split_positive(CheckContext& ctx, CheckRecord& rec, bool pinching) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(30);
    for (int t = 0; t < trials; ++t) {
      const CondExpectation e = random_expectation(ctx, dim, pinching);
      const PosDefMatrix a = random_posdef(dim, 1.2, ctx.rng);
      const PositiveSplit split = pr_split_positive(a, e, tol);
      const CMatrix ey = herm_exp(split.y.mat());
      const CMatrix recon = ey * herm_exp(split.x.mat()) * ey;
      m.add(tol.split -
            (recon - a.mat()).norm() / std::max(1.0, a.mat().norm()));
      m.add(tol.split - e.apply(split.x.mat()).norm());
      m.add(tol.split - e.range_residual(split.y.mat()));
    }
  }
  finish(rec, m);
}

void check_split_invertible(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(15);
    for (int t = 0; t < trials; ++t) {
      const bool pinch = (t % 2) == 0;
      const CondExpectation e = random_expectation(ctx, dim, pinch);
      const InvertibleMatrix g =
          random_invertible(dim, 1.5 + 3.0 * ctx.rng.next_double(), ctx.rng);
      const SplitTriple s = pr_split_invertible(g, e, tol);
      const CMatrix id = CMatrix::Identity(dim, dim);
      m.add(1e-8 - operator_norm(s.u.mat().adjoint() * s.u.mat() - id));
      const CMatrix recon =
          s.u.mat() * herm_exp(s.z.mat()) * herm_exp(s.y.mat());
      m.add(1e-8 - (recon - g.mat()).norm() / std::max(1.0, g.mat().norm()));
      m.add(tol.split - e.apply(s.z.mat()).norm());
      m.add(tol.split - e.range_residual(s.y.mat()));
    }
  }
  finish(rec, m);
}

void check_minexp_identity(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  for (int dim : ctx.cfg.dims) {
    const int trials = ctx.count(25);
    for (int t = 0; t < trials; ++t) {
      const CondExpectation e = random_expectation(ctx, dim, true);
      // Y in the range, X in the kernel.
      CMatrix y = CMatrix::Zero(dim, dim);
      for (const auto& b : e.range_basis())
        y += 0.5 * ctx.rng.next_gaussian() * b;
      CMatrix x = CMatrix::Zero(dim, dim);
      for (const auto& b : e.kernel_basis())
        x += 0.5 * ctx.rng.next_gaussian() * b;
      const CMatrix ey = herm_exp(y);
      const PosDefMatrix point(ey * herm_exp(x) * ey, tol);
      const PosDefMatrix target(herm_exp(2.0 * y), tol);
      const double lhs = dist(target, point, MetricKind::OperatorNorm);
      const double xnorm = operator_norm(x);
      m.add(1e-8 - std::abs(lhs - xnorm));
      // No sampled range point does better.
      for (int probe = 0; probe < 10; ++probe) {
        CMatrix w = CMatrix::Zero(dim, dim);
        for (const auto& b : e.range_basis())
          w += 0.5 * ctx.rng.next_gaussian() * b;
        const PosDefMatrix cand(herm_exp(w), tol);
        m.add(dist(cand, point, MetricKind::OperatorNorm) - xnorm + 1e-8);
      }
    }
  }
  finish(rec, m);
}

void check_minprop_projection(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  std::vector<Representation> reps = {rep_dihedral(4, 0, tol),
                                      rep_quaternion(tol),
                                      rep_dihedral(3, 1, tol)};
  const int trials = ctx.count(4);
  for (const auto& rep : reps) {
    const MatrixGroup h = rep.image_group(200, tol);
    const CondExpectation e = group_average_expectation(h, tol);
    const int n = h.dim();
    const FixedCone cone = fixed_cone(h.generators(), {}, tol);
    for (int t = 0; t < trials; ++t) {
      CMatrix y = CMatrix::Zero(n, n);
      for (const auto& b : e.range_basis())
        y += 0.4 * ctx.rng.next_gaussian() * b;
      CMatrix x = CMatrix::Zero(n, n);
      for (const auto& b : e.kernel_basis())
        x += 0.4 * ctx.rng.next_gaussian() * b;
      const CMatrix ey = herm_exp(y);
      const PosDefMatrix point(ey * herm_exp(x) * ey, tol);
      const auto proj =
          dist_to_fixed_cone(point, cone, MetricKind::Frobenius, tol);
      const CMatrix target = herm_exp(2.0 * y);
      m.add(1e-5 - (proj.witness.mat() - target).norm() /
                       std::max(1.0, target.norm()));
    }
  }
  finish(rec, m);
}

void check_canonical_unitarizer(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const int trials = ctx.count(10);
  for (int t = 0; t < trials; ++t) {
    const int mult1 = 1 + static_cast<int>(ctx.rng.next_u64() % 2);
    const int mult2 = 1 + static_cast<int>(ctx.rng.next_u64() % 2);
    const int n = mult1 + mult2;
    std::vector<int> exps;
    for (int i = 0; i < mult1; ++i) exps.push_back(0);
    for (int i = 0; i < mult2; ++i) exps.push_back(1);
    const Representation pi0 = rep_cyclic_chars(2, exps, tol);
    CMatrix p = CMatrix::Zero(n, n);
    for (int i = 0; i < mult1; ++i) p(i, i) = 1.0;
    const CondExpectation e = pinching_expectation(p, tol);
    const InvertibleMatrix g =
        random_invertible(n, 1.5 + 2.5 * ctx.rng.next_double(), ctx.rng);
    const CanonicalUnitarizer canon = canonical_unitarizer(g, pi0, e, tol);
    m.add(tol.unitarize - canon.unitarity_residual);
    m.add(tol.split - canon.kernel_residual);

    // E_rho range identity: conjugated expectation range = rho commutant.
    const CondExpectation e_rho =
        conjugated_expectation(e, canon.u.mat(), tol);
    const MatrixGroup rho_group = canon.rho.image_group(64, tol);
    const auto rho_comm = commutant_basis(rho_group, tol);
    RMatrix comm_coords(herm_space_dim(n), static_cast<int>(rho_comm.size()));
    for (size_t k = 0; k < rho_comm.size(); ++k)
      comm_coords.col(static_cast<int>(k)) = herm_to_coords(rho_comm[k]);
    m.add(tol.fix - subspace_gap(comm_coords, e_rho.range_coords()));
    m.add(tol.split - e_rho.apply(canon.x0.mat()).norm());
  }
  finish(rec, m);
}

void check_thmacs(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const int trials = ctx.count(20);
  for (int t = 0; t < trials; ++t) {
    // Two diagonal blocks; in each, two distinct characters of C_8 with
    // multiplicities, so the pinching by isotypic projections is exactly the
    // expectation onto the commutant.
    const int m1 = 1 + static_cast<int>(ctx.rng.next_u64() % 2);
    const int m2 = 1 + static_cast<int>(ctx.rng.next_u64() % 2);
    const int m3 = 1 + static_cast<int>(ctx.rng.next_u64() % 2);
    const int m4 = 1 + static_cast<int>(ctx.rng.next_u64() % 2);
    const int b1 = m1 + m2, b2 = m3 + m4;
    const int n = b1 + b2;
    std::vector<int> exps;
    for (int i = 0; i < m1; ++i) exps.push_back(0);
    for (int i = 0; i < m2; ++i) exps.push_back(1);
    for (int i = 0; i < m3; ++i) exps.push_back(2);
    for (int i = 0; i < m4; ++i) exps.push_back(3);
    const Representation pi0 = rep_cyclic_chars(8, exps, tol);

    std::vector<CMatrix> projections;
    int at = 0;
    for (int mult : {m1, m2, m3, m4}) {
      CMatrix p = CMatrix::Zero(n, n);
      for (int i = 0; i < mult; ++i) p(at + i, at + i) = 1.0;
      projections.push_back(p);
      at += mult;
    }
    const CondExpectation e = pinching_expectation(projections, tol);

    // Block-diagonal invertible g.
    CMatrix g = CMatrix::Zero(n, n);
    g.topLeftCorner(b1, b1) =
        random_invertible(b1, 1.3 + 1.5 * ctx.rng.next_double(), ctx.rng)
            .mat();
    g.bottomRightCorner(b2, b2) =
        random_invertible(b2, 1.3 + 1.5 * ctx.rng.next_double(), ctx.rng)
            .mat();
    const ThmacsReport report =
        thmacs_check(InvertibleMatrix(g, tol), pi0, e, {b1, b2}, tol);
    m.add(1e-3 - std::abs(report.ratio - 1.0));
    m.add(1e-3 - std::abs(report.intermediate / report.rhs - 1.0));
    m.add(tol.unitarize - report.unitarity_residual);
  }
  finish(rec, m);
}

void check_complement_norm_sweep(CheckContext& ctx, CheckRecord& rec) {
  // Exploratory: group-average expectations may have ||I-E|| above one on
  // Hermitians; log the estimates, assert only the generic sandwich
  // 1 <= estimate <= 2. Candidate gaps are reported, not judged.
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  std::ostringstream detail;
  detail << "estimates=";
  for (int dim : ctx.cfg.dims) {
    if (dim > 8) continue;
    const CondExpectation e = random_expectation(ctx, dim, false);
    const auto est = complement_norm_estimate(e, ctx.count(2000), ctx.rng);
    m.add(est.first - 1.0 + 1e-9);
    m.add(est.second - est.first + 1e-9);
    detail << dim << ":" << est.first << ";";
  }
  finish(rec, m);
  rec.detail = detail.str();
}

// -------------------------- interpolate suite -------------------------------

void check_interpolation_bounds(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(25), false);
  const auto grid = uniform_grid(11);
  for (const auto& inst : groups) {
    if (inst.group.order() > 600) continue;  // keep the family sweep desk-size
    const int n = inst.group.dim();
    const PosDefMatrix r2 = random_posdef(n, 0.5, ctx.rng);
    const PosDefMatrix s2 = random_posdef(n, 0.5, ctx.rng);
    const InterpolationReport report =
        verify_interpolation(inst.group, r2, s2, grid, 0.0, tol);
    m.add(report.worst_size_margin + 1e-8);
    m.add(report.worst_sim_margin + 1e-6);
  }
  finish(rec, m);
}

void check_interpolation_equality(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto grid = uniform_grid(11);
  const int trials = ctx.count(8);
  for (int t = 0; t < trials; ++t) {
    // Irreducible 2-dim representations conjugated by a known positive s:
    // the fixed cone is the ray of s^2 and the minimizer is closed form.
    const double cond = 2.0 + 4.0 * ctx.rng.next_double();
    RepSpec spec;
    spec.family = (t % 2 == 0) ? RepSpec::Family::Dihedral
                               : RepSpec::Family::Quaternion;
    spec.order_param = 3 + (t % 4);
    spec.dim = 2;
    const Representation rep =
        gen_bounded_rep(spec, cond, ctx.rng.next_u64(), tol);
    const MatrixGroup h = rep.image_group(200, tol);
    const SimReport sim = similarity_number(h, tol);
    const PosDefMatrix s2 = symmetric_rescale(sim.minimizer, tol);
    const InterpolationReport report = verify_interpolation(
        h, PosDefMatrix::identity(2), s2, grid, sim.sim_value, tol);
    m.add(1e-4 - report.worst_equality_error);
    // Corollary: |H_t| <= |H|^{1-t} with the unitarizing endpoint.
    const double size = group_size_norm(h);
    for (const auto& pt : report.family)
      m.add(std::pow(size, 1.0 - pt.t) + 1e-8 - pt.size_t_);
  }
  finish(rec, m);
}

void check_extension_chain(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const int trials = ctx.count(6);
  for (int t = 0; t < trials; ++t) {
    // Gamma = dihedral image, Sigma = rotation subgroup (normal), both
    // conjugated by the same invertible.
    const int order = 3 + (t % 5);
    const Representation gamma_rep = gen_bounded_rep(
        {RepSpec::Family::Dihedral, order, 2}, 1.5 + 2.0 * ctx.rng.next_double(),
        ctx.rng.next_u64(), tol);
    const MatrixGroup gamma = gamma_rep.image_group(200, tol);
    // The rotation generator is the conjugate of the rotation image; find a
    // maximal-order element as the subgroup generator.
    const auto& els = gamma.elements();
    int best_idx = 1;
    int best_order = 1;
    for (size_t i = 1; i < els.size(); ++i) {
      CMatrix p = els[i];
      int ord = 1;
      while ((p - CMatrix::Identity(2, 2)).norm() > tol.group && ord < 64) {
        p = p * els[i];
        ++ord;
      }
      if (ord > best_order) {
        best_order = ord;
        best_idx = static_cast<int>(i);
      }
    }
    const ExtensionReport report =
        extension_experiment({els[best_idx]}, gamma.generators(), tol);
    m.add(report.chain_margin + 1e-6);

    // Collapsed chain when Sigma = Gamma.
    const ExtensionReport collapsed =
        extension_experiment(gamma.generators(), gamma.generators(), tol);
    m.add(collapsed.chain_margin + 1e-6);
    m.add(1e-6 - std::abs(collapsed.dist_sigma - collapsed.dist_gamma));
  }
  finish(rec, m);
}

void check_dh_profile(CheckContext& ctx, CheckRecord& rec) {
  const Tolerances& tol = ctx.cfg.tol;
  Margin m;
  const auto groups = catalog_groups(ctx, ctx.count(6), false);
  for (const auto& inst : groups) {
    const int n = inst.group.dim();
    const Geodesic g(random_posdef(n, 0.8, ctx.rng),
                     random_posdef(n, 0.8, ctx.rng), tol);
    std::vector<double> vals;
    for (int i = 0; i <= 10; ++i)
      vals.push_back(orbit_diameter(inst.group, g.eval(i / 10.0),
                                    MetricKind::OperatorNorm, tol));
    for (size_t i = 1; i + 1 < vals.size(); ++i)
      m.add(vals[i - 1] - 2.0 * vals[i] + vals[i + 1] + 1e-8);
    const double step = dist(g.eval(0.0), g.eval(0.1), MetricKind::OperatorNorm);
    for (size_t i = 1; i < vals.size(); ++i)
      m.add(2.0 * step + 1e-9 - std::abs(vals[i] - vals[i - 1]));
  }
  finish(rec, m);
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"matcore.exp_log_roundtrip", "geometry",
       "spectral exponential and logarithm invert each other on the cone",
       check_exp_log_roundtrip},
      {"matcore.power_composition", "geometry",
       "spectral powers compose multiplicatively", check_power_composition},
      {"matcore.eig_frame_invariance", "geometry",
       "eigenvalues are invariant under unitary frame changes",
       check_eig_frame_invariance},
      {"geometry.geodesic_endpoints", "geometry",
       "geodesic curve hits its endpoints", check_geodesic_endpoints},
      {"geometry.geodesic_proportional", "geometry",
       "distance along the geodesic is proportional to the parameter",
       check_geodesic_proportional},
      {"geometry.action_isometry", "geometry",
       "conjugation action preserves both metrics", check_action_isometry},
      {"geometry.action_composition", "geometry",
       "conjugation action composes as a group action",
       check_action_composition},
      {"geometry.segal", "geometry",
       "triple-product exponential norm dominates the sum exponential",
       check_segal},
      {"geometry.emi", "geometry",
       "exponential map increases distances from the tangent space",
       check_emi},
      {"geometry.joint_convexity", "geometry",
       "distance between geodesics is convex in the parameter",
       check_joint_convexity},
      {"geometry.cat0_midpoint", "geometry",
       "Frobenius midpoints satisfy the CAT(0) parallelogram bound",
       check_cat0_midpoint},
      {"geometry.banach_mazur", "geometry",
       "quadratic-form pencil distance agrees with the cone metric",
       check_banach_mazur},

      {"groups.closure_catalog", "groups",
       "catalog closures reach their abstract orders",
       check_closure_catalog},
      {"groups.orbit_divides", "groups",
       "orbit cardinality divides the group order", check_orbit_divides},
      {"groups.translation_laws", "groups",
       "orbits and fixed spaces translate along the action",
       check_translation_laws},
      {"groups.fixed_cone_geodesic", "groups",
       "the fixed cone is totally geodesic", check_fixed_cone_geodesic},
      {"groups.commutant_fixed_match", "groups",
       "for unitary groups the fixed space is the commutant",
       check_commutant_matches_fixed},
      {"groups.dh_lipschitz_convex", "groups",
       "orbit diameter is invariant, 2-Lipschitz and geodesically convex",
       check_dh_lipschitz_convex},
      {"groups.dist_cone_lipschitz", "groups",
       "distance to the fixed cone is 1-Lipschitz and geodesically convex",
       check_dist_cone_lipschitz},

      {"unitarize.distdiam_identity", "unitarize",
       "log similarity number equals the distance to the fixed cone",
       check_distdiam_identity},
      {"unitarize.diam_size_identity", "unitarize",
       "orbit diameter at id equals twice the log of the group size",
       check_diam_size_identity},
      {"unitarize.sim_irreducible", "unitarize",
       "irreducible conjugates have similarity number equal to the "
       "conjugator condition",
       check_sim_irreducible},
      {"unitarize.average_unitarizer", "unitarize",
       "group averaging unitarizes within the operator interval bound",
       check_average_unitarizer},
      {"unitarize.circumcenter_unitarizer", "unitarize",
       "orbit circumcenters unitarize with the square-sum diameter bound",
       check_circumcenter_unitarizer},
      {"unitarize.circumcenter_fixed", "unitarize",
       "orbit circumcenters are fixed by the group action",
       check_circumcenter_fixed},
      {"unitarize.circumcenter_two_point", "unitarize",
       "two-point circumcenters are geodesic midpoints",
       check_circumcenter_two_point},
      {"unitarize.leaf_circumcenter", "unitarize",
       "circumcenters of normal-leaf orbits sit at the leaf foot",
       check_leaf_circumcenter},
      {"unitarize.block_diag_sim", "unitarize",
       "block-diagonal similarity numbers are the blockwise maximum",
       check_block_diag_sim},
      {"unitarize.amenable_bound", "unitarize",
       "distance to the fixed cone is dominated by the orbit diameter",
       check_amenable_bound},
      {"unitarize.kalpha_envelope", "unitarize",
       "the (K, alpha) = (1, 2) envelope dominates the sweep",
       check_kalpha_envelope},

      {"split.expectation_props", "split",
       "expectations are idempotent self-adjoint bimodule maps",
       check_expectation_props},
      {"split.pinching_contraction", "split",
       "the pinching complement contracts Hermitians",
       check_pinching_contraction},
      {"split.schur_average", "split",
       "averaging over an irreducible group is the normalized trace",
       check_schur_average},
      {"split.positive_pinching", "split",
       "positive splitting reconstructs through a pinching",
       [](CheckContext& ctx, CheckRecord& rec) {
         check_split_positive(ctx, rec, true);
       }},
      {"split.positive_group_average", "split",
       "positive splitting reconstructs through a group average",
       [](CheckContext& ctx, CheckRecord& rec) {
         check_split_positive(ctx, rec, false);
       }},
      {"split.invertible", "split",
       "invertible splitting g = u e^Z e^Y reconstructs with unitary u",
       check_split_invertible},
      {"split.minexp_identity", "split",
       "distance from a normal-leaf point to the range foot is the kernel "
       "norm",
       check_minexp_identity},
      {"split.minprop_projection", "split",
       "Frobenius projection onto the commutant cone is the leaf foot",
       check_minprop_projection},
      {"split.canonical_unitarizer", "split",
       "the splitting unitarizer conjugates the orbit representation back "
       "to unitaries",
       check_canonical_unitarizer},
      {"split.thmacs", "split",
       "the canonical unitarizer attains the similarity number on "
       "block-diagonal setups",
       check_thmacs},
      {"split.complement_norm_sweep", "split",
       "exploratory sweep of complement norms for group averages",
       check_complement_norm_sweep},

      {"interpolate.bounds", "interpolate",
       "size and similarity interpolate multiplicatively along geodesics",
       check_interpolation_bounds},
      {"interpolate.equality_branch", "interpolate",
       "families toward the minimizing fixed point interpolate exactly",
       check_interpolation_equality},
      {"interpolate.extension_chain", "interpolate",
       "the normal-subgroup distance chain holds term by term",
       check_extension_chain},
      {"interpolate.dh_profile", "interpolate",
       "orbit diameter profiles along geodesics are convex and Lipschitz",
       check_dh_profile},
  };
  return defs;
}

}  // namespace

}  // namespace conegeo
