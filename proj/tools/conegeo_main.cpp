// Command-line front end: metric queries, group operations, unitarizers,
// splittings, interpolation families, and the verification suites.

#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conegeo/harness.hpp"
#include "conegeo/json_io.hpp"
#include "json.hpp"

namespace {

using namespace conegeo;
using nlohmann::json;

MetricKind parse_metric(const std::string& name) {
  if (name == "op") return MetricKind::OperatorNorm;
  if (name == "frob") return MetricKind::Frobenius;
  throw BadSpec("metric must be 'op' or 'frob'");
}

json matrix_json(const CMatrix& m) { return json::parse(matrix_to_json(m)); }

json rep_to_json(const Representation& rep) {
  json images = json::array();
  for (const auto& img : rep.images) images.push_back(matrix_json(img));
  return json{{"dim", rep.dim()},
              {"identity", rep.identity},
              {"table", rep.table},
              {"images", images}};
}

Representation rep_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
  Representation rep;
  rep.identity = j.value("identity", 0);
  rep.table = j.at("table").get<std::vector<std::vector<int>>>();
  for (const auto& img : j.at("images"))
    rep.images.push_back(matrix_from_json(img.dump()));
  if (rep.images.size() != rep.table.size())
    throw IoError(path + ": table and images sizes differ");
  return rep;
}

CondExpectation parse_expectation(const std::string& spec,
                                  const Tolerances& tol) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw BadSpec("expectation must be pinching:P.json or avg:GROUP.json");
  const std::string kind = spec.substr(0, colon);
  const std::string path = spec.substr(colon + 1);
  if (kind == "pinching")
    return pinching_expectation(read_matrix_file(path), tol);
  if (kind == "avg")
    return group_average_expectation(
        close_group(read_group_file(path), kDefaultClosureCap, tol), tol);
  throw BadSpec("unknown expectation kind: " + kind);
}

std::vector<double> parse_grid(int points) {
  if (points < 2) throw BadSpec("grid needs at least 2 points");
  return uniform_grid(points);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometry of the positive-definite cone: metrics, group "
               "actions, unitarizers, splittings, verification suites"};
  app.require_subcommand(1);

  Tolerances tol;
  std::vector<std::string> tol_overrides;
  app.add_option("--tol", tol_overrides,
                 "tolerance override KEY=VAL (repeatable)")
      ->take_all();

  std::string a_path, b_path, point_path, group_path, out_path;
  std::string metric = "op";
  double t_param = 0.5;

  auto* dist_cmd = app.add_subcommand("dist", "distance between two points");
  dist_cmd->add_option("--a", a_path, "matrix JSON")->required();
  dist_cmd->add_option("--b", b_path, "matrix JSON")->required();
  dist_cmd->add_option("--metric", metric, "op|frob");

  auto* geo_cmd = app.add_subcommand("geodesic", "evaluate the geodesic");
  geo_cmd->add_option("--a", a_path, "matrix JSON")->required();
  geo_cmd->add_option("--b", b_path, "matrix JSON")->required();
  geo_cmd->add_option("--t", t_param, "parameter");
  geo_cmd->add_option("--out", out_path, "write the matrix here");

  std::string delta_convention = "quad";
  auto* delta_cmd =
      app.add_subcommand("delta", "Banach-Mazur distance between forms");
  delta_cmd->add_option("--a", a_path, "matrix JSON")->required();
  delta_cmd->add_option("--b", b_path, "matrix JSON")->required();
  delta_cmd->add_option("--convention", delta_convention, "quad|normsq");

  std::string check_kind = "segal";
  int trials = 1000;
  std::uint64_t seed = 20260810;
  std::vector<int> dims = {2, 4, 8, 16};
  auto* check_cmd =
      app.add_subcommand("check", "sample an inequality, report the minimum");
  check_cmd->add_option("kind", check_kind, "segal|emi")->required();
  check_cmd->add_option("--trials", trials, "instances per dimension");
  check_cmd->add_option("--seed", seed, "RNG seed");
  check_cmd->add_option("--dims", dims, "dimensions")->take_all();

  auto* group_cmd = app.add_subcommand("group", "finite group operations");
  group_cmd->require_subcommand(1);
  int cap = kDefaultClosureCap;
  auto* close_cmd = group_cmd->add_subcommand("close", "enumerate the closure");
  close_cmd->add_option("--group", group_path, "group JSON")->required();
  close_cmd->add_option("--cap", cap, "closure cap");
  auto* od_cmd =
      group_cmd->add_subcommand("orbit-diameter", "diameter of an orbit");
  od_cmd->add_option("--group", group_path, "group JSON")->required();
  od_cmd->add_option("--point", point_path, "base point JSON")->required();
  od_cmd->add_option("--metric", metric, "op|frob");

  std::string method = "avg";
  auto* unit_cmd = app.add_subcommand("unitarize", "construct a unitarizer");
  unit_cmd->add_option("--group", group_path, "group JSON")->required();
  unit_cmd->add_option("--method", method, "avg|cc|sim");

  auto* sim_cmd =
      app.add_subcommand("sim-number", "similarity number of a group");
  sim_cmd->add_option("--group", group_path, "group JSON")->required();

  std::string g_path, expectation_spec, rep_path, proj_path;
  auto* split_cmd =
      app.add_subcommand("split", "factor an invertible along an expectation");
  split_cmd->add_option("--g", g_path, "matrix JSON")->required();
  split_cmd
      ->add_option("--expectation", expectation_spec,
                   "pinching:P.json or avg:GROUP.json")
      ->required();

  std::vector<int> blocks;
  auto* thmacs_cmd = app.add_subcommand(
      "thmacs", "norm-product minimality report for a canonical unitarizer");
  thmacs_cmd->add_option("--g", g_path, "matrix JSON")->required();
  thmacs_cmd->add_option("--rep", rep_path, "representation JSON")->required();
  thmacs_cmd->add_option("--proj", proj_path, "pinching projection JSON")
      ->required();
  thmacs_cmd->add_option("--blocks", blocks, "diagonal block sizes")
      ->take_all();

  std::string r2_path, s2_path;
  int grid_points = 11;
  auto* interp_cmd =
      app.add_subcommand("interpolate", "conjugated family along a geodesic");
  interp_cmd->add_option("--group", group_path, "group JSON")->required();
  interp_cmd->add_option("--r2", r2_path, "left endpoint JSON")->required();
  interp_cmd->add_option("--s2", s2_path, "right endpoint JSON")->required();
  interp_cmd->add_option("--grid", grid_points, "grid size");

  std::string suite = "all";
  double trials_scale = 1.0;
  std::string csv_path;
  int threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite,
                         "all|geometry|groups|unitarize|split|interpolate");
  verify_cmd->add_option("--seed", seed, "RNG seed");
  verify_cmd->add_option("--dims", dims, "dimensions")->take_all();
  verify_cmd->add_option("--trials", trials_scale,
                         "instance count multiplier");
  verify_cmd->add_option("--out", out_path, "JSONL report path");
  verify_cmd->add_option("--csv", csv_path, "size/sim scatter CSV path");
  verify_cmd->add_option("--threads", threads, "worker cap (0 = auto)");

  auto* gen_cmd = app.add_subcommand("gen", "instance generators");
  gen_cmd->require_subcommand(1);
  std::string family = "cyclic";
  int order_param = 4, dim_param = 2;
  double cond = 2.0;
  std::string rep_out;
  auto* gen_rep = gen_cmd->add_subcommand(
      "rep", "catalog representation conjugated to a condition target");
  gen_rep->add_option("--family", family,
                      "cyclic|cyclic-regular|dihedral|quaternion|clock-shift");
  gen_rep->add_option("--order", order_param, "group order parameter");
  gen_rep->add_option("--dim", dim_param, "representation dimension");
  gen_rep->add_option("--cond", cond, "conjugator condition number");
  gen_rep->add_option("--seed", seed, "RNG seed");
  gen_rep->add_option("--out", out_path, "write group JSON here");
  gen_rep->add_option("--rep-out", rep_out, "write representation JSON here");

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& kv : tol_overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw BadSpec("tolerance override must be KEY=VAL");
      tol.set(kv.substr(0, eq), std::stod(kv.substr(eq + 1)));
    }

    if (*dist_cmd) {
      const PosDefMatrix a(read_matrix_file(a_path), tol);
      const PosDefMatrix b(read_matrix_file(b_path), tol);
      emit(json{{"value", dist(a, b, parse_metric(metric))}});
    } else if (*geo_cmd) {
      const PosDefMatrix a(read_matrix_file(a_path), tol);
      const PosDefMatrix b(read_matrix_file(b_path), tol);
      const CMatrix out = Geodesic(a, b, tol).eval(t_param).mat();
      if (out_path.empty()) emit(matrix_json(out));
      else write_matrix_file(out_path, out);
    } else if (*delta_cmd) {
      const PosDefMatrix a(read_matrix_file(a_path), tol);
      const PosDefMatrix b(read_matrix_file(b_path), tol);
      const auto convention = delta_convention == "normsq"
                                  ? BanachMazurConvention::NormSquaredPencil
                                  : BanachMazurConvention::QuadraticFormPencil;
      emit(json{{"value", banach_mazur_delta(a, b, convention)}});
    } else if (*check_cmd) {
      CounterRng rng(seed);
      double min_residual = std::numeric_limits<double>::infinity();
      std::uint64_t worst_seed = 0;
      for (int dim : dims)
        for (int i = 0; i < trials; ++i) {
          const std::uint64_t tag =
              (static_cast<std::uint64_t>(dim) << 32) | i;
          double r;
          if (check_kind == "segal") {
            const HermitianMatrix x(random_hermitian_scaled(dim, 1.5, rng));
            const HermitianMatrix y(random_hermitian_scaled(dim, 1.5, rng));
            r = segal_residual(x, y);
          } else if (check_kind == "emi") {
            const PosDefMatrix a = random_posdef(dim, 1.0, rng);
            const HermitianMatrix x(random_hermitian_scaled(dim, 1.0, rng));
            const HermitianMatrix y(random_hermitian_scaled(dim, 1.0, rng));
            r = emi_residual(a, x, y);
          } else {
            throw BadSpec("unknown check kind: " + check_kind);
          }
          if (r < min_residual) {
            min_residual = r;
            worst_seed = tag;
          }
        }
      emit(json{{"min_residual", min_residual}, {"worst_seed", worst_seed}});
    } else if (*group_cmd) {
      const auto gens = read_group_file(group_path);
      if (*close_cmd) {
        const MatrixGroup g = close_group(gens, cap, tol);
        emit(json{{"order", g.order()},
                  {"unitary", g.is_unitary(tol)},
                  {"size_norm", group_size_norm(g)}});
      } else {
        const MatrixGroup g = close_group(gens, cap, tol);
        const PosDefMatrix a(read_matrix_file(point_path), tol);
        emit(json{{"value",
                   orbit_diameter(g, a, parse_metric(metric), tol)}});
      }
    } else if (*unit_cmd) {
      const MatrixGroup g =
          close_group(read_group_file(group_path), kDefaultClosureCap, tol);
      Unitarizer u;
      if (method == "avg") u = average_unitarizer(g, tol);
      else if (method == "cc") u = circumcenter_unitarizer(g, tol);
      else if (method == "sim") {
        const SimReport sim = similarity_number(g, tol);
        u.method = UnitarizerMethod::SimOptimizer;
        u.s = symmetric_rescale(
            PosDefMatrix(sim.minimizer.power(0.5), tol), tol);
        u.residual = unitarize_residual(u.s, g.generators());
      } else {
        throw BadSpec("method must be avg, cc or sim");
      }
      emit(json{{"s", matrix_json(u.s.mat())},
                {"residual", u.residual},
                {"method", method}});
    } else if (*sim_cmd) {
      const MatrixGroup g =
          close_group(read_group_file(group_path), kDefaultClosureCap, tol);
      const SimReport sim = similarity_number(g, tol);
      emit(json{{"sim", sim.sim_value},
                {"dist", sim.dist_to_fixed},
                {"converged", sim.converged},
                {"iterations", sim.iterations}});
    } else if (*split_cmd) {
      const InvertibleMatrix g(read_matrix_file(g_path), tol);
      const CondExpectation e = parse_expectation(expectation_spec, tol);
      const SplitTriple s = pr_split_invertible(g, e, tol);
      const CMatrix recon =
          s.u.mat() * herm_exp(s.z.mat()) * herm_exp(s.y.mat());
      emit(json{{"u", matrix_json(s.u.mat())},
                {"z", matrix_json(s.z.mat())},
                {"y", matrix_json(s.y.mat())},
                {"iterations", s.iterations},
                {"reconstruction_residual",
                 (recon - g.mat()).norm() / std::max(1.0, g.mat().norm())},
                {"kernel_residual", e.apply(s.z.mat()).norm()}});
    } else if (*thmacs_cmd) {
      const InvertibleMatrix g(read_matrix_file(g_path), tol);
      const Representation rep = rep_from_file(rep_path);
      const CondExpectation e =
          pinching_expectation(read_matrix_file(proj_path), tol);
      if (blocks.empty()) blocks = {g.dim()};
      const ThmacsReport report = thmacs_check(g, rep, e, blocks, tol);
      emit(json{{"lhs", report.lhs},
                {"rhs", report.rhs},
                {"ratio", report.ratio},
                {"intermediate", report.intermediate},
                {"unitarity_residual", report.unitarity_residual},
                {"complement_norm", report.complement_norm}});
    } else if (*interp_cmd) {
      const MatrixGroup g =
          close_group(read_group_file(group_path), kDefaultClosureCap, tol);
      const PosDefMatrix r2(read_matrix_file(r2_path), tol);
      const PosDefMatrix s2(read_matrix_file(s2_path), tol);
      const InterpolationReport report = verify_interpolation(
          g, r2, s2, parse_grid(grid_points), 0.0, tol);
      json points = json::array();
      for (size_t i = 0; i < report.family.size(); ++i) {
        const auto& pt = report.family[i];
        points.push_back(json{{"t", pt.t},
                              {"size", pt.size_t_},
                              {"sim", pt.sim_t},
                              {"order", pt.group_t.order()},
                              {"size_margin", report.size_margin[i]},
                              {"sim_margin", report.sim_margin[i]}});
      }
      emit(json{{"points", points},
                {"worst_size_margin", report.worst_size_margin},
                {"worst_sim_margin", report.worst_sim_margin}});
    } else if (*verify_cmd) {
      ExperimentConfig cfg;
      cfg.seed = seed;
      cfg.dims = dims;
      cfg.trials = trials_scale;
      cfg.tol = tol;
      cfg.out_path = out_path;
      cfg.csv_path = csv_path;
      cfg.threads = threads;
      const SuiteReport report =
          run_suite(cfg, suite == "all" ? std::string() : suite);
      for (const auto& c : report.checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id
                  << "  margin=" << c.worst_margin
                  << "  instances=" << c.instances << "\n";
      std::cout << report.passed() << "/" << report.checks.size()
                << " checks passed in " << report.total_runtime_s << "s\n";
      return report.all_pass() ? 0 : 1;
    } else if (*gen_rep) {
      RepSpec spec;
      if (family == "cyclic") spec.family = RepSpec::Family::Cyclic;
      else if (family == "cyclic-regular")
        spec.family = RepSpec::Family::CyclicRegular;
      else if (family == "dihedral") spec.family = RepSpec::Family::Dihedral;
      else if (family == "quaternion")
        spec.family = RepSpec::Family::Quaternion;
      else if (family == "clock-shift")
        spec.family = RepSpec::Family::ClockShift;
      else throw BadSpec("unknown family: " + family);
      spec.order_param = order_param;
      spec.dim = dim_param;
      const Representation rep = gen_bounded_rep(spec, cond, seed, tol);
      if (!out_path.empty()) write_group_file(out_path, rep.images);
      if (!rep_out.empty()) {
        std::ofstream out(rep_out);
        if (!out) throw IoError("cannot write " + rep_out);
        out << rep_to_json(rep).dump(2) << "\n";
      }
      emit(json{{"order", rep.order()},
                {"dim", rep.dim()},
                {"homomorphism_residual", rep.homomorphism_residual()}});
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
