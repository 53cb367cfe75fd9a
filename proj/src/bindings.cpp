// Python bindings for the main operations: metric geometry of the cone,
// finite matrix groups, unitarizers and similarity numbers, splittings, and
// the verification suites. Matrices cross the boundary as complex numpy
// arrays.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conegeo/harness.hpp"
#include "conegeo/json_io.hpp"

namespace py = pybind11;
using namespace conegeo;

namespace {

MetricKind parse_metric(const std::string& name) {
  if (name == "op") return MetricKind::OperatorNorm;
  if (name == "frob") return MetricKind::Frobenius;
  throw BadSpec("metric must be 'op' or 'frob'");
}

RepSpec::Family parse_family(const std::string& name) {
  if (name == "cyclic") return RepSpec::Family::Cyclic;
  if (name == "cyclic-regular") return RepSpec::Family::CyclicRegular;
  if (name == "dihedral") return RepSpec::Family::Dihedral;
  if (name == "quaternion") return RepSpec::Family::Quaternion;
  if (name == "clock-shift") return RepSpec::Family::ClockShift;
  throw BadSpec("unknown family: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "geometry of the positive-definite cone, group unitarization "
            "and operator splittings";

  py::register_exception<Error>(m, "ConegeoError");

  py::class_<MatrixGroup>(m, "Group")
      .def_property_readonly("dim", &MatrixGroup::dim)
      .def_property_readonly("order", &MatrixGroup::order)
      .def_property_readonly("elements",
                             [](const MatrixGroup& g) { return g.elements(); })
      .def_property_readonly(
          "generators", [](const MatrixGroup& g) { return g.generators(); })
      .def("is_unitary",
           [](const MatrixGroup& g) { return g.is_unitary(Tolerances{}); })
      .def("size_norm", [](const MatrixGroup& g) { return group_size_norm(g); });

  py::class_<CondExpectation>(m, "Expectation")
      .def_property_readonly("dim", &CondExpectation::dim)
      .def_property_readonly("range_basis",
                             [](const CondExpectation& e) {
                               return e.range_basis();
                             })
      .def_property_readonly("kernel_basis",
                             [](const CondExpectation& e) {
                               return e.kernel_basis();
                             })
      .def("apply", [](const CondExpectation& e, const CMatrix& x) {
        return e.apply(x);
      });

  m.def("dist",
        [](const CMatrix& a, const CMatrix& b, const std::string& metric) {
          return dist(PosDefMatrix(a), PosDefMatrix(b), parse_metric(metric));
        },
        py::arg("a"), py::arg("b"), py::arg("metric") = "op");

  m.def("geodesic",
        [](const CMatrix& a, const CMatrix& b, double t) {
          return Geodesic(PosDefMatrix(a), PosDefMatrix(b)).eval(t).mat();
        },
        py::arg("a"), py::arg("b"), py::arg("t"));

  m.def("act",
        [](const CMatrix& g, const CMatrix& a) {
          return act(InvertibleMatrix(g), PosDefMatrix(a)).mat();
        },
        py::arg("g"), py::arg("a"));

  m.def("banach_mazur_delta",
        [](const CMatrix& a, const CMatrix& b, const std::string& convention) {
          const auto c = convention == "normsq"
                             ? BanachMazurConvention::NormSquaredPencil
                             : BanachMazurConvention::QuadraticFormPencil;
          return banach_mazur_delta(PosDefMatrix(a), PosDefMatrix(b), c);
        },
        py::arg("a"), py::arg("b"), py::arg("convention") = "quad");

  m.def("segal_residual",
        [](const CMatrix& x, const CMatrix& y) {
          return segal_residual(HermitianMatrix(x), HermitianMatrix(y));
        },
        py::arg("x"), py::arg("y"));

  m.def("emi_residual",
        [](const CMatrix& a, const CMatrix& x, const CMatrix& y) {
          return emi_residual(PosDefMatrix(a), HermitianMatrix(x),
                              HermitianMatrix(y));
        },
        py::arg("a"), py::arg("x"), py::arg("y"));

  m.def("expm", [](const CMatrix& x) {
    return exp_herm(HermitianMatrix(x)).mat();
  });
  m.def("logm", [](const CMatrix& a) { return PosDefMatrix(a).log(); });
  m.def("powm", [](const CMatrix& a, double t) {
    return PosDefMatrix(a).power(t);
  });

  m.def("close_group",
        [](const std::vector<CMatrix>& gens, int cap) {
          return close_group(gens, cap);
        },
        py::arg("generators"), py::arg("cap") = kDefaultClosureCap);

  m.def("orbit",
        [](const MatrixGroup& g, const CMatrix& a) {
          std::vector<CMatrix> out;
          for (const auto& p : orbit(g, PosDefMatrix(a))) out.push_back(p.mat());
          return out;
        },
        py::arg("group"), py::arg("a"));

  m.def("orbit_diameter",
        [](const MatrixGroup& g, const CMatrix& a, const std::string& metric) {
          return orbit_diameter(g, PosDefMatrix(a), parse_metric(metric));
        },
        py::arg("group"), py::arg("a"), py::arg("metric") = "op");

  m.def("fixed_cone_basis",
        [](const std::vector<CMatrix>& gens) {
          return fixed_cone(gens).basis();
        },
        py::arg("generators"));

  m.def("commutant_basis",
        [](const MatrixGroup& g) { return commutant_basis(g); },
        py::arg("group"));

  m.def("symmetric_rescale", [](const CMatrix& a) {
    return symmetric_rescale(PosDefMatrix(a)).mat();
  });

  m.def("average_unitarizer",
        [](const MatrixGroup& g) {
          const Unitarizer u = average_unitarizer(g);
          return py::dict(py::arg("s") = u.s.mat(),
                          py::arg("residual") = u.residual);
        },
        py::arg("group"));

  m.def("circumcenter",
        [](const std::vector<CMatrix>& points, std::uint64_t seed) {
          std::vector<PosDefMatrix> pts;
          for (const auto& p : points) pts.emplace_back(p);
          return circumcenter(pts, Tolerances{}, seed).mat();
        },
        py::arg("points"), py::arg("seed") = 0);

  m.def("circumcenter_unitarizer",
        [](const MatrixGroup& g) {
          const Unitarizer u = circumcenter_unitarizer(g);
          return py::dict(py::arg("s") = u.s.mat(),
                          py::arg("residual") = u.residual);
        },
        py::arg("group"));

  m.def("similarity_number",
        [](const MatrixGroup& g) {
          const SimReport r = similarity_number(g);
          return py::dict(py::arg("sim") = r.sim_value,
                          py::arg("minimizer") = r.minimizer.mat(),
                          py::arg("dist") = r.dist_to_fixed,
                          py::arg("iterations") = r.iterations,
                          py::arg("converged") = r.converged);
        },
        py::arg("group"));

  m.def("dist_to_fixed_cone",
        [](const CMatrix& b, const std::vector<CMatrix>& gens,
           const std::string& metric) {
          const auto r = dist_to_fixed_cone(PosDefMatrix(b), fixed_cone(gens),
                                            parse_metric(metric));
          return py::dict(py::arg("value") = r.value,
                          py::arg("witness") = r.witness.mat(),
                          py::arg("converged") = r.converged);
        },
        py::arg("b"), py::arg("generators"), py::arg("metric") = "op");

  m.def("pinching_expectation", [](const CMatrix& p) {
    return pinching_expectation(p);
  });
  m.def("group_average_expectation", [](const MatrixGroup& g) {
    return group_average_expectation(g);
  });

  m.def("split_positive",
        [](const CMatrix& a, const CondExpectation& e) {
          const PositiveSplit s = pr_split_positive(PosDefMatrix(a), e);
          return py::make_tuple(s.x.mat(), s.y.mat());
        },
        py::arg("a"), py::arg("expectation"));

  m.def("split_invertible",
        [](const CMatrix& g, const CondExpectation& e) {
          const SplitTriple s = pr_split_invertible(InvertibleMatrix(g), e);
          return py::make_tuple(s.u.mat(), s.z.mat(), s.y.mat());
        },
        py::arg("g"), py::arg("expectation"));

  m.def("gen_bounded_rep",
        [](const std::string& family, int order, int dim, double cond,
           std::uint64_t seed) {
          RepSpec spec;
          spec.family = parse_family(family);
          spec.order_param = order;
          spec.dim = dim;
          return gen_bounded_rep(spec, cond, seed).images;
        },
        py::arg("family"), py::arg("order") = 4, py::arg("dim") = 2,
        py::arg("cond") = 1.0, py::arg("seed") = 0);

  m.def("interpolate_family",
        [](const MatrixGroup& g, const CMatrix& r2, const CMatrix& s2,
           int grid) {
          const auto report = verify_interpolation(
              g, PosDefMatrix(r2), PosDefMatrix(s2), uniform_grid(grid));
          py::list points;
          for (size_t i = 0; i < report.family.size(); ++i) {
            const auto& pt = report.family[i];
            points.append(py::dict(py::arg("t") = pt.t,
                                   py::arg("size") = pt.size_t_,
                                   py::arg("sim") = pt.sim_t,
                                   py::arg("size_margin") =
                                       report.size_margin[i],
                                   py::arg("sim_margin") =
                                       report.sim_margin[i]));
          }
          return points;
        },
        py::arg("group"), py::arg("r2"), py::arg("s2"), py::arg("grid") = 11);

  m.def("run_suite",
        [](const std::string& suite, std::uint64_t seed,
           const std::vector<int>& dims, double trials) {
          ExperimentConfig cfg;
          cfg.seed = seed;
          cfg.dims = dims;
          cfg.trials = trials;
          const SuiteReport report =
              run_suite(cfg, suite == "all" ? std::string() : suite);
          py::list out;
          for (const auto& c : report.checks)
            out.append(py::dict(py::arg("check") = c.id,
                                py::arg("pass") = c.pass,
                                py::arg("worst_margin") = c.worst_margin,
                                py::arg("instances") = c.instances));
          return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 20260810,
        py::arg("dims") = std::vector<int>{2, 3, 4},
        py::arg("trials") = 0.05);

  m.def("matrix_to_json", &matrix_to_json);
  m.def("matrix_from_json", &matrix_from_json);
}
