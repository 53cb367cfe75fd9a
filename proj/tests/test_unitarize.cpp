#include "conegeo/unitarize.hpp"

#include <cmath>

#include "conegeo/harness.hpp"
#include "doctest.h"

using namespace conegeo;

namespace {

CMatrix diag2(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

CMatrix rot90() {
  CMatrix r(2, 2);
  r << 0, -1, 1, 0;
  return r;
}

CMatrix reflection() {
  CMatrix s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

std::vector<CMatrix> conjugate_all(const std::vector<CMatrix>& gens,
                                   const CMatrix& s) {
  const CMatrix si = s.inverse();
  std::vector<CMatrix> out;
  for (const auto& g : gens) out.push_back(s * g * si);
  return out;
}

}  // namespace

TEST_SUITE("unitarize") {

TEST_CASE("symmetric rescale") {
  const PosDefMatrix a(diag2(4, 1));
  const PosDefMatrix r = symmetric_rescale(a);
  CHECK((r.mat() - diag2(2, 0.5)).norm() < 1e-12);
  CHECK((symmetric_rescale(PosDefMatrix::identity(3)).mat() -
         CMatrix::Identity(3, 3))
            .norm() < 1e-12);

  SUBCASE("norm times inverse norm is scale invariant") {
    CounterRng rng(31);
    for (int t = 0; t < 20; ++t) {
      const PosDefMatrix s = random_posdef(3, 1.0, rng);
      const PosDefMatrix rs = symmetric_rescale(s);
      CHECK(rs.lambda_max() * (1.0 / rs.lambda_min()) ==
            doctest::Approx(s.lambda_max() / s.lambda_min()));
      CHECK(std::abs(std::log(rs.lambda_max()) + std::log(rs.lambda_min())) <
            1e-10);
    }
  }
}

TEST_CASE("average unitarizer") {
  const MatrixGroup d4 = close_group({rot90(), reflection()});
  const Unitarizer unit = average_unitarizer(d4);
  CHECK((unit.s.mat() - CMatrix::Identity(2, 2)).norm() < 1e-10);
  CHECK(unit.residual < 1e-12);

  const MatrixGroup sign = close_group({-CMatrix::Identity(2, 2)});
  CHECK((average_unitarizer(sign).s.mat() - CMatrix::Identity(2, 2)).norm() <
        1e-12);

  SUBCASE("conjugated group is unitarized within tolerance") {
    const CMatrix s = diag2(2.0, 0.5);
    const MatrixGroup conj =
        close_group(conjugate_all({rot90(), reflection()}, s));
    const Unitarizer u = average_unitarizer(conj);
    CHECK(u.residual <= 1e-9);
    const double size = group_size_norm(conj);
    CHECK(u.s.lambda_max() <= size + 1e-9);
    CHECK(u.s.lambda_min() >= 1.0 / size - 1e-9);
  }
}

TEST_CASE("circumcenter") {
  CounterRng rng(32);
  const PosDefMatrix a = random_posdef(3, 0.8, rng);
  CHECK((circumcenter({a}).mat() - a.mat()).norm() < 1e-14);
  CHECK_THROWS_AS(circumcenter({}), EmptyInput);

  SUBCASE("two points meet at the geodesic midpoint") {
    const PosDefMatrix b = random_posdef(3, 0.8, rng);
    const PosDefMatrix mid = Geodesic(a, b).eval(0.5);
    const PosDefMatrix c = circumcenter({a, b}, Tolerances{}, 5);
    CHECK(dist(c, mid, MetricKind::Frobenius) < 1e-5);
    const double radius = std::max(dist(c, a, MetricKind::Frobenius),
                                   dist(c, b, MetricKind::Frobenius));
    CHECK(radius ==
          doctest::Approx(0.5 * dist(a, b, MetricKind::Frobenius))
              .epsilon(1e-5));
  }
  SUBCASE("commuting orbit centers at the diagonal midpoint") {
    const PosDefMatrix p(diag2(4, 1));
    const PosDefMatrix q(diag2(1, 4));
    const PosDefMatrix c = circumcenter({p, q}, Tolerances{}, 5);
    CHECK((c.mat() - diag2(2, 2)).norm() < 1e-5);
  }
}

TEST_CASE("similarity number") {
  SUBCASE("unitary groups sit at distance zero") {
    const MatrixGroup d4 = close_group({rot90(), reflection()});
    const SimReport rep = similarity_number(d4);
    CHECK(rep.sim_value == doctest::Approx(1.0));
    CHECK(rep.dist_to_fixed < 1e-9);
  }
  SUBCASE("irreducible conjugate: closed form cond(s)") {
    const CMatrix s = diag2(2.0, 0.5);
    const SimReport rep =
        similarity_number(conjugate_all({rot90(), reflection()}, s));
    CHECK(rep.sim_value == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(std::abs(std::log(rep.sim_value) - rep.dist_to_fixed) < 1e-10);
  }
  SUBCASE("reducible conjugate against the grid oracle") {
    CounterRng rng(33);
    // Two distinct characters of C4: the fixed cone is two dimensional.
    CMatrix u = CMatrix::Zero(2, 2);
    u(0, 0) = Complex(0, 1);
    u(1, 1) = Complex(0, -1);
    const CMatrix s = random_posdef(2, 0.9, rng).mat();
    const auto gens = conjugate_all({u}, s);
    const FixedCone cone = fixed_cone(gens);
    REQUIRE(cone.rank() == 2);
    const SimReport rep = similarity_number(cone);
    CHECK(rep.sim_value <=
          PosDefMatrix(s).condition() / 1.0 + 1e-9);  // <= cond(s)

    // Brute-force ray search over the two-dimensional cone.
    double best = 1e300;
    const SpanProblem prob(cone.basis(), 2);
    for (int i = 1; i < 3142; ++i) {
      const double theta = i * (3.14159265358979323846 / 2.0) / 3142.0;
      RVector c(2);
      c << std::cos(theta), std::sin(theta);
      RVector evals = herm_eigenvalues(prob.assemble(c));
      if (!(evals(0) > 0.0)) {
        c = -c;
        evals = herm_eigenvalues(prob.assemble(c));
        if (!(evals(0) > 0.0)) continue;
      }
      best = std::min(best, std::sqrt(evals(evals.size() - 1) / evals(0)));
    }
    CHECK(rep.sim_value == doctest::Approx(best).epsilon(1e-3));
    CHECK(rep.sim_value <= best + 1e-9);  // the optimizer can only do better
  }
}

TEST_CASE("distance to the fixed cone") {
  const CMatrix s = diag2(2.0, 0.5);
  const FixedCone cone =
      fixed_cone(conjugate_all({rot90(), reflection()}, s));

  SUBCASE("points of the cone are at distance zero") {
    const PosDefMatrix inside(s * s);
    const auto r = dist_to_fixed_cone(inside, cone, MetricKind::OperatorNorm);
    CHECK(r.value < 1e-9);
  }
  SUBCASE("identity sits at log cond(s) with a symmetric witness") {
    const auto r = dist_to_fixed_cone(PosDefMatrix::identity(2), cone,
                                      MetricKind::OperatorNorm);
    CHECK(r.value == doctest::Approx(std::log(4.0)).epsilon(1e-9));
    CHECK(std::abs(std::log(r.witness.lambda_max()) +
                   std::log(r.witness.lambda_min())) < 1e-9);
  }
  SUBCASE("the value lower-bounds any sampled cone point") {
    CounterRng rng(34);
    const PosDefMatrix b = random_posdef(2, 0.8, rng);
    const auto r = dist_to_fixed_cone(b, cone, MetricKind::OperatorNorm);
    for (int t = 0; t < 10; ++t) {
      const double alpha = 0.25 + 4.0 * rng.next_double();
      const PosDefMatrix sample(alpha * s * s);
      CHECK(r.value <= dist(b, sample, MetricKind::OperatorNorm) + 1e-9);
    }
  }
  SUBCASE("no positive part raises NotUnitarizable") {
    // Fixed space of the infinite cyclic generator diag(2,1) is spanned by
    // the singular e_22, so the cone has no positive element.
    const FixedCone bad = fixed_cone({diag2(2.0, 1.0)});
    CHECK(bad.rank() == 1);
    CHECK_THROWS_AS(dist_to_fixed_cone(PosDefMatrix::identity(2), bad,
                                       MetricKind::OperatorNorm),
                    NotUnitarizable);
  }
}

TEST_CASE("orbit distance consistency") {
  // Every orbit point has the same distance to the fixed cone; the optimizer
  // must reproduce this within 1e-6.
  const Tolerances tol;
  const Representation rep =
      gen_bounded_rep({RepSpec::Family::Cyclic, 6, 3}, 2.2, 91, tol);
  const MatrixGroup h = rep.image_group(100, tol);
  const FixedCone cone = fixed_cone(h.generators(), {}, tol);
  const double base = dist_to_fixed_cone(PosDefMatrix::identity(3), cone,
                                         MetricKind::OperatorNorm, tol)
                          .value;
  double lo = base, hi = base;
  for (const auto& o : orbit(h, PosDefMatrix::identity(3), tol)) {
    const double d =
        dist_to_fixed_cone(o, cone, MetricKind::OperatorNorm, tol).value;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  CHECK(hi - lo < 1e-6);
  CHECK(std::abs(lo - base) < 1e-6);
}

}  // TEST_SUITE
