#include "conegeo/geometry.hpp"

#include <cmath>

#include "conegeo/harness.hpp"
#include "doctest.h"

using namespace conegeo;

namespace {

CMatrix diagm(std::initializer_list<double> vals) {
  const int n = static_cast<int>(vals.size());
  CMatrix m = CMatrix::Zero(n, n);
  int i = 0;
  for (double v : vals) m(i, i) = v, ++i;
  return m;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("dist closed forms") {
  const double e = std::exp(1.0);
  const PosDefMatrix id = PosDefMatrix::identity(2);
  const PosDefMatrix b(diagm({e, 1.0 / e}));
  CHECK(dist(id, b, MetricKind::OperatorNorm) == doctest::Approx(1.0));
  CHECK(dist(id, b, MetricKind::Frobenius) ==
        doctest::Approx(std::sqrt(2.0)));

  SUBCASE("commuting pairs reduce to the scalar oracle") {
    CounterRng rng(11);
    for (int t = 0; t < 50; ++t) {
      RVector alpha(3), beta(3);
      for (int i = 0; i < 3; ++i) {
        alpha(i) = std::exp(rng.next_gaussian());
        beta(i) = std::exp(rng.next_gaussian());
      }
      const PosDefMatrix a(alpha.cast<Complex>().asDiagonal().toDenseMatrix());
      const PosDefMatrix c(beta.cast<Complex>().asDiagonal().toDenseMatrix());
      double op = 0.0, fr = 0.0;
      for (int i = 0; i < 3; ++i) {
        const double l = std::log(beta(i) / alpha(i));
        op = std::max(op, std::abs(l));
        fr += l * l;
      }
      CHECK(dist(a, c, MetricKind::OperatorNorm) == doctest::Approx(op));
      CHECK(dist(a, c, MetricKind::Frobenius) ==
            doctest::Approx(std::sqrt(fr)));
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(dist(id, PosDefMatrix::identity(3),
                         MetricKind::OperatorNorm),
                    DimMismatch);
  }
  SUBCASE("zero iff equal") {
    CHECK(dist(b, b, MetricKind::OperatorNorm) < 1e-12);
    CHECK(dist(id, b, MetricKind::OperatorNorm) > 0.5);
  }
}

TEST_CASE("geodesic evaluation") {
  const PosDefMatrix id = PosDefMatrix::identity(2);
  const PosDefMatrix b(diagm({4, 9}));
  const Geodesic g(id, b);
  CHECK((g.eval(0.5).mat() - diagm({2, 3})).norm() < 1e-12);
  CHECK((g.eval(0.0).mat() - id.mat()).norm() < 1e-12);
  CHECK((g.eval(1.0).mat() - b.mat()).norm() < 1e-12);

  SUBCASE("the parameter extends beyond [0,1]") {
    CHECK((g.eval(2.0).mat() - diagm({16, 81})).norm() < 1e-10);
    CHECK((g.eval(-1.0).mat() - diagm({0.25, 1.0 / 9.0})).norm() < 1e-12);
  }
  SUBCASE("proportional distance on random pairs") {
    CounterRng rng(12);
    for (int t = 0; t < 30; ++t) {
      const PosDefMatrix a = random_posdef(3, 1.0, rng);
      const PosDefMatrix c = random_posdef(3, 1.0, rng);
      const Geodesic geo(a, c);
      const double base = dist(a, c, MetricKind::OperatorNorm);
      const double s = rng.next_double(), u = rng.next_double();
      CHECK(dist(geo.eval(s), geo.eval(u), MetricKind::OperatorNorm) ==
            doctest::Approx(std::abs(u - s) * base).epsilon(1e-8));
    }
  }
}

TEST_CASE("canonical action") {
  const PosDefMatrix id = PosDefMatrix::identity(2);
  CMatrix u(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  u << Complex(s), Complex(-s), Complex(s), Complex(s);
  CHECK((act(InvertibleMatrix(u), id).mat() - id.mat()).norm() < 1e-12);
  CHECK((act(InvertibleMatrix(diagm({2, 1})), id).mat() - diagm({4, 1}))
            .norm() < 1e-12);

  SUBCASE("isometry on random triples") {
    CounterRng rng(13);
    for (int t = 0; t < 30; ++t) {
      const PosDefMatrix a = random_posdef(3, 1.0, rng);
      const PosDefMatrix b = random_posdef(3, 1.0, rng);
      const InvertibleMatrix g = random_invertible(3, 5.0, rng);
      for (MetricKind mk : {MetricKind::OperatorNorm, MetricKind::Frobenius})
        CHECK(dist(act(g, a), act(g, b), mk) ==
              doctest::Approx(dist(a, b, mk)).epsilon(1e-9));
    }
  }
}

TEST_CASE("banach-mazur distance") {
  const PosDefMatrix id = PosDefMatrix::identity(2);
  CHECK(banach_mazur_delta(id, id) == doctest::Approx(0.0));
  const double t = 0.8;
  const PosDefMatrix scaled(std::exp(t) * CMatrix::Identity(2, 2));
  CHECK(banach_mazur_delta(scaled, id) == doctest::Approx(t));

  SUBCASE("commuting pairs match the scalar oracle in both conventions") {
    const PosDefMatrix a(diagm({2, 5}));
    const PosDefMatrix b(diagm({3, 4}));
    const double oracle =
        std::max(std::abs(std::log(2.0 / 3.0)), std::abs(std::log(5.0 / 4.0)));
    CHECK(banach_mazur_delta(a, b, BanachMazurConvention::QuadraticFormPencil)
          == doctest::Approx(oracle));
    CHECK(banach_mazur_delta(a, b, BanachMazurConvention::NormSquaredPencil)
          == doctest::Approx(oracle));
  }
  SUBCASE("only the quadratic-form pencil matches d off the commuting case") {
    CounterRng rng(14);
    double worst_quad = 0.0, best_lit = 0.0;
    for (int t2 = 0; t2 < 40; ++t2) {
      const PosDefMatrix a = random_posdef(3, 1.0, rng);
      const PosDefMatrix b = random_posdef(3, 1.0, rng);
      const double d = dist(a, b, MetricKind::OperatorNorm);
      worst_quad = std::max(
          worst_quad,
          std::abs(banach_mazur_delta(
                       a, b, BanachMazurConvention::QuadraticFormPencil) -
                   d));
      best_lit = std::max(
          best_lit,
          std::abs(banach_mazur_delta(
                       a, b, BanachMazurConvention::NormSquaredPencil) -
                   d));
    }
    CHECK(worst_quad < 1e-10);
    CHECK(best_lit > 1e-3);  // the literal reading strays on generic pairs
  }
}

TEST_CASE("segal residual") {
  CHECK(segal_residual(HermitianMatrix::zero(2), HermitianMatrix::zero(2)) ==
        doctest::Approx(0.0));
  SUBCASE("commuting pairs are the equality case") {
    const HermitianMatrix x(diagm({0.3, -0.7}));
    const HermitianMatrix y(diagm({1.1, 0.2}));
    CHECK(std::abs(segal_residual(x, y)) < 1e-10);
  }
  SUBCASE("random pairs stay nonnegative") {
    CounterRng rng(15);
    double worst = 1e9;
    for (int t = 0; t < 200; ++t) {
      const HermitianMatrix x(random_hermitian_scaled(3, 1.5, rng));
      const HermitianMatrix y(random_hermitian_scaled(3, 1.5, rng));
      worst = std::min(worst, segal_residual(x, y));
    }
    CHECK(worst >= -1e-10);
  }
}

TEST_CASE("exponential metric increasing residual") {
  CounterRng rng(16);
  const PosDefMatrix a = random_posdef(3, 1.0, rng);
  const HermitianMatrix x(random_hermitian_scaled(3, 1.0, rng));
  CHECK(std::abs(emi_residual(a, x, x)) < 1e-12);

  SUBCASE("flat directions at the identity") {
    const HermitianMatrix u(diagm({0.4, -0.2}));
    const HermitianMatrix v(diagm({-0.1, 0.9}));
    CHECK(std::abs(emi_residual(PosDefMatrix::identity(2), u, v)) < 1e-10);
  }
  SUBCASE("random triples stay nonnegative") {
    double worst = 1e9;
    for (int t = 0; t < 200; ++t) {
      const PosDefMatrix base = random_posdef(3, 1.0, rng);
      const HermitianMatrix u(random_hermitian_scaled(3, 1.0, rng));
      const HermitianMatrix v(random_hermitian_scaled(3, 1.0, rng));
      worst = std::min(worst, emi_residual(base, u, v));
    }
    CHECK(worst >= -1e-10);
  }
}

}  // TEST_SUITE
