#include "conegeo/splitting.hpp"

#include <cmath>

#include "conegeo/harness.hpp"
#include "doctest.h"

using namespace conegeo;

namespace {

CMatrix e11(int n) {
  CMatrix p = CMatrix::Zero(n, n);
  p(0, 0) = 1.0;
  return p;
}

CMatrix offdiag_z(const Complex& z) {
  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 1) = z;
  x(1, 0) = std::conj(z);
  return x;
}

}  // namespace

TEST_SUITE("splitting") {

TEST_CASE("pinching expectation basics") {
  SUBCASE("full projection gives the identity map") {
    CounterRng rng(41);
    const CondExpectation e = pinching_expectation(CMatrix::Identity(3, 3));
    const CMatrix x = random_complex_matrix(3, rng);
    CHECK((e.apply(x) - x).norm() < 1e-14);
  }
  SUBCASE("corner projection keeps the diagonal blocks") {
    const CondExpectation e = pinching_expectation(e11(2));
    CMatrix x(2, 2);
    x << 1, 2, 3, 4;
    CMatrix expected = CMatrix::Zero(2, 2);
    expected(0, 0) = 1;
    expected(1, 1) = 4;
    CHECK((e.apply(x) - expected).norm() < 1e-14);
    CHECK(e.range_basis().size() == 2);
    CHECK(e.kernel_basis().size() == 2);
  }
  SUBCASE("a non-projection is rejected") {
    CHECK_THROWS_AS(pinching_expectation(2.0 * e11(2)), NotProjection);
    CMatrix skew(2, 2);
    skew << 0, 1, 0, 0;
    CHECK_THROWS_AS(pinching_expectation(skew), NotProjection);
  }
  SUBCASE("hermitian contraction with equality off the diagonal") {
    CounterRng rng(42);
    const CondExpectation e = pinching_expectation(e11(2));
    for (int t = 0; t < 200; ++t) {
      const CMatrix x = random_hermitian(2, rng);
      CHECK(operator_norm(x - e.apply(x)) <= operator_norm(x) + 1e-12);
    }
    const CMatrix off = offdiag_z(Complex(0.3, -0.4));
    CHECK(operator_norm(off - e.apply(off)) ==
          doctest::Approx(operator_norm(off)));
  }
}

TEST_CASE("group average expectation") {
  SUBCASE("trivial group averages to the identity map") {
    CounterRng rng(43);
    const CondExpectation e = group_average_expectation(
        close_group({CMatrix::Identity(3, 3)}));
    const CMatrix x = random_complex_matrix(3, rng);
    CHECK((e.apply(x) - x).norm() < 1e-14);
  }
  SUBCASE("irreducible groups average to the normalized trace") {
    CounterRng rng(44);
    const MatrixGroup d4 = rep_dihedral(4, 0).image_group(100);
    const CondExpectation e = group_average_expectation(d4);
    const CMatrix x = random_complex_matrix(2, rng);
    const CMatrix expected = (x.trace() / 2.0) * CMatrix::Identity(2, 2);
    CHECK((e.apply(x) - expected).norm() < 1e-12);
    CHECK(e.range_basis().size() == 1);
  }
  SUBCASE("idempotent, trace compatible, bimodule over the range") {
    CounterRng rng(45);
    const MatrixGroup g = rep_dihedral(3, 1).image_group(100);
    const CondExpectation e = group_average_expectation(g);
    for (int t = 0; t < 30; ++t) {
      const CMatrix x = random_complex_matrix(3, rng);
      const CMatrix ex = e.apply(x);
      CHECK((e.apply(ex) - ex).norm() < 1e-12);
      CHECK(std::abs((ex - x).trace().real()) < 1e-12);
      CHECK(std::abs((ex - x).trace().imag()) < 1e-12);
      const CMatrix b = e.apply(random_complex_matrix(3, rng));
      CHECK((e.apply(b * x) - b * ex).norm() < 1e-10);
      CHECK((e.apply(x * b) - ex * b).norm() < 1e-10);
    }
  }
  SUBCASE("non-unitary groups are rejected") {
    CMatrix s = CMatrix::Identity(2, 2);
    s(0, 0) = 2.0;
    CMatrix r(2, 2);
    r << 0, -1, 1, 0;
    CHECK_THROWS_AS(
        group_average_expectation(close_group({s * r * s.inverse()})),
        NotUnitaryGroup);
  }
}

TEST_CASE("positive splitting") {
  const CondExpectation e = pinching_expectation(e11(2));

  SUBCASE("range elements split with zero kernel part") {
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = 3.0;
    a(1, 1) = 0.5;
    const PositiveSplit s = pr_split_positive(PosDefMatrix(a), e);
    CHECK(s.x.mat().norm() < 1e-10);
    CHECK((s.y.mat() - 0.5 * herm_log(a)).norm() < 1e-10);
  }
  SUBCASE("kernel exponentials split with zero range part") {
    const CMatrix x = offdiag_z(Complex(0.4, 0.2));
    const PositiveSplit s =
        pr_split_positive(PosDefMatrix(herm_exp(x)), e);
    CHECK(s.y.mat().norm() < 1e-10);
    CHECK((s.x.mat() - x).norm() < 1e-9);
  }
  SUBCASE("random positives reconstruct for both expectation kinds") {
    CounterRng rng(46);
    const MatrixGroup g = rep_dihedral(3, 1).image_group(100);
    const CondExpectation avg = group_average_expectation(g);
    const CondExpectation pinch = pinching_expectation(e11(3));
    for (int t = 0; t < 25; ++t) {
      const PosDefMatrix a = random_posdef(3, 1.2, rng);
      for (const CondExpectation* ep : {&pinch, &avg}) {
        const PositiveSplit s = pr_split_positive(a, *ep);
        const CMatrix ey = herm_exp(s.y.mat());
        CHECK((ey * herm_exp(s.x.mat()) * ey - a.mat()).norm() /
                  std::max(1.0, a.mat().norm()) <
              1e-8);
        CHECK(ep->apply(s.x.mat()).norm() < 1e-8);
        CHECK(ep->range_residual(s.y.mat()) < 1e-8);
      }
    }
  }
}

TEST_CASE("invertible splitting") {
  const CondExpectation e = pinching_expectation(e11(2));
  CounterRng rng(47);

  SUBCASE("unitaries pass through") {
    const CMatrix u = random_unitary(2, rng).mat();
    const SplitTriple s = pr_split_invertible(InvertibleMatrix(u), e);
    CHECK((s.u.mat() - u).norm() < 1e-9);
    CHECK(s.z.mat().norm() < 1e-9);
    CHECK(s.y.mat().norm() < 1e-9);
  }
  SUBCASE("range exponentials have trivial unitary and kernel parts") {
    CMatrix y = CMatrix::Zero(2, 2);
    y(0, 0) = 0.7;
    y(1, 1) = -0.2;
    const SplitTriple s =
        pr_split_invertible(InvertibleMatrix(herm_exp(y)), e);
    CHECK((s.u.mat() - CMatrix::Identity(2, 2)).norm() < 1e-9);
    CHECK(s.z.mat().norm() < 1e-9);
    CHECK((s.y.mat() - y).norm() < 1e-9);
  }
  SUBCASE("random invertibles reconstruct with unitary u") {
    for (int t = 0; t < 25; ++t) {
      const InvertibleMatrix g = random_invertible(2, 4.0, rng);
      const SplitTriple s = pr_split_invertible(g, e);
      CHECK(operator_norm(s.u.mat().adjoint() * s.u.mat() -
                          CMatrix::Identity(2, 2)) < 1e-8);
      const CMatrix recon =
          s.u.mat() * herm_exp(s.z.mat()) * herm_exp(s.y.mat());
      CHECK((recon - g.mat()).norm() / std::max(1.0, g.mat().norm()) < 1e-8);
    }
  }
}

TEST_CASE("minimal distance identity for pinching leaves") {
  CounterRng rng(48);
  const CondExpectation e = pinching_expectation(e11(3));
  for (int t = 0; t < 20; ++t) {
    CMatrix y = CMatrix::Zero(3, 3);
    for (const auto& b : e.range_basis()) y += 0.5 * rng.next_gaussian() * b;
    CMatrix x = CMatrix::Zero(3, 3);
    for (const auto& b : e.kernel_basis()) x += 0.5 * rng.next_gaussian() * b;
    const CMatrix ey = herm_exp(y);
    const PosDefMatrix point(ey * herm_exp(x) * ey);
    const PosDefMatrix foot(herm_exp(2.0 * y));
    CHECK(std::abs(dist(foot, point, MetricKind::OperatorNorm) -
                   operator_norm(x)) < 1e-8);
    for (int probe = 0; probe < 8; ++probe) {
      CMatrix w = CMatrix::Zero(3, 3);
      for (const auto& b : e.range_basis())
        w += 0.6 * rng.next_gaussian() * b;
      CHECK(dist(PosDefMatrix(herm_exp(w)), point,
                 MetricKind::OperatorNorm) >= operator_norm(x) - 1e-8);
    }
  }
}

TEST_CASE("canonical unitarizer") {
  const Tolerances tol;
  CounterRng rng(49);
  // pi_0: two distinct characters of C2 with multiplicities (1, 2).
  const Representation pi0 = rep_cyclic_chars(2, {0, 1, 1});
  CMatrix p = CMatrix::Zero(3, 3);
  p(0, 0) = 1.0;
  const CondExpectation e = pinching_expectation(p);

  SUBCASE("unitary g gives a vanishing canonical generator") {
    const CMatrix u = random_unitary(3, rng).mat();
    const CanonicalUnitarizer c =
        canonical_unitarizer(InvertibleMatrix(u), pi0, e, tol);
    CHECK(operator_norm(c.x0.mat()) < 1e-8);
    CHECK(c.unitarity_residual < 1e-8);
  }
  SUBCASE("commutant exponentials keep pi_1 a star representation") {
    CMatrix y = CMatrix::Zero(3, 3);
    y(0, 0) = 0.8;
    y(1, 1) = 0.3;
    y(2, 2) = 0.3;
    const CanonicalUnitarizer c = canonical_unitarizer(
        InvertibleMatrix(herm_exp(y)), pi0, e, tol);
    CHECK(operator_norm(c.x0.mat()) < 1e-8);
  }
  SUBCASE("random g unitarizes with the kernel condition") {
    for (int t = 0; t < 10; ++t) {
      const InvertibleMatrix g = random_invertible(3, 3.0, rng);
      const CanonicalUnitarizer c = canonical_unitarizer(g, pi0, e, tol);
      CHECK(c.unitarity_residual <= 1e-7);
      CHECK(c.kernel_residual <= 1e-8);
      const CondExpectation e_rho =
          conjugated_expectation(e, c.u.mat());
      CHECK(e_rho.apply(c.x0.mat()).norm() <= 1e-8);
    }
  }
  SUBCASE("range mismatch is rejected") {
    // The trivial character rep has a full commutant, not the pinching range.
    const Representation trivial = rep_cyclic_chars(2, {0, 0, 0});
    CHECK_THROWS_AS(canonical_unitarizer(
                        InvertibleMatrix(CMatrix::Identity(3, 3)), trivial, e,
                        tol),
                    RangeMismatch);
  }
}

TEST_CASE("norm-product minimality") {
  const Tolerances tol;
  SUBCASE("off-corner exponentials give the closed-form product") {
    const Representation pi0 = rep_cyclic_chars(2, {0, 1});
    const CondExpectation e = pinching_expectation(e11(2));
    const CMatrix x = offdiag_z(Complex(0.35, 0.1));
    const ThmacsReport report = thmacs_check(
        InvertibleMatrix(herm_exp(x)), pi0, e, {2}, tol);
    CHECK(report.lhs ==
          doctest::Approx(std::exp(2.0 * operator_norm(x))).epsilon(1e-10));
    CHECK(std::abs(report.ratio - 1.0) <= 1e-4);
    CHECK(report.complement_norm == doctest::Approx(1.0));
  }
  SUBCASE("unitary g collapses both sides to one") {
    const Representation pi0 = rep_cyclic_chars(2, {0, 1});
    const CondExpectation e = pinching_expectation(e11(2));
    CMatrix u = CMatrix::Zero(2, 2);
    u(0, 0) = Complex(std::cos(0.3), std::sin(0.3));
    u(1, 1) = Complex(std::cos(-0.9), std::sin(-0.9));
    const ThmacsReport report =
        thmacs_check(InvertibleMatrix(u), pi0, e, {2}, tol);
    CHECK(report.lhs == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(report.rhs == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("non-block-diagonal inputs are rejected") {
    const Representation pi0 = rep_cyclic_chars(2, {0, 1});
    const CondExpectation e = pinching_expectation(e11(2));
    CounterRng rng(50);
    const InvertibleMatrix g = random_invertible(2, 2.0, rng);
    CHECK_THROWS_AS(thmacs_check(g, pi0, e, {1, 1}, tol), BadSpec);
  }
}

TEST_CASE("complement norm estimate") {
  CounterRng rng(51);
  const CondExpectation pinch = pinching_expectation(e11(2));
  const auto est = complement_norm_estimate(pinch, 500, rng);
  CHECK(est.first <= 1.0 + 1e-9);
  CHECK(est.first >= 0.9);  // off-diagonal inputs approach the bound
  CHECK(est.second == doctest::Approx(1.0));
}

}  // TEST_SUITE
