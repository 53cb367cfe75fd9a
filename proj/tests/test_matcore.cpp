#include "conegeo/matcore.hpp"

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

// Independent 2x2 eigensolver for real symmetric [[a,b],[b,d]].
std::pair<double, double> sym2_eigs(double a, double b, double d) {
  const double tr = a + d, det = a * d - b * b;
  const double disc = std::sqrt(tr * tr / 4.0 - det);
  return {tr / 2.0 - disc, tr / 2.0 + disc};
}

}  // namespace

TEST_SUITE("matcore") {

TEST_CASE("herm_eig on diagonal input sorts ascending") {
  const auto [evals, frame] = herm_eig(HermitianMatrix(diag2(3, 1)));
  CHECK(evals(0) == doctest::Approx(1.0));
  CHECK(evals(1) == doctest::Approx(3.0));
  // Frame is a permutation up to phase: reconstruction is the real test.
  const CMatrix recon =
      frame.mat() * evals.asDiagonal() * frame.mat().adjoint();
  CHECK((recon - diag2(3, 1)).norm() < 1e-12);
}

TEST_CASE("herm_eig identity accepts any orthonormal frame") {
  const auto [evals, frame] = herm_eig(HermitianMatrix(CMatrix::Identity(3, 3)));
  for (int i = 0; i < 3; ++i) CHECK(evals(i) == doctest::Approx(1.0));
  const CMatrix gram = frame.mat().adjoint() * frame.mat();
  CHECK((gram - CMatrix::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("herm_eig 2x2 closed form") {
  CMatrix m(2, 2);
  m << 2, 1, 1, 2;
  const auto [expected_lo, expected_hi] = sym2_eigs(2, 1, 2);
  const auto [evals, frame] = herm_eig(HermitianMatrix(m));
  CHECK(evals(0) == doctest::Approx(expected_lo));  // 1
  CHECK(evals(1) == doctest::Approx(expected_hi));  // 3
  // Eigenvectors are (1,-1)/sqrt2 and (1,1)/sqrt2 up to phase.
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(frame.mat()(0, 0)) - s) < 1e-12);
  CHECK(std::abs(std::abs(frame.mat()(1, 1)) - s) < 1e-12);
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
  CMatrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(HermitianMatrix{m}, NonHermitian);
}

TEST_CASE("mat_fn applies spectrally") {
  const PosDefMatrix a(diag2(4, 9));
  const auto root = mat_fn(a, [](double x) { return std::sqrt(x); });
  CHECK((root.mat() - diag2(2, 3)).norm() < 1e-12);

  SUBCASE("identity map returns the input") {
    const auto same = mat_fn(a, [](double x) { return x; });
    CHECK((same.mat() - a.mat()).norm() < 1e-12);
  }
  SUBCASE("fourth root as composed square roots") {
    const PosDefMatrix r(root.mat());
    const auto quarter = mat_fn(r, [](double x) { return std::sqrt(x); });
    CHECK(quarter.mat()(0, 0).real() ==
          doctest::Approx(1.4142135623730951));
    CHECK(quarter.mat()(1, 1).real() ==
          doctest::Approx(1.7320508075688772));
  }
  SUBCASE("domain error for log at nonpositive values") {
    const PosDefMatrix tiny(diag2(1.0, 0.5));
    CHECK_THROWS_AS(
        mat_fn(tiny, [](double x) { return std::log(x - 0.75); }),
        DomainError);
  }
}

TEST_CASE("exp_herm basics") {
  CHECK((exp_herm(HermitianMatrix::zero(3)).mat() - CMatrix::Identity(3, 3))
            .norm() < 1e-14);
  const double l2 = std::log(2.0);
  const auto e = exp_herm(HermitianMatrix(diag2(l2, -l2)));
  CHECK((e.mat() - diag2(2.0, 0.5)).norm() < 1e-12);
}

TEST_CASE("spectral round trips on random input") {
  CounterRng rng(401);
  for (int dim = 2; dim <= 8; ++dim) {
    for (int t = 0; t < 30; ++t) {
      const CMatrix x = random_hermitian_scaled(dim, 1.5, rng);
      const PosDefMatrix a = exp_herm(HermitianMatrix(x));
      CHECK((a.log() - x).norm() / std::max(1.0, x.norm()) < 1e-9);
    }
  }
}

TEST_CASE("validate_posdef enforces the relative floor") {
  CHECK_NOTHROW(validate_posdef(HermitianMatrix(CMatrix::Identity(2, 2))));
  CHECK_THROWS_AS(validate_posdef(HermitianMatrix(diag2(1, 0))),
                  NotPositiveDefinite);
  // Just below the relative floor 1e-12.
  CHECK_THROWS_AS(validate_posdef(HermitianMatrix(diag2(1, 5e-13))),
                  NotPositiveDefinite);
  CHECK_NOTHROW(validate_posdef(HermitianMatrix(diag2(1, 5e-12))));
  try {
    validate_posdef(HermitianMatrix(diag2(1, -2)));
    CHECK(false);
  } catch (const NotPositiveDefinite& e) {
    CHECK(e.min_eigenvalue == doctest::Approx(-2.0));
  }
}

TEST_CASE("invertible and unitary gates") {
  CHECK_THROWS_AS(InvertibleMatrix{diag2(1, 0)}, NotInvertible);
  const InvertibleMatrix g(diag2(4, 0.5));
  CHECK(g.condition() == doctest::Approx(8.0));
  CHECK_THROWS_AS(UnitaryMatrix{diag2(2, 1)}, NotUnitary);
  CMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK_NOTHROW(UnitaryMatrix{swap});
}

TEST_CASE("power composition property") {
  CounterRng rng(402);
  for (int t = 0; t < 20; ++t) {
    const PosDefMatrix a = random_posdef(4, 1.2, rng);
    const PosDefMatrix a_s(a.power(0.7));
    CHECK((a_s.power(1.3) - a.power(0.7 * 1.3)).norm() < 1e-10);
  }
}

}  // TEST_SUITE
