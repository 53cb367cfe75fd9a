#include "conegeo/groups.hpp"

#include <cmath>

#include "conegeo/harness.hpp"
#include "doctest.h"

using namespace conegeo;

namespace {

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

CMatrix diag2(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

MatrixGroup conjugated_d4() {
  const CMatrix s = diag2(2.0, 0.5);
  const CMatrix si = diag2(0.5, 2.0);
  return close_group({s * rot90() * si, s * reflection() * si});
}

}  // namespace

TEST_SUITE("groups") {

TEST_CASE("close_group enumerates catalog groups") {
  const MatrixGroup sign = close_group({-CMatrix::Identity(2, 2)});
  CHECK(sign.order() == 2);

  const MatrixGroup d4 = close_group({rot90(), reflection()});
  CHECK(d4.order() == 8);
  CHECK(d4.is_unitary());

  SUBCASE("infinite cyclic exceeds the cap") {
    CHECK_THROWS_AS(close_group({diag2(2, 1)}, 100), CapExceeded);
  }
  SUBCASE("generators must be invertible") {
    CHECK_THROWS_AS(close_group({diag2(1, 0)}), NotInvertible);
  }
}

TEST_CASE("group size norm") {
  const MatrixGroup d4 = close_group({rot90(), reflection()});
  CHECK(group_size_norm(d4) == doctest::Approx(1.0));
  CHECK(group_size_norm(close_group({CMatrix::Identity(2, 2)})) ==
        doctest::Approx(1.0));

  const MatrixGroup conj = conjugated_d4();
  const double size = group_size_norm(conj);
  CHECK(size >= 1.0);
  CHECK(size <= 4.0 + 1e-12);
  double exhaustive = 0.0;  // independent max over the eight elements
  for (const auto& h : conj.elements())
    exhaustive = std::max(exhaustive, operator_norm(h));
  CHECK(size == doctest::Approx(exhaustive));
}

TEST_CASE("orbits") {
  const MatrixGroup d4 = close_group({rot90(), reflection()});
  const auto fixed = orbit(d4, PosDefMatrix::identity(2));
  CHECK(fixed.size() == 1);

  CMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const MatrixGroup two = close_group({swap});
  const auto pair = orbit(two, PosDefMatrix(diag2(4, 1)));
  CHECK(pair.size() == 2);
  bool saw_other = false;
  for (const auto& p : pair)
    if ((p.mat() - diag2(1, 4)).norm() < 1e-12) saw_other = true;
  CHECK(saw_other);

  SUBCASE("orbit size divides the group order") {
    CounterRng rng(21);
    const MatrixGroup conj = conjugated_d4();
    for (int t = 0; t < 5; ++t) {
      const auto orb = orbit(conj, random_posdef(2, 0.8, rng));
      CHECK(conj.order() % static_cast<int>(orb.size()) == 0);
    }
  }
}

TEST_CASE("orbit diameter closed forms") {
  const MatrixGroup d4 = close_group({rot90(), reflection()});
  CHECK(orbit_diameter(d4, PosDefMatrix::identity(2),
                       MetricKind::OperatorNorm) == doctest::Approx(0.0));

  CMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const MatrixGroup two = close_group({swap});
  CHECK(orbit_diameter(two, PosDefMatrix(diag2(4, 1)),
                       MetricKind::OperatorNorm) ==
        doctest::Approx(2.0 * std::log(4.0)));

  SUBCASE("diameter at id is twice the log size") {
    const MatrixGroup conj = conjugated_d4();
    CHECK(orbit_diameter(conj, PosDefMatrix::identity(2),
                         MetricKind::OperatorNorm) ==
          doctest::Approx(2.0 * std::log(group_size_norm(conj)))
              .epsilon(1e-10));
  }
}

TEST_CASE("fixed cone") {
  SUBCASE("trivial group fixes every Hermitian") {
    const FixedCone cone = fixed_cone({CMatrix::Identity(2, 2)});
    CHECK(cone.rank() == 4);
  }
  SUBCASE("irreducible unitary group has the scalar cone") {
    const FixedCone cone = fixed_cone({rot90(), reflection()});
    REQUIRE(cone.rank() == 1);
    const CMatrix b = cone.basis()[0];
    CHECK((b - b(0, 0) * CMatrix::Identity(2, 2)).norm() < 1e-10);
  }
  SUBCASE("conjugated irreducible group fixes the conjugator square") {
    const CMatrix s = diag2(2.0, 0.5);
    const CMatrix si = diag2(0.5, 2.0);
    const FixedCone cone =
        fixed_cone({s * rot90() * si, s * reflection() * si});
    REQUIRE(cone.rank() == 1);
    const CMatrix b = cone.basis()[0];
    const CMatrix s2 = s * s;
    const double scale = (b.cwiseProduct(s2.conjugate())).sum().real() /
                         s2.squaredNorm();
    CHECK((b - scale * s2).norm() < 1e-9);
  }
  SUBCASE("residuals of the basis under the generators") {
    const MatrixGroup conj = conjugated_d4();
    const FixedCone cone = fixed_cone(conj.generators());
    for (const auto& b : cone.basis())
      for (const auto& g : conj.generators())
        CHECK((g * b * g.adjoint() - b).norm() < 1e-8);
  }
}

TEST_CASE("commutant basis") {
  SUBCASE("trivial group commutes with everything") {
    const MatrixGroup triv = close_group({CMatrix::Identity(2, 2)});
    CHECK(commutant_basis(triv).size() == 4);
  }
  SUBCASE("irreducible commutant is the normalized identity") {
    const MatrixGroup d4 = close_group({rot90(), reflection()});
    const auto basis = commutant_basis(d4);
    REQUIRE(basis.size() == 1);
    CHECK((basis[0] - basis[0](0, 0) * CMatrix::Identity(2, 2)).norm() <
          1e-10);
    CHECK(std::abs(basis[0].norm() - 1.0) < 1e-12);
  }
  SUBCASE("two inequivalent blocks give dimension two") {
    const Representation sum = rep_product_blocks(
        rep_dihedral(4, 0), rep_dihedral(3, 0));
    const auto basis = commutant_basis(sum.image_group(200));
    CHECK(basis.size() == 2);
  }
  SUBCASE("non-unitary groups are rejected") {
    CHECK_THROWS_AS(commutant_basis(conjugated_d4()), NotUnitaryGroup);
  }
}

TEST_CASE("representation tables") {
  const Representation d4 = rep_dihedral(4, 0);
  CHECK(d4.order() == 8);
  CHECK(d4.homomorphism_residual() < 1e-12);
  CHECK(d4.image_group(100).order() == 8);

  const Representation q8 = rep_quaternion();
  CHECK(q8.order() == 8);
  CHECK(q8.homomorphism_residual() < 1e-12);

  const Representation pauli = rep_clock_shift(3);
  CHECK(pauli.order() == 27);
  CHECK(pauli.homomorphism_residual() < 1e-10);
}

}  // TEST_SUITE
