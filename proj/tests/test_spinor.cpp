#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinor/spinor.hpp"

using namespace ssp;

namespace {

std::mt19937 rng(777);

Spinor random_spinor(const SpinorSpace& sp) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  VectorXcd c(sp.dim());
  for (int i = 0; i < sp.dim(); ++i) c(i) = cplx(u(rng), u(rng));
  return {sp, c};
}

}  // namespace

TEST_CASE("isotropic generators on the vacuum") {
  SpinorSpace sp(6, BasisOrdering::Standard);
  Spinor one = Spinor::basis(sp, 0);

  Spinor y1 = clifford_isotropic(sp, IsotropicKind::YWedge, 1, one);
  CHECK(std::abs(y1.coeffs(0b001) - cplx(0, std::sqrt(2.0))) < 1e-15);
  CHECK(y1.norm() == doctest::Approx(std::sqrt(2.0)));

  Spinor x1 = clifford_isotropic(sp, IsotropicKind::XInterior, 1, one);
  CHECK(x1.norm() == doctest::Approx(0.0));

  SpinorSpace sp7(7, BasisOrdering::Standard);
  Spinor u0 = clifford_isotropic(sp7, IsotropicKind::U0, 0, Spinor::basis(sp7, 0));
  CHECK(std::abs(u0.coeffs(0) - cplx(-1.0)) < 1e-15);

  CHECK_THROWS_AS(clifford_isotropic(sp, IsotropicKind::YWedge, 4, one), std::invalid_argument);
}

TEST_CASE("u0 squares to the identity") {
  SpinorSpace sp(7, BasisOrdering::Reordered);
  for (int t = 0; t < 20; ++t) {
    Spinor psi = random_spinor(sp);
    Spinor twice = clifford_isotropic(sp, IsotropicKind::U0, 0,
                                      clifford_isotropic(sp, IsotropicKind::U0, 0, psi));
    CHECK((twice.coeffs - psi.coeffs).norm() < 1e-14);
  }
}

TEST_CASE("reordered pair products act as expected on the vacuum") {
  // e_{2p} e_{2p+1} . 1 = i . 1 and e_1 . 1 = i . 1 in the reordered basis.
  SpinorSpace sp(7, BasisOrdering::Reordered);
  Spinor one = Spinor::basis(sp, 0);
  for (int p = 1; p <= 3; ++p) {
    Spinor v = clifford_real(sp, 2 * p, clifford_real(sp, 2 * p + 1, one));
    CHECK((v.coeffs - cplx(0, 1) * one.coeffs).norm() < 1e-14);
  }
  Spinor e1 = clifford_real(sp, 1, one);
  CHECK((e1.coeffs - cplx(0, 1) * one.coeffs).norm() < 1e-14);
}

TEST_CASE("clifford relation e_i e_j + e_j e_i = -2 delta_ij") {
  for (int n : {5, 6, 7, 8, 15}) {
    std::vector<BasisOrdering> ords{BasisOrdering::Standard};
    if (n % 2 == 1) ords.push_back(BasisOrdering::Reordered);
    for (auto ord : ords) {
      SpinorSpace sp(n, ord);
      const int trials = 200 / (n > 8 ? 10 : 1);
      for (int t = 0; t < trials; ++t) {
        Spinor psi = random_spinor(sp);
        for (int i = 1; i <= n; ++i)
          for (int j = i; j <= n; ++j) {
            Spinor ab = clifford_real(sp, i, clifford_real(sp, j, psi));
            Spinor ba = clifford_real(sp, j, clifford_real(sp, i, psi));
            VectorXcd lhs = ab.coeffs + ba.coeffs;
            if (i == j) lhs += 2.0 * psi.coeffs;
            CHECK(lhs.norm() < 1e-12 * psi.norm() * 10);
          }
      }
    }
  }
}

TEST_CASE("kronecker realization matches the exterior one") {
  SpinorSpace sp2(2, BasisOrdering::Standard);
  MatrixXcd e1 = kronecker_matrix(sp2, 1);
  CHECK(std::abs(e1(0, 1) - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(e1(1, 0) - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(e1(0, 0)) < 1e-15);
  MatrixXcd e2 = kronecker_matrix(sp2, 2);
  CHECK(std::abs(e2(0, 1) + cplx(1, 0)) < 1e-15);
  CHECK(std::abs(e2(1, 0) - cplx(1, 0)) < 1e-15);

  for (int n = 2; n <= 9; ++n) {
    SpinorSpace sp(n, BasisOrdering::Standard);
    for (int i = 1; i <= n; ++i) {
      MatrixXcd km = kronecker_matrix(sp, i);
      MatrixXcd cm = clifford_matrix(sp, i);
      CHECK((km - cm).cwiseAbs().maxCoeff() < 1e-12);
    }
    Spinor psi = random_spinor(sp);
    for (int i = 1; i <= n; ++i) {
      VectorXcd via_matrix = kronecker_matrix(sp, i) * psi.coeffs;
      CHECK((via_matrix - clifford_real(sp, i, psi).coeffs).norm() < 1e-12);
    }
  }
}

TEST_CASE("standard ordering example in dimension 6") {
  // e_5 e_6 . (y_1 ^ y_2) = i (y_1 ^ y_2): the pair (e_5,e_6) acts on slot 3.
  SpinorSpace sp(6, BasisOrdering::Standard);
  Spinor y12 = Spinor::basis(sp, 0b011);
  Spinor v = clifford_real(sp, 5, clifford_real(sp, 6, y12));
  CHECK((v.coeffs - cplx(0, 1) * y12.coeffs).norm() < 1e-14);
}

TEST_CASE("hermitian inner product") {
  SpinorSpace sp(7, BasisOrdering::Reordered);
  Spinor one = Spinor::basis(sp, 0);
  Spinor y1 = Spinor::basis(sp, 0b001);
  CHECK(std::abs(hermitian_inner(one, one) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(hermitian_inner(y1, one)) < 1e-15);

  // conjugate linearity in the first slot
  Spinor a = random_spinor(sp), b = random_spinor(sp);
  cplx s(0.3, -1.2);
  CHECK(std::abs(hermitian_inner(Spinor(sp, s * a.coeffs), b) -
                 std::conj(s) * hermitian_inner(a, b)) < 1e-13);
  CHECK(std::abs(hermitian_inner(a, b) - std::conj(hermitian_inner(b, a))) < 1e-13);

  // Clifford multiplication by real unit vectors is an isometry.
  for (int t = 0; t < 30; ++t) {
    Spinor psi = random_spinor(sp);
    for (int i = 1; i <= 7; ++i)
      CHECK(clifford_real(sp, i, psi).norm() == doctest::Approx(psi.norm()).epsilon(1e-12));
  }
}

TEST_CASE("multivector products") {
  SpinorSpace sp(7, BasisOrdering::Reordered);
  Spinor psi = random_spinor(sp);
  Spinor same = multivector_apply(sp, {}, psi);
  CHECK((same.coeffs - psi.coeffs).norm() == doctest::Approx(0.0));
  CHECK_THROWS_AS(multivector_apply(sp, {2, 2}, psi), std::invalid_argument);
  CHECK_THROWS_AS(multivector_apply(sp, {3, 2}, psi), std::invalid_argument);
}

TEST_CASE("volume element acts by a global sign") {
  SpinorSpace sp(15, BasisOrdering::Reordered);
  std::vector<int> all(15);
  for (int i = 0; i < 15; ++i) all[i] = i + 1;
  cplx factor(0, 0);
  for (int t = 0; t < 10; ++t) {
    Spinor psi = random_spinor(sp);
    Spinor vol = multivector_apply(sp, all, psi);
    // vol = factor * psi with |factor| = 1, the same factor for every psi
    cplx f = hermitian_inner(psi, vol) / hermitian_inner(psi, psi);
    CHECK((vol.coeffs - f * psi.coeffs).norm() < 1e-10 * psi.norm());
    CHECK(std::abs(std::abs(f) - 1.0) < 1e-12);
    if (t == 0)
      factor = f;
    else
      CHECK(std::abs(f - factor) < 1e-12);
  }
  CHECK(std::abs(factor.imag()) < 1e-12);  // acts as +-Id
}

TEST_CASE("canonical 7-sphere spinor pairs with the Clifford triple product") {
  // <e_1 e_2 e_3 . psi_0, psi_0> = -1 for psi_0 = (y_2^y_3 + i y_1)/sqrt(2).
  SpinorSpace sp(7, BasisOrdering::Reordered);
  VectorXcd c = VectorXcd::Zero(8);
  c(0b110) = 1.0 / std::sqrt(2.0);       // y_2 ^ y_3
  c(0b001) = cplx(0, 1) / std::sqrt(2.0);  // i y_1
  Spinor psi0(sp, c);
  Spinor v = multivector_apply(sp, {1, 2, 3}, psi0);
  CHECK(std::abs(hermitian_inner(v, psi0) - cplx(-1.0)) < 1e-14);
}

TEST_CASE("exterior multiplication of coefficient vectors") {
  const int l = 3;
  VectorXcd a = VectorXcd::Zero(8), b = VectorXcd::Zero(8);
  a(0b001) = 1.0;  // y_1
  b(0b010) = 1.0;  // y_2
  VectorXcd ab = exterior_mul(l, a, b);
  CHECK(std::abs(ab(0b011) - cplx(1.0)) < 1e-15);
  VectorXcd ba = exterior_mul(l, b, a);
  CHECK(std::abs(ba(0b011) + cplx(1.0)) < 1e-15);
}
