#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "qloop/cpt_basis.hpp"
#include "qloop/operator_core.hpp"

using namespace qloop;
constexpr double pi = std::numbers::pi;

TEST_CASE("CPT pair is orthonormal with the documented components") {
  const CptBasis3 c = cpt_states(3, 4);
  CHECK(c.omega_cpt == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(c.bright.amps(0) == Complex(0.6, 0));
  CHECK(c.bright.amps(2) == Complex(0.8, 0));
  CHECK(c.dark.amps(0) == Complex(0.8, 0));
  CHECK(c.dark.amps(2) == Complex(-0.6, 0));
  CHECK_NOTHROW(c.as_basis());
  CHECK_THROWS_AS(cpt_states(0, 0), std::invalid_argument);
}

TEST_CASE("triangle CPT rewrite decouples |2> from |D>") {
  const TriangleDrive d{12, 16, 7, -2, -2, 1.1};
  const HermitianOperator hc = to_cpt_hamiltonian_3(d);
  CHECK(std::abs(hc.mat(1, 2)) < 1e-12);  // (2, D)
  // spectrum preserved
  const RealVector a = eig_hermitian(build_triangle(d)).eigenvalues;
  const RealVector b = eig_hermitian(hc).eigenvalues;
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(to_cpt_hamiltonian_3(TriangleDrive{1, 1, 1, 0.5, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("balanced triangle: (B, D) entry is -i (omega_31/2) sin phi") {
  const double phi = pi / 3;
  const TriangleDrive d{20, 20, 14, -5, -5, phi};
  const HermitianOperator hc = to_cpt_hamiltonian_3(d);
  const Complex expected(0, -0.5 * 14 * std::sin(phi));
  CHECK(std::abs(hc.mat(0, 2) - expected) < 1e-12);
}

TEST_CASE("triangle CPT rewrite at phi=0 decouples |D> entirely") {
  const TriangleDrive d{20, 20, 14, -5, -5, 0};
  const HermitianOperator hc = to_cpt_hamiltonian_3(d);
  CHECK(std::abs(hc.mat(0, 2)) < 1e-12);
  CHECK(std::abs(hc.mat(1, 2)) < 1e-12);
}

TEST_CASE("triangle CPT rewrite at phi=pi/2 balances the B/D energies") {
  const TriangleDrive d{20, 20, 14, -5, -5, pi / 2};
  const HermitianOperator hc = to_cpt_hamiltonian_3(d);
  CHECK(hc.mat(0, 0).real() == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(hc.mat(2, 2).real() == doctest::Approx(5.0).epsilon(1e-13));
}

TEST_CASE("diamond CPT rewrite on the phi=0 matched drive isolates |D>") {
  const DiamondDrive d{10, 20, 15, 7.5, 3, 3, 5, 0};
  const HermitianOperator hc = to_cpt_hamiltonian_4(d);
  // |D> (index 2) is a spectator: its row carries no coupling at all
  for (Eigen::Index j : {0, 1, 3}) {
    CHECK(std::abs(hc.mat(2, j)) < 1e-12);
  }
  CHECK(coupling_graph_is_open(hc));
  CHECK_THROWS_AS(
      to_cpt_hamiltonian_4(DiamondDrive{1, 1, 1, 1, 0.5, 0, 0, 0}),
      std::invalid_argument);
}

TEST_CASE("diamond CPT rewrite on the phi=pi matched drive is block-diagonal") {
  const DiamondDrive d{10, 20, 15, 30, 3, 3, 5, pi};
  const HermitianOperator hc = to_cpt_hamiltonian_4(d);
  // (B, 2) block vs (D, 4) block
  for (Eigen::Index i : {0, 1}) {
    for (Eigen::Index j : {2, 3}) {
      CHECK(std::abs(hc.mat(i, j)) < 1e-12);
    }
  }
  CHECK(std::abs(hc.mat(2, 3)) > 1);  // (D, 4) coupling inside its block
  CHECK(coupling_graph_is_open(hc));
}

TEST_CASE("closed loops are detected by the coupling graph") {
  CHECK_FALSE(
      coupling_graph_is_open(build_triangle(TriangleDrive{1, 1, 1, 0, 0, 0})));
  CHECK(coupling_graph_is_open(
      build_triangle(TriangleDrive{1, 1, 0, 0, 0, 0})));
  CHECK_FALSE(coupling_graph_is_open(
      build_diamond(DiamondDrive{1, 1, 1, 1, 0, 0, 0, 0})));
  CHECK(coupling_graph_is_open(
      build_diamond(DiamondDrive{1, 1, 1, 0, 0, 0, 0, 0})));
}

TEST_CASE("double-dark basis reproduces the unit-coupling example") {
  const DoubleLambdaAltDrive d{1, 1, 1, 0};
  const DoubleDarkBasis b = double_dark_basis(d);
  CHECK(b.theta == doctest::Approx(4.0).epsilon(1e-14));
  Vector expected(4);
  expected << 0.5, 0.5, 0.5, -0.5;
  CHECK((b.dark2.amps - expected).cwiseAbs().maxCoeff() < 1e-14);

  const Matrix h = build_double_lambda_alt(d).mat;
  CHECK((h * b.dark1.amps).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((h * b.dark2.amps).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(std::abs(b.bright.amps.dot(b.dark1.amps)) < 1e-14);
}

TEST_CASE("double-dark basis with a phase still spans the null space") {
  const DoubleLambdaAltDrive d{10, 10, 5, pi / 3};
  const DoubleDarkBasis b = double_dark_basis(d);
  const Matrix h = build_double_lambda_alt(d).mat;
  CHECK((h * b.dark1.amps).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((h * b.dark2.amps).cwiseAbs().maxCoeff() < 1e-12);
}
