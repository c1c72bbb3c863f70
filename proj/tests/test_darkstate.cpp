#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qloop/darkstate.hpp"
#include "qloop/operator_core.hpp"

using namespace qloop;
constexpr double pi = std::numbers::pi;

TEST_CASE("Casimir invariants equal eigenvalue power sums") {
  const HermitianOperator h = build(preset("dl-d-1").config);
  const CasimirSet cs = casimir_invariants(h);
  const RealVector lambda = eig_hermitian(h).eigenvalues;
  for (int k = 1; k <= 4; ++k) {
    double sum = 0;
    for (Eigen::Index i = 0; i < 4; ++i) sum += std::pow(lambda(i), k);
    CHECK(cs.c(k - 1) == doctest::Approx(sum).epsilon(1e-10));
  }
}

TEST_CASE("triangle dark residual equals 4 det H (cofactor oracle)") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> omega(0.5, 40), det(-20, 20),
      phase(-pi, pi);
  for (int i = 0; i < 300; ++i) {
    const TriangleDrive d{omega(rng), omega(rng), omega(rng),
                          det(rng),   det(rng),   phase(rng)};
    const double res = dark_residual_triangle(d);
    const double det4 = 4 * oracle::det_cofactor(build_triangle(d).mat).real();
    CHECK(std::abs(res - det4) < 1e-9 * (1 + std::abs(res)));
  }
}

TEST_CASE("diamond dark residual equals 16 det H (cofactor oracle)") {
  std::mt19937 rng(102);
  std::uniform_real_distribution<double> omega(0.5, 40), det(-20, 20),
      phase(-pi, pi);
  for (int i = 0; i < 300; ++i) {
    const DiamondDrive d{omega(rng), omega(rng), omega(rng), omega(rng),
                         det(rng),   det(rng),   det(rng),   phase(rng)};
    const double res = dark_residual_diamond(d);
    const double det16 = 16 * oracle::det_cofactor(build_diamond(d).mat).real();
    CHECK(std::abs(res - det16) < 1e-9 * (1 + std::abs(res)));
  }
}

TEST_CASE("find_dark_states extracts the documented null vectors") {
  for (const char* name : {"delta-d-1", "delta-d-2", "delta-d-3", "dl-d-1",
                           "dl-d-2"}) {
    const Preset p = preset(name);
    const DarkStateReport rep = find_dark_states(build(p.config));
    INFO(name);
    REQUIRE(rep.exists);
    CHECK(rep.degeneracy == 1);
    const double overlap =
        std::abs(rep.dark_states[0].amps.dot(p.states.at("D").amps));
    CHECK(overlap > 1 - 1e-10);
    CHECK(std::abs(rep.residual) <
          1e-9 * (1 + build(p.config).mat.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("zero and resonant Hamiltonians have vanishing invariants") {
  const CasimirSet zero =
      casimir_invariants(HermitianOperator{Matrix::Zero(3, 3)});
  CHECK(zero.c.cwiseAbs().maxCoeff() == 0);
  // delta = 0, phi = pi/2: the cubic invariant vanishes with the cosine
  const CasimirSet cs = casimir_invariants(
      build_triangle(TriangleDrive{7, 13, 5, 0, 0, std::numbers::pi / 2}));
  CHECK(std::abs(cs.c(0)) < 1e-12);
  CHECK(std::abs(cs.c(2)) < 1e-10);
}

TEST_CASE("all-resonant ladder case has no dark state") {
  const Preset p = preset("dl-d-3");
  const DarkStateReport rep = find_dark_states(build(p.config));
  CHECK_FALSE(rep.exists);
  const RealVector lambda =
      eig_hermitian(build(p.config)).eigenvalues;
  CHECK(lambda.cwiseAbs().minCoeff() > 0.8 * 10.0 / 2);
}

TEST_CASE("generic detuned drive has no dark state") {
  const TriangleDrive d{10, 10, 10, 3, 0, pi / 2};
  const DarkStateReport rep = find_dark_states(build_triangle(d));
  CHECK_FALSE(rep.exists);
  CHECK(rep.bright_states.size() == 3);
  CHECK(std::abs(rep.residual) > 1);
}

TEST_CASE("double-dark case reports a two-fold degeneracy") {
  const DarkStateReport rep = find_dark_states(build(preset("dl-d-4").config));
  REQUIRE(rep.exists);
  CHECK(rep.degeneracy == 2);
}

TEST_CASE("closed-form dark states annihilate their Hamiltonians") {
  for (const char* name : {"delta-d-1", "delta-d-2", "delta-d-3", "dl-d-1",
                           "dl-d-2", "dl-d-4"}) {
    const Matrix h = build(preset(name).config).mat;
    const Vector d = dark_state_closed_form(name).amps;
    INFO(name);
    CHECK((h * d).cwiseAbs().maxCoeff() <
          1e-10 * (1 + h.cwiseAbs().maxCoeff()));
  }
  CHECK_THROWS_AS(dark_state_closed_form("fig2a"), std::invalid_argument);
}

TEST_CASE("solved detunings restore the dark state") {
  SUBCASE("equal detunings") {
    auto [d1, d3] = solve_dark_detunings_triangle(20, 20, 20, pi / 3,
                                                  EqualDeltas{});
    CHECK(d1 == doctest::Approx(-5.0).epsilon(1e-13));
    CHECK(d3 == d1);
    const TriangleDrive d{20, 20, 20, d1, d3, pi / 3};
    CHECK(std::abs(dark_residual_triangle(d)) < 1e-9);
  }
  SUBCASE("fixed ratio") {
    auto [d1, d3] =
        solve_dark_detunings_triangle(20, 40, 60, pi / 3, DeltaRatio{4.0});
    CHECK(d3 == doctest::Approx(4 * d1).epsilon(1e-13));
    const TriangleDrive d{20, 40, 60, d1, d3, pi / 3};
    CHECK(std::abs(dark_residual_triangle(d)) < 1e-9);
    CHECK(find_dark_states(build_triangle(d)).exists);
  }
  SUBCASE("degenerate constraint") {
    CHECK_THROWS_AS(
        solve_dark_detunings_triangle(0, 0, 1, 0, EqualDeltas{}),
        std::invalid_argument);
  }
}

TEST_CASE("unbalanced-Lambda spectator state") {
  const TriangleDrive d{1, 2, 1, 0, 0, 0};
  const UnbalancedLambdaDark u = unbalanced_lambda_dark(d);
  CHECK(u.detuning_difference == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(u.eigenvalue == doctest::Approx(-0.25).epsilon(1e-14));

  // With delta_3 = delta_1 - difference the state is an exact eigenvector.
  const TriangleDrive tuned{1, 2, 1, 0, -u.detuning_difference, 0};
  const Matrix h = build_triangle(tuned).mat;
  const Vector res = h * u.dark.amps - u.eigenvalue * u.dark.amps;
  CHECK(res.cwiseAbs().maxCoeff() < 1e-12);

  // phi = pi flips the signed coupling.
  const UnbalancedLambdaDark upi =
      unbalanced_lambda_dark(TriangleDrive{1, 2, 1, 0, 0, pi});
  CHECK(upi.detuning_difference == doctest::Approx(-0.75).epsilon(1e-14));
  const TriangleDrive tuned_pi{1, 2, 1, 0, -upi.detuning_difference, pi};
  const Vector res_pi = build_triangle(tuned_pi).mat * upi.dark.amps -
                        upi.eigenvalue * upi.dark.amps;
  CHECK(res_pi.cwiseAbs().maxCoeff() < 1e-12);

  // balanced couplings reduce to the standard pair
  CHECK(unbalanced_lambda_dark(TriangleDrive{2, 2, 1, 0, 0, 0})
            .detuning_difference == 0);
  // no 1-3 coupling: plain CPT dark state at -delta_1
  CHECK(unbalanced_lambda_dark(TriangleDrive{1, 2, 0, 0.7, 0.7, 0})
            .eigenvalue == doctest::Approx(-0.7).epsilon(1e-14));

  CHECK_THROWS_AS(unbalanced_lambda_dark(TriangleDrive{1, 2, 1, 0, 0, 0.3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(unbalanced_lambda_dark(TriangleDrive{0, 2, 1, 0, 0, 0}),
                  std::invalid_argument);
}
