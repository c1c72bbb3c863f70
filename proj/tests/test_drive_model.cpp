#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "qloop/drive_model.hpp"
#include "qloop/operator_core.hpp"

using namespace qloop;
constexpr double pi = std::numbers::pi;

TEST_CASE("triangle Hamiltonian entries") {
  const TriangleDrive d{2, 4, 6, 0.5, -1.5, pi / 3};
  const Matrix h = build_triangle(d).mat;
  CHECK(h(0, 0) == Complex(-0.5, 0));
  CHECK(h(1, 1) == Complex(0, 0));
  CHECK(h(2, 2) == Complex(1.5, 0));
  CHECK(h(0, 1) == Complex(1, 0));
  CHECK(h(1, 2) == Complex(2, 0));
  CHECK(std::abs(h(0, 2) - 3.0 * Complex(std::cos(pi / 3), std::sin(pi / 3))) <
        1e-15);
  CHECK(hermiticity_residual(h) == 0);
}

TEST_CASE("diamond Hamiltonian keeps the 1-3 and 2-4 entries zero") {
  const DiamondDrive d{2, 4, 6, 8, 1, 2, 3, pi / 5};
  const Matrix h = build_diamond(d).mat;
  CHECK(h(0, 2) == Complex(0, 0));
  CHECK(h(1, 3) == Complex(0, 0));
  CHECK(h(0, 1) == Complex(1, 0));
  CHECK(h(2, 3) == Complex(3, 0));
  CHECK(h(3, 3) == Complex(-3, 0));
  CHECK(std::abs(h(0, 3)) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(hermiticity_residual(h) == 0);
}

TEST_CASE("double-Lambda alternative Hamiltonian structure") {
  const DoubleLambdaAltDrive d{2, 6, 1.5, pi / 7};
  const Matrix h = build_double_lambda_alt(d).mat;
  CHECK(h(1, 1) == Complex(-1.5, 0));
  CHECK(h(3, 3) == Complex(1.5, 0));
  CHECK(h(0, 1) == h(0, 3));
  CHECK(h(1, 2) == Complex(3, 0));
  CHECK(h(2, 3) == Complex(3, 0));
  CHECK(h(0, 2) == Complex(0, 0));
  CHECK(hermiticity_residual(h) == 0);
}

TEST_CASE("phase factor is exactly real at 0 and +-pi") {
  CHECK(phase_factor(0.0) == Complex(1, 0));
  CHECK(phase_factor(pi) == Complex(-1, 0));
  CHECK(phase_factor(-pi) == Complex(-1, 0));
  CHECK(std::abs(phase_factor(0.3) - Complex(std::cos(0.3), std::sin(0.3))) ==
        0);
}

TEST_CASE("conjugate_phase yields the exact entrywise conjugate") {
  for (double phi : {0.0, 0.4, pi, -pi, 2.9, -1.3}) {
    const DriveConfig c{TriangleDrive{3, 5, 7, 0.2, -0.7, phi}, "t"};
    const Matrix a = build(conjugate_phase(c)).mat;
    const Matrix b = build(c).mat.conjugate();
    CHECK((a - b).cwiseAbs().maxCoeff() == 0);
  }
  const DriveConfig c4{DiamondDrive{1, 2, 3, 4, 0, 0, 0, 1.1}, "d"};
  CHECK((build(conjugate_phase(c4)).mat - build(c4).mat.conjugate())
            .cwiseAbs()
            .maxCoeff() == 0);
}

TEST_CASE("reduce_phase lands in [-pi, pi]") {
  CHECK(reduce_phase(pi) == pi);
  CHECK(reduce_phase(-pi) == -pi);
  CHECK(reduce_phase(3 * pi) == doctest::Approx(-pi).epsilon(1e-15));
  CHECK(std::abs(reduce_phase(2 * pi + 0.25) - 0.25) < 1e-14);
}

TEST_CASE("validate rejects bad drives and grids") {
  CHECK_THROWS_AS(validate(DriveConfig{TriangleDrive{-1, 1, 1, 0, 0, 0}, ""}),
                  std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(validate(DriveConfig{TriangleDrive{1, 1, 1, nan, 0, 0}, ""}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(DriveConfig{DiamondDrive{1, 1, 1, -2, 0, 0, 0, 0},
                                       ""}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(TimeGrid{0, 0, 100}), std::invalid_argument);
  CHECK_THROWS_AS(validate(TimeGrid{0, 1, 1}), std::invalid_argument);
  CHECK_NOTHROW(validate(TimeGrid{}));
}

TEST_CASE("preset catalog: names, aliases, rejection") {
  CHECK(preset_names().size() == 20);
  CHECK(canonical_preset_name("Δ-D-1") == "delta-d-1");
  CHECK(canonical_preset_name("DΛ-0Φ-2") == "dl-0phi-2");
  CHECK(canonical_preset_name("FIG5") == "fig5");
  CHECK_THROWS_AS(preset("no-such-case"), std::invalid_argument);
  try {
    preset("no-such-case");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("delta-d-1") != std::string::npos);
  }
}

TEST_CASE("preset states are normalized; documented bases orthonormal") {
  for (const auto& name : preset_names()) {
    const Preset p = preset(name);
    for (const auto& [label, state] : p.states) {
      CHECK(state.amps.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(p.states.count(p.default_initial) + (p.default_initial.size() == 1)
          > 0);
    if (!p.table_basis.empty() &&
        static_cast<Eigen::Index>(p.table_basis.size()) == p.config.dim()) {
      std::vector<StateVector> vecs;
      for (const auto& n : p.table_basis) vecs.push_back(p.states.at(n));
      CHECK_NOTHROW(make_basis(vecs, p.table_basis));
    }
  }
}

TEST_CASE("dark-state presets have a null vector at the documented state") {
  for (const char* name : {"delta-d-1", "delta-d-2", "delta-d-3", "dl-d-1",
                           "dl-d-2"}) {
    const Preset p = preset(name);
    const Matrix h = build(p.config).mat;
    const Vector d = p.states.at("D").amps;
    INFO(name);
    CHECK((h * d).cwiseAbs().maxCoeff() < 1e-10 * (1 + h.cwiseAbs().maxCoeff()));
  }
  const Preset p4 = preset("dl-d-4");
  const Matrix h4 = build(p4.config).mat;
  CHECK((h4 * p4.states.at("dark1").amps).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((h4 * p4.states.at("dark2").amps).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("documented states project as expected") {
  const Preset p = preset("delta-d-1");
  const RealVector nat =
      populations(p.states.at("B_lambda"), natural_basis(3));
  CHECK(nat(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(nat(1) == 0);
  CHECK(nat(2) == doctest::Approx(0.5).epsilon(1e-14));

  std::vector<StateVector> vecs;
  for (const auto& n : p.table_basis) vecs.push_back(p.states.at(n));
  const RealVector tab =
      populations(p.states.at("D"), make_basis(vecs, p.table_basis));
  CHECK(tab(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(tab(1) + tab(2) < 1e-14);
}

TEST_CASE("time grid points are affine in the index") {
  const TimeGrid g{0.0, 0.5, 1001};
  CHECK(g.t(0) == 0.0);
  CHECK(g.t(1000) == 0.5);
  CHECK(g.t(500) == doctest::Approx(0.25).epsilon(1e-15));
}
