#include "qloop/darkstate.hpp"

#include <cmath>
#include <stdexcept>

#include "qloop/operator_core.hpp"

namespace qloop {

CasimirSet casimir_invariants(const HermitianOperator& h) {
  const Eigen::Index n = h.dim();
  RealVector c(n);
  Matrix power = Matrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    power = power * h.mat;
    c(k) = power.trace().real();
  }
  return CasimirSet{std::move(c)};
}

double dark_residual_triangle(const TriangleDrive& d) {
  return d.delta_1 * d.omega_23 * d.omega_23 +
         d.delta_3 * d.omega_12 * d.omega_12 +
         d.omega_12 * d.omega_23 * d.omega_31 * std::cos(d.phi);
}

double dark_residual_diamond(const DiamondDrive& d) {
  const double o12 = d.omega_12, o23 = d.omega_23;
  const double o34 = d.omega_34, o41 = d.omega_41;
  return -4 * o12 * o12 * d.delta_3 * d.delta_4 -
         4 * o23 * o23 * d.delta_1 * d.delta_4 + o12 * o12 * o34 * o34 +
         o23 * o23 * o41 * o41 -
         2 * o12 * o23 * o34 * o41 * std::cos(d.phi);
}

DarkStateReport find_dark_states(const HermitianOperator& h, double tol) {
  const SpectralDecomposition spec = eig_hermitian(h);
  if (tol <= 0) {
    tol = 1e-9 * (1.0 + spec.eigenvalues.cwiseAbs().maxCoeff());
  }
  DarkStateReport rep;
  rep.residual = h.mat.determinant().real();
  if (h.dim() == 3) rep.residual *= 4;
  if (h.dim() == 4) rep.residual *= 16;
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
    StateVector v{spec.eigenvectors.col(k), "natural"};
    if (std::abs(spec.eigenvalues(k)) < tol) {
      rep.dark_states.push_back(std::move(v));
    } else {
      rep.bright_states.push_back(std::move(v));
    }
  }
  rep.degeneracy = static_cast<int>(rep.dark_states.size());
  rep.exists = rep.degeneracy > 0;
  return rep;
}

StateVector dark_state_closed_form(const std::string& preset_name) {
  const std::string name = canonical_preset_name(preset_name);
  const Preset p = preset(name);
  if (name == "delta-d-1" || name == "delta-d-2" || name == "delta-d-3" ||
      name == "dl-d-1" || name == "dl-d-2") {
    return p.states.at("D");
  }
  if (name == "dl-d-4") {
    return p.states.at("dark2");
  }
  throw std::invalid_argument("no closed-form dark state for preset '" +
                              name + "'");
}

std::pair<double, double> solve_dark_detunings_triangle(
    double omega_12, double omega_23, double omega_31, double phi,
    const DetuningConstraint& constraint) {
  const double num = -omega_12 * omega_23 * omega_31 * std::cos(phi);
  return std::visit(
      [&](const auto& c) -> std::pair<double, double> {
        using T = std::decay_t<decltype(c)>;
        double denom;
        double ratio;
        if constexpr (std::is_same_v<T, EqualDeltas>) {
          denom = omega_12 * omega_12 + omega_23 * omega_23;
          ratio = 1.0;
        } else {
          denom = omega_23 * omega_23 + c.r * omega_12 * omega_12;
          ratio = c.r;
        }
        if (std::abs(denom) < 1e-14 * (1 + omega_12 * omega_12 +
                                       omega_23 * omega_23)) {
          throw std::invalid_argument(
              "dark-detuning constraint is degenerate (zero coefficient)");
        }
        const double d1 = num / denom;
        return {d1, ratio * d1};
      },
      constraint);
}

UnbalancedLambdaDark unbalanced_lambda_dark(const TriangleDrive& d) {
  const double phase = std::cos(reduce_phase(d.phi));
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "unbalanced-Lambda spectator requires a real drive (phi = 0 or pi)");
  }
  if (d.omega_12 <= 0 || d.omega_23 <= 0) {
    throw std::invalid_argument(
        "unbalanced-Lambda spectator requires nonzero branch couplings");
  }
  const double o31 = phase * d.omega_31;  // signed 1-3 coupling
  UnbalancedLambdaDark out;
  out.detuning_difference =
      0.5 * o31 * (d.omega_23 * d.omega_23 - d.omega_12 * d.omega_12) /
      (d.omega_12 * d.omega_23);
  out.eigenvalue = -d.delta_1 - 0.5 * o31 * d.omega_12 / d.omega_23;
  Vector v(3);
  v << d.omega_23, 0, -d.omega_12;
  out.dark = make_state(std::move(v));
  return out;
}

}  // namespace qloop
