#pragma once

#include "qloop/drive_model.hpp"
#include "qloop/types.hpp"

namespace qloop {

/// c[k-1] = Tr(H^k) for k = 1..dim (real for Hermitian H).
struct CasimirSet {
  RealVector c;
};

CasimirSet casimir_invariants(const HermitianOperator& h);

/// delta1*O23^2 + delta3*O12^2 + O12*O23*O31*cos(phi).
/// Zero iff a zero-eigenvalue dark state exists; equals 4*det(H).
double dark_residual_triangle(const TriangleDrive& d);

/// -4*O12^2*d3*d4 - 4*O23^2*d1*d4 + O12^2*O34^2 + O23^2*O41^2
/// - 2*O12*O23*O34*O41*cos(phi). Zero iff a dark state exists; equals
/// 16*det(H).
double dark_residual_diamond(const DiamondDrive& d);

struct DarkStateReport {
  bool exists = false;
  /// Value of the closed-form zero-eigenvalue condition (4*det for 3x3,
  /// 16*det for 4x4, det otherwise).
  double residual = 0;
  std::vector<StateVector> dark_states;    // canonical gauge
  std::vector<StateVector> bright_states;  // ascending eigenvalue order
  int degeneracy = 0;
};

/// Dark states are the eigenvectors with |lambda| < tol; pass tol <= 0 for
/// the default 1e-9 * (1 + spectral radius).
DarkStateReport find_dark_states(const HermitianOperator& h, double tol = 0);

/// Analytic dark state of a case that has one in closed form
/// (delta-d-1/2/3, dl-d-1, dl-d-2, dl-d-4); throws otherwise. For dl-d-4 the
/// second (superposition) dark state is returned.
StateVector dark_state_closed_form(const std::string& preset_name);

struct EqualDeltas {};
struct DeltaRatio {
  double r;  // delta_3 = r * delta_1
};
using DetuningConstraint = std::variant<EqualDeltas, DeltaRatio>;

/// Solves the triangle dark-state condition for the detunings under the
/// given constraint; returns (delta_1, delta_3). Throws when the constraint
/// degenerates (zero coefficient).
std::pair<double, double> solve_dark_detunings_triangle(
    double omega_12, double omega_23, double omega_31, double phi,
    const DetuningConstraint& constraint);

struct UnbalancedLambdaDark {
  /// delta_1 - delta_3 required for |D>^u to stay an eigenstate.
  double detuning_difference = 0;
  double eigenvalue = 0;
  StateVector dark;
};

/// Unbalanced-Lambda spectator state of a real (phi in {0, pi}) triangle
/// drive with a nonzero 1-3 coupling.
UnbalancedLambdaDark unbalanced_lambda_dark(const TriangleDrive& d);

}  // namespace qloop
