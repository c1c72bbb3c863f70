#pragma once

#include <map>
#include <variant>

#include "qloop/types.hpp"

namespace qloop {

/// Closed-loop triangle drive. The gauge-invariant global phase phi sits on
/// the 1-3 (loop-closing) coupling.
struct TriangleDrive {
  double omega_12 = 0;
  double omega_23 = 0;
  double omega_31 = 0;
  double delta_1 = 0;
  double delta_3 = 0;
  double phi = 0;
};

/// Closed-loop diamond / double-Lambda drive; phi sits on the 4-1 coupling.
struct DiamondDrive {
  double omega_12 = 0;
  double omega_23 = 0;
  double omega_34 = 0;
  double omega_41 = 0;
  double delta_1 = 0;
  double delta_3 = 0;
  double delta_4 = 0;
  double phi = 0;
};

/// Double-Lambda drive with equal Rabi frequencies on both Lambda branches,
/// zero energy on states |1>,|3>, and the phase on both pump couplings.
struct DoubleLambdaAltDrive {
  double omega_p = 0;
  double omega_s = 0;
  double delta = 0;
  double phi_small = 0;
};

enum class Topology { triangle, diamond, double_lambda_alt };

struct DriveConfig {
  std::variant<TriangleDrive, DiamondDrive, DoubleLambdaAltDrive> params;
  std::string label;

  Topology topology() const {
    return static_cast<Topology>(params.index());
  }
  Eigen::Index dim() const { return topology() == Topology::triangle ? 3 : 4; }
};

/// Reduces an angle to [-pi, pi]. Both endpoints are kept representable so
/// that phase negation stays exact.
double reduce_phase(double phi);

/// e^{i phi}, exactly real at phi = 0 and phi = +-pi.
Complex phase_factor(double phi);

HermitianOperator build_triangle(const TriangleDrive& d);
HermitianOperator build_diamond(const DiamondDrive& d);
HermitianOperator build_double_lambda_alt(const DoubleLambdaAltDrive& d);
HermitianOperator build(const DriveConfig& c);

/// Same config with the global phase negated; build(conjugate_phase(c)) is
/// the exact entrywise complex conjugate of build(c).
DriveConfig conjugate_phase(DriveConfig c);

/// Throws std::invalid_argument on negative or non-finite Rabi frequencies or
/// non-finite detunings/phase, and returns the config with reduced phase.
DriveConfig validate(DriveConfig c);

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.5;
  int n_points = 1001;

  double t(int k) const {
    return t_start + (t_end - t_start) * k / (n_points - 1);
  }
};

TimeGrid validate(const TimeGrid& g);

/// A named drive case: the parameter set plus the documented states of that
/// case (dark/bright vectors, CPT vectors, natural kets).
struct Preset {
  DriveConfig config;
  /// Named vectors (natural basis) documented for the case.
  std::map<std::string, StateVector> states;
  /// Dark/bright measurement basis in the documented order, empty when the
  /// case has none.
  std::vector<std::string> table_basis;
  std::string default_initial = "1";
  std::string default_basis = "natural";  // natural | cpt | table1
  std::string summary;
};

/// Canonical preset names, listing order.
const std::vector<std::string>& preset_names();

/// Accepts canonical names ("delta-d-1", "dl-0phi-2", "fig5", ...) plus the
/// unicode spellings; throws std::invalid_argument with the list of valid
/// names otherwise.
Preset preset(const std::string& name);

std::string canonical_preset_name(const std::string& name);

}  // namespace qloop
