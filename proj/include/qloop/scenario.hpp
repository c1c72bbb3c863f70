#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>

#include "qloop/drive_model.hpp"
#include "qloop/types.hpp"

namespace qloop {

// CLI exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;      // schema / parse error
inline constexpr int kExitNumerical = 3;   // numerical precondition failure
inline constexpr int kExitCheckFailed = 4; // --assert check failed

enum class Task {
  evolve,
  phase_check,
  fidelity,
  coherence,
  dark_report,
  pairing_check,
};

Task task_from_name(const std::string& name);
std::string task_name(Task t);

struct Scenario {
  DriveConfig config;
  std::optional<std::string> preset_name;
  StateVector initial_state;
  TimeGrid grid;
  Basis measurement_basis;
  std::set<Task> tasks;
  double threshold = 1e-9;
  // Coherence bra/ket; resolved like initial_state names.
  StateVector coherence_bra;
  StateVector coherence_ket;
  bool assert_checks = false;
};

/// Parses the JSON scenario text. Throws std::invalid_argument naming the
/// offending field on any schema violation.
Scenario parse_scenario(const std::string& json_text);

/// Applies CLI overrides (all optional).
struct ScenarioOverrides {
  std::optional<double> tolerance;
  std::optional<int> points;
  bool assert_checks = false;
};

/// Runs every task, writing one file per task under out_dir. Returns an exit
/// code; diagnostics go to `err`.
int run_scenario(const Scenario& s, const std::filesystem::path& out_dir,
                 std::ostream& err);

/// Shortcut used by `check <preset> --task <name>`.
int run_preset_task(const std::string& preset_name, const std::string& task,
                    const ScenarioOverrides& ov,
                    const std::filesystem::path& out_dir, std::ostream& err);

Scenario scenario_from_preset(const std::string& preset_name);

/// Deterministic listing of every preset with parameters.
std::string list_presets_text();

/// Fixed 17-significant-digit float formatting used for all output files.
std::string format_double(double v);

}  // namespace qloop
