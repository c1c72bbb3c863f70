#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qloop/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Closed-loop few-level drive simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = ".";
  std::string preset_name;
  std::string task;
  double tolerance = -1;
  int points = -1;
  bool assert_checks = false;

  CLI::App* run = app.add_subcommand("run", "Run a JSON scenario file");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--tolerance", tolerance, "Symmetry threshold override");
  run->add_option("--points", points, "Grid point count override");
  run->add_flag("--assert", assert_checks,
                "Exit 4 when a requested check fails");

  CLI::App* list = app.add_subcommand("list-presets", "List preset cases");

  CLI::App* check =
      app.add_subcommand("check", "Run one task on a preset case");
  check->add_option("preset", preset_name, "Preset name")->required();
  check->add_option("--task", task, "Task name")->required();
  check->add_option("--out", out_dir, "Output directory");
  check->add_option("--tolerance", tolerance, "Symmetry threshold override");
  check->add_option("--points", points, "Grid point count override");
  check->add_flag("--assert", assert_checks,
                  "Exit 4 when the check fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qloop::kExitSchema;
  }

  if (list->parsed()) {
    std::cout << qloop::list_presets_text();
    return qloop::kExitOk;
  }

  qloop::ScenarioOverrides ov;
  if (tolerance >= 0) ov.tolerance = tolerance;
  if (points >= 0) ov.points = points;
  ov.assert_checks = assert_checks;

  if (check->parsed()) {
    return qloop::run_preset_task(preset_name, task, ov, out_dir, std::cerr);
  }

  std::ifstream f(scenario_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot read scenario file " << scenario_path << "\n";
    return qloop::kExitSchema;
  }
  std::ostringstream buf;
  buf << f.rdbuf();

  qloop::Scenario s;
  try {
    s = qloop::parse_scenario(buf.str());
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return qloop::kExitSchema;
  }
  if (ov.tolerance) s.threshold = *ov.tolerance;
  if (ov.points) {
    s.grid.n_points = *ov.points;
    try {
      qloop::validate(s.grid);
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return qloop::kExitSchema;
    }
  }
  if (assert_checks) s.assert_checks = true;
  return qloop::run_scenario(s, out_dir, std::cerr);
}
