#include "qloop/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "qloop/cpt_basis.hpp"
#include "qloop/darkstate.hpp"
#include "qloop/dynamics.hpp"
#include "qloop/operator_core.hpp"

namespace qloop {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Task task_from_name(const std::string& name) {
  if (name == "evolve") return Task::evolve;
  if (name == "phase_check") return Task::phase_check;
  if (name == "fidelity") return Task::fidelity;
  if (name == "coherence") return Task::coherence;
  if (name == "dark_report") return Task::dark_report;
  if (name == "pairing_check") return Task::pairing_check;
  throw std::invalid_argument(
      "tasks: unknown task '" + name +
      "' (valid: evolve phase_check fidelity coherence dark_report "
      "pairing_check)");
}

std::string task_name(Task t) {
  switch (t) {
    case Task::evolve: return "evolve";
    case Task::phase_check: return "phase_check";
    case Task::fidelity: return "fidelity";
    case Task::coherence: return "coherence";
    case Task::dark_report: return "dark_report";
    case Task::pairing_check: return "pairing_check";
  }
  return "?";
}

namespace {

double number_field(const json& j, const std::string& field) {
  if (!j.contains(field)) {
    throw std::invalid_argument("config: missing field '" + field + "'");
  }
  if (!j.at(field).is_number()) {
    throw std::invalid_argument("config: field '" + field +
                                "' must be a number");
  }
  return j.at(field).get<double>();
}

DriveConfig config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("topology")) {
    throw std::invalid_argument("config: missing field 'topology'");
  }
  const std::string topo = j.at("topology").get<std::string>();
  DriveConfig c;
  if (topo == "triangle") {
    c.params = TriangleDrive{
        number_field(j, "omega_12"), number_field(j, "omega_23"),
        number_field(j, "omega_31"), number_field(j, "delta_1"),
        number_field(j, "delta_3"), number_field(j, "phi")};
  } else if (topo == "diamond") {
    c.params = DiamondDrive{
        number_field(j, "omega_12"), number_field(j, "omega_23"),
        number_field(j, "omega_34"), number_field(j, "omega_41"),
        number_field(j, "delta_1"), number_field(j, "delta_3"),
        number_field(j, "delta_4"), number_field(j, "phi")};
  } else if (topo == "double_lambda_alt") {
    c.params = DoubleLambdaAltDrive{
        number_field(j, "omega_p"), number_field(j, "omega_s"),
        number_field(j, "delta"), number_field(j, "phi")};
  } else {
    throw std::invalid_argument("config: unknown topology '" + topo + "'");
  }
  c.label = "custom";
  return validate(c);
}

Vector vector_from_pairs(const json& arr, const std::string& field) {
  if (!arr.is_array() || arr.empty()) {
    throw std::invalid_argument(field + ": expected an array of (re, im) pairs");
  }
  Vector v(static_cast<Eigen::Index>(arr.size()));
  Eigen::Index i = 0;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number()) {
      throw std::invalid_argument(field +
                                  ": each component must be a [re, im] pair");
    }
    v(i++) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

StateVector resolve_state(const json& node, const std::string& field,
                          const Preset* p, Eigen::Index dim) {
  if (node.is_string()) {
    const std::string name = node.get<std::string>();
    if (p != nullptr) {
      auto it = p->states.find(name);
      if (it != p->states.end()) return it->second;
    }
    if (name.size() == 1 && name[0] >= '1' && name[0] <= '0' + dim) {
      return natural_ket(dim, name[0] - '0');
    }
    throw std::invalid_argument(field + ": unknown state name '" + name + "'");
  }
  StateVector s = make_state(vector_from_pairs(node, field));
  if (s.dim() != dim) {
    throw std::invalid_argument(field + ": dimension mismatch (expected " +
                                std::to_string(dim) + " components)");
  }
  return s;
}

Basis resolve_basis(const json& node, const DriveConfig& c, const Preset* p) {
  const Eigen::Index dim = c.dim();
  if (node.is_string()) {
    const std::string name = node.get<std::string>();
    if (name == "natural") return natural_basis(dim);
    if (name == "cpt") {
      return std::visit(
          [](const auto& d) -> Basis {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, TriangleDrive>) {
              return cpt_states(d.omega_12, d.omega_23).as_basis();
            } else if constexpr (std::is_same_v<T, DiamondDrive>) {
              return cpt_basis_4(d);
            } else {
              throw std::invalid_argument(
                  "measurement_basis: 'cpt' is undefined for the "
                  "double_lambda_alt topology");
            }
          },
          c.params);
    }
    if (name == "table1") {
      if (p == nullptr || p->table_basis.empty()) {
        throw std::invalid_argument(
            "measurement_basis: 'table1' needs a preset with a documented "
            "dark/bright basis");
      }
      if (static_cast<Eigen::Index>(p->table_basis.size()) != dim) {
        throw std::invalid_argument(
            "measurement_basis: preset's documented basis is incomplete");
      }
      std::vector<StateVector> vecs;
      for (const auto& n : p->table_basis) vecs.push_back(p->states.at(n));
      return make_basis(vecs, p->table_basis);
    }
    throw std::invalid_argument("measurement_basis: unknown basis '" + name +
                                "'");
  }
  if (!node.is_array() || node.size() != static_cast<size_t>(dim)) {
    throw std::invalid_argument(
        "measurement_basis: expected a name or a complete list of vectors");
  }
  std::vector<StateVector> vecs;
  std::vector<std::string> labels;
  for (size_t k = 0; k < node.size(); ++k) {
    vecs.push_back(make_state(
        vector_from_pairs(node[k], "measurement_basis[" +
                                        std::to_string(k) + "]")));
    if (vecs.back().dim() != dim) {
      throw std::invalid_argument("measurement_basis: dimension mismatch");
    }
    labels.push_back("b" + std::to_string(k + 1));
  }
  return make_basis(vecs, std::move(labels));
}

std::string complex_pair(Complex z) {
  return "(" + format_double(z.real()) + ", " + format_double(z.imag()) + ")";
}

std::string vector_pairs(const Vector& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += complex_pair(v(i));
  }
  return out + "]";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot open output file " + path.string());
  }
  f << text;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream os;
  os << "t";
  for (const auto& l : traj.basis_labels) os << ",P_" << l;
  os << "\n";
  for (int k = 0; k < traj.grid.n_points; ++k) {
    os << format_double(traj.grid.t(k));
    for (Eigen::Index j = 0; j < traj.populations.cols(); ++j) {
      os << ',' << format_double(traj.populations(k, j));
    }
    os << "\n";
  }
  return os.str();
}

std::string interleaved_csv(const Trajectory& plus, const Trajectory& minus) {
  std::ostringstream os;
  os << "t";
  for (const auto& l : plus.basis_labels) os << ",P_" << l << "+,P_" << l << "-";
  os << "\n";
  for (int k = 0; k < plus.grid.n_points; ++k) {
    os << format_double(plus.grid.t(k));
    for (Eigen::Index j = 0; j < plus.populations.cols(); ++j) {
      os << ',' << format_double(plus.populations(k, j)) << ','
         << format_double(minus.populations(k, j));
    }
    os << "\n";
  }
  return os.str();
}

struct TaskOutcome {
  bool check_failed = false;
};

TaskOutcome run_task(const Scenario& s, Task task,
                     const std::filesystem::path& out_dir) {
  TaskOutcome out;
  const HermitianOperator h = build(s.config);
  switch (task) {
    case Task::evolve: {
      const Trajectory traj =
          evolve(h, s.initial_state, s.grid, s.measurement_basis);
      write_file(out_dir / "evolve.csv", trajectory_csv(traj));
      break;
    }
    case Task::phase_check: {
      const PhaseSymmetryReport rep = phase_symmetry_check(
          s.config, s.initial_state, s.grid, s.measurement_basis, s.threshold);
      write_file(out_dir / "phase_check.csv",
                 interleaved_csv(rep.plus, rep.minus));
      std::ostringstream os;
      os << "task = phase_check\n"
         << "symmetric = " << (rep.symmetric ? "true" : "false") << "\n"
         << "deviation = " << format_double(rep.max_pop_deviation) << "\n"
         << "threshold = " << format_double(rep.threshold) << "\n";
      for (size_t j = 0; j < rep.plus.basis_labels.size(); ++j) {
        os << "deviation_" << rep.plus.basis_labels[j] << " = "
           << format_double(rep.per_state_deviation(
                  static_cast<Eigen::Index>(j)))
           << "\n";
      }
      write_file(out_dir / "phase_check.report", os.str());
      out.check_failed = !rep.symmetric;
      break;
    }
    case Task::fidelity: {
      const FidelitySeries f = fidelity_series(s.config, s.initial_state,
                                               s.grid);
      std::ostringstream os;
      os << "t,F\n";
      for (int k = 0; k < f.grid.n_points; ++k) {
        os << format_double(f.grid.t(k)) << ','
           << format_double(f.values(k)) << "\n";
      }
      write_file(out_dir / "fidelity.csv", os.str());
      break;
    }
    case Task::coherence: {
      const std::vector<Complex> series = coherence_series(
          s.config, s.initial_state, s.grid, s.coherence_bra, s.coherence_ket);
      std::ostringstream os;
      os << "t,re,im\n";
      for (int k = 0; k < s.grid.n_points; ++k) {
        os << format_double(s.grid.t(k)) << ','
           << format_double(series[static_cast<size_t>(k)].real()) << ','
           << format_double(series[static_cast<size_t>(k)].imag()) << "\n";
      }
      write_file(out_dir / "coherence.csv", os.str());
      break;
    }
    case Task::dark_report: {
      const DarkStateReport rep = find_dark_states(h);
      std::ostringstream os;
      os << "task = dark_report\n"
         << "exists = " << (rep.exists ? "true" : "false") << "\n"
         << "residual = " << format_double(rep.residual) << "\n"
         << "degeneracy = " << rep.degeneracy << "\n";
      for (size_t k = 0; k < rep.dark_states.size(); ++k) {
        os << "dark_" << k + 1 << " = "
           << vector_pairs(rep.dark_states[k].amps) << "\n";
      }
      for (size_t k = 0; k < rep.bright_states.size(); ++k) {
        os << "bright_" << k + 1 << " = "
           << vector_pairs(rep.bright_states[k].amps) << "\n";
      }
      write_file(out_dir / "dark_report.report", os.str());
      out.check_failed = !rep.exists;
      break;
    }
    case Task::pairing_check: {
      const bool paired = eigenvalue_pairing_check(h);
      const CheckerboardClass cls = checkerboard_class(h.mat);
      const SpectralDecomposition spec = eig_hermitian(h);
      std::ostringstream os;
      os << "task = pairing_check\n"
         << "paired = " << (paired ? "true" : "false") << "\n"
         << "checkerboard = "
         << (cls == CheckerboardClass::odd
                 ? "odd"
                 : cls == CheckerboardClass::even ? "even" : "neither")
         << "\n"
         << "eigenvalues =";
      for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
        os << ' ' << format_double(spec.eigenvalues(i));
      }
      os << "\n";
      write_file(out_dir / "pairing_check.report", os.str());
      out.check_failed = !paired;
      break;
    }
  }
  return out;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario: invalid JSON: ") +
                                e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("scenario: top level must be an object");
  }

  Scenario s;
  std::optional<Preset> p;
  if (j.contains("preset") && j.contains("config")) {
    throw std::invalid_argument(
        "scenario: give either 'preset' or 'config', not both");
  }
  if (j.contains("preset")) {
    if (!j.at("preset").is_string()) {
      throw std::invalid_argument("preset: must be a string");
    }
    p = preset(j.at("preset").get<std::string>());
    s.preset_name = p->config.label;
    s.config = p->config;
  } else if (j.contains("config")) {
    s.config = config_from_json(j.at("config"));
  } else {
    throw std::invalid_argument("scenario: missing 'preset' or 'config'");
  }

  if (j.contains("grid")) {
    const json& g = j.at("grid");
    if (!g.is_object()) {
      throw std::invalid_argument("grid: must be an object");
    }
    if (g.contains("t_start")) s.grid.t_start = g.at("t_start").get<double>();
    if (g.contains("t_end")) s.grid.t_end = g.at("t_end").get<double>();
    if (g.contains("n_points")) s.grid.n_points = g.at("n_points").get<int>();
    try {
      validate(s.grid);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("grid: ") + e.what());
    }
  }

  if (!j.contains("tasks") || !j.at("tasks").is_array() ||
      j.at("tasks").empty()) {
    throw std::invalid_argument("tasks: required, non-empty array");
  }
  for (const auto& t : j.at("tasks")) {
    if (!t.is_string()) {
      throw std::invalid_argument("tasks: entries must be strings");
    }
    s.tasks.insert(task_from_name(t.get<std::string>()));
  }

  const Preset* pp = p ? &*p : nullptr;
  const Eigen::Index dim = s.config.dim();
  if (j.contains("initial_state")) {
    s.initial_state =
        resolve_state(j.at("initial_state"), "initial_state", pp, dim);
  } else {
    s.initial_state = resolve_state(json(p ? p->default_initial : "1"),
                                    "initial_state", pp, dim);
  }

  if (j.contains("measurement_basis")) {
    s.measurement_basis = resolve_basis(j.at("measurement_basis"), s.config,
                                        pp);
  } else {
    s.measurement_basis =
        resolve_basis(json(p ? p->default_basis : "natural"), s.config, pp);
  }

  if (j.contains("threshold")) {
    s.threshold = j.at("threshold").get<double>();
    if (!(s.threshold > 0)) {
      throw std::invalid_argument("threshold: must be positive");
    }
  }

  // Coherence binding; defaults to the preset's Lambda bright/dark pair.
  json bra = "1", ket = "2";
  if (pp && pp->states.count("B_lambda") && pp->states.count("D_lambda")) {
    bra = "B_lambda";
    ket = "D_lambda";
  }
  if (j.contains("coherence")) {
    const json& c = j.at("coherence");
    if (!c.is_object() || !c.contains("bra") || !c.contains("ket")) {
      throw std::invalid_argument(
          "coherence: must be an object with 'bra' and 'ket'");
    }
    bra = c.at("bra");
    ket = c.at("ket");
  }
  s.coherence_bra = resolve_state(bra, "coherence.bra", pp, dim);
  s.coherence_ket = resolve_state(ket, "coherence.ket", pp, dim);

  if (j.contains("assert")) {
    s.assert_checks = j.at("assert").get<bool>();
  }
  return s;
}

int run_scenario(const Scenario& s, const std::filesystem::path& out_dir,
                 std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    err << "cannot create output directory " << out_dir << ": "
        << ec.message() << "\n";
    return kExitNumerical;
  }
  bool any_check_failed = false;
  for (Task t : s.tasks) {
    try {
      any_check_failed |= run_task(s, t, out_dir).check_failed;
    } catch (const std::invalid_argument& e) {
      err << task_name(t) << ": " << e.what() << "\n";
      return kExitNumerical;
    } catch (const std::exception& e) {
      err << task_name(t) << ": " << e.what() << "\n";
      return kExitNumerical;
    }
  }
  if (s.assert_checks && any_check_failed) {
    err << "asserted check failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

Scenario scenario_from_preset(const std::string& preset_name) {
  json j;
  j["preset"] = preset_name;
  j["tasks"] = json::array({"evolve"});
  return parse_scenario(j.dump());
}

int run_preset_task(const std::string& preset_name, const std::string& task,
                    const ScenarioOverrides& ov,
                    const std::filesystem::path& out_dir, std::ostream& err) {
  Scenario s;
  try {
    s = scenario_from_preset(preset_name);
    s.tasks = {task_from_name(task)};
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitSchema;
  }
  if (ov.tolerance) {
    if (!(*ov.tolerance > 0)) {
      err << "tolerance: must be positive\n";
      return kExitSchema;
    }
    s.threshold = *ov.tolerance;
  }
  if (ov.points) {
    s.grid.n_points = *ov.points;
    try {
      validate(s.grid);
    } catch (const std::invalid_argument& e) {
      err << e.what() << "\n";
      return kExitSchema;
    }
  }
  s.assert_checks = ov.assert_checks;
  return run_scenario(s, out_dir, err);
}

std::string list_presets_text() {
  std::ostringstream os;
  for (const auto& name : preset_names()) {
    os << name << ": " << preset(name).summary << "\n";
  }
  return os.str();
}

}  // namespace qloop
