#include "qloop/drive_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qloop {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

void require_rabi(double v, const char* what) {
  require_finite(v, what);
  if (v < 0) {
    throw std::invalid_argument(std::string(what) +
                                " must be nonnegative (a sign is a phase)");
  }
}

}  // namespace

double reduce_phase(double phi) {
  if (phi >= -kPi && phi <= kPi) return phi;
  double r = std::remainder(phi, 2 * kPi);  // (-pi, pi]
  return r;
}

Complex phase_factor(double phi) {
  if (phi == 0) return Complex(1, 0);
  if (phi == kPi || phi == -kPi) return Complex(-1, 0);
  return Complex(std::cos(phi), std::sin(phi));
}

DriveConfig validate(DriveConfig c) {
  std::visit(
      [](auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TriangleDrive>) {
          require_rabi(d.omega_12, "omega_12");
          require_rabi(d.omega_23, "omega_23");
          require_rabi(d.omega_31, "omega_31");
          require_finite(d.delta_1, "delta_1");
          require_finite(d.delta_3, "delta_3");
          require_finite(d.phi, "phi");
          d.phi = reduce_phase(d.phi);
        } else if constexpr (std::is_same_v<T, DiamondDrive>) {
          require_rabi(d.omega_12, "omega_12");
          require_rabi(d.omega_23, "omega_23");
          require_rabi(d.omega_34, "omega_34");
          require_rabi(d.omega_41, "omega_41");
          require_finite(d.delta_1, "delta_1");
          require_finite(d.delta_3, "delta_3");
          require_finite(d.delta_4, "delta_4");
          require_finite(d.phi, "phi");
          d.phi = reduce_phase(d.phi);
        } else {
          require_rabi(d.omega_p, "omega_p");
          require_rabi(d.omega_s, "omega_s");
          require_finite(d.delta, "delta");
          require_finite(d.phi_small, "phi");
          d.phi_small = reduce_phase(d.phi_small);
        }
      },
      c.params);
  return c;
}

HermitianOperator build_triangle(const TriangleDrive& d) {
  Matrix h = Matrix::Zero(3, 3);
  h(0, 0) = -d.delta_1;
  h(2, 2) = -d.delta_3;
  h(0, 1) = 0.5 * d.omega_12;
  h(1, 0) = 0.5 * d.omega_12;
  h(1, 2) = 0.5 * d.omega_23;
  h(2, 1) = 0.5 * d.omega_23;
  h(0, 2) = 0.5 * d.omega_31 * phase_factor(d.phi);
  h(2, 0) = std::conj(h(0, 2));
  return HermitianOperator{std::move(h)};
}

HermitianOperator build_diamond(const DiamondDrive& d) {
  Matrix h = Matrix::Zero(4, 4);
  h(0, 0) = -d.delta_1;
  h(2, 2) = -d.delta_3;
  h(3, 3) = -d.delta_4;
  h(0, 1) = 0.5 * d.omega_12;
  h(1, 0) = 0.5 * d.omega_12;
  h(1, 2) = 0.5 * d.omega_23;
  h(2, 1) = 0.5 * d.omega_23;
  h(2, 3) = 0.5 * d.omega_34;
  h(3, 2) = 0.5 * d.omega_34;
  h(0, 3) = 0.5 * d.omega_41 * phase_factor(d.phi);
  h(3, 0) = std::conj(h(0, 3));
  return HermitianOperator{std::move(h)};
}

HermitianOperator build_double_lambda_alt(const DoubleLambdaAltDrive& d) {
  Matrix h = Matrix::Zero(4, 4);
  const Complex p = 0.5 * d.omega_p * phase_factor(d.phi_small);
  h(1, 1) = -d.delta;
  h(3, 3) = d.delta;
  h(0, 1) = p;
  h(1, 0) = std::conj(p);
  h(0, 3) = p;
  h(3, 0) = std::conj(p);
  h(1, 2) = 0.5 * d.omega_s;
  h(2, 1) = 0.5 * d.omega_s;
  h(2, 3) = 0.5 * d.omega_s;
  h(3, 2) = 0.5 * d.omega_s;
  return HermitianOperator{std::move(h)};
}

HermitianOperator build(const DriveConfig& c) {
  return std::visit(
      [](const auto& d) -> HermitianOperator {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TriangleDrive>) {
          return build_triangle(d);
        } else if constexpr (std::is_same_v<T, DiamondDrive>) {
          return build_diamond(d);
        } else {
          return build_double_lambda_alt(d);
        }
      },
      c.params);
}

DriveConfig conjugate_phase(DriveConfig c) {
  std::visit(
      [](auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, DoubleLambdaAltDrive>) {
          d.phi_small = -d.phi_small;
        } else {
          d.phi = -d.phi;
        }
      },
      c.params);
  return c;
}

TimeGrid validate(const TimeGrid& g) {
  if (!(g.t_end > g.t_start)) {
    throw std::invalid_argument("grid: t_end must exceed t_start");
  }
  if (g.n_points < 2) {
    throw std::invalid_argument("grid: n_points must be at least 2");
  }
  return g;
}

namespace {

StateVector sv(std::initializer_list<Complex> comps) {
  Vector v(static_cast<Eigen::Index>(comps.size()));
  Eigen::Index i = 0;
  for (Complex c : comps) v(i++) = c;
  return make_state(std::move(v));
}

const Complex I{0, 1};

struct Catalog {
  std::vector<std::string> names;
  std::map<std::string, Preset> presets;
  std::map<std::string, std::string> aliases;

  void add(const std::string& name, Preset p,
           std::initializer_list<const char*> alias_list) {
    names.push_back(name);
    presets.emplace(name, std::move(p));
    for (const char* a : alias_list) aliases.emplace(a, name);
  }
};

// Balanced-Lambda bright/dark pair shared by the equal-coupling cases.
void add_lambda_states(Preset& p) {
  p.states.emplace("B_lambda", sv({1, 0, 1}));
  p.states.emplace("D_lambda", sv({1, 0, -1}));
}

Preset triangle_preset(double o12, double o23, double o31, double d1,
                       double d3, double phi, std::string summary) {
  Preset p;
  p.config =
      validate({TriangleDrive{o12, o23, o31, d1, d3, phi}, ""});
  p.summary = std::move(summary);
  return p;
}

Preset diamond_preset(double o12, double o23, double o34, double o41,
                      double d1, double d3, double d4, double phi,
                      std::string summary) {
  Preset p;
  p.config =
      validate({DiamondDrive{o12, o23, o34, o41, d1, d3, d4, phi}, ""});
  p.summary = std::move(summary);
  return p;
}

Catalog build_catalog() {
  Catalog cat;
  const double sq2 = std::sqrt(2.0);
  const double sq3 = std::sqrt(3.0);

  // --- named triangle dark-state cases ---
  {
    Preset p = triangle_preset(20, 20, 20, 0, 0, kPi / 2,
                               "triangle, omega_12=omega_23=omega_31=20, "
                               "delta_1=delta_3=0, phi=pi/2");
    p.states.emplace("D", sv({1, I, -1}));
    p.states.emplace("B1", sv({1, 0, 1}));
    p.states.emplace("B2", sv({1, -2.0 * I, -1}));
    add_lambda_states(p);
    p.table_basis = {"D", "B1", "B2"};
    p.default_initial = "D_lambda";
    cat.add("delta-d-1", std::move(p), {"Δ-D-1", "Delta-D-1"});
  }
  {
    Preset p = triangle_preset(20, 20, 20, -5, -5, kPi / 3,
                               "triangle, omega_12=omega_23=omega_31=20, "
                               "delta_1=delta_3=-5, phi=pi/3");
    p.states.emplace("D", sv({2, I * sq3, -2}));
    p.states.emplace("B1", sv({sq3, -2.0 * I, 0}));
    p.states.emplace("B2", sv({4, 2.0 * I * sq3, 7}));
    add_lambda_states(p);
    p.table_basis = {"D", "B1", "B2"};
    p.default_initial = "B_lambda";
    cat.add("delta-d-2", std::move(p), {"Δ-D-2", "Delta-D-2"});
  }
  {
    const double phi = kPi / 3;
    const double omega = 20;
    Preset p = triangle_preset(
        omega, 2 * omega, 3 * omega, -0.75 * omega * std::cos(phi),
        -3.0 * omega * std::cos(phi), phi,
        "triangle, omega_12=20, omega_23=40, omega_31=60, "
        "delta_1=-7.5, delta_3=-30, phi=pi/3");
    const double s = std::sin(phi);
    p.states.emplace("D", sv({2, 3.0 * I * s, -1}));
    add_lambda_states(p);
    p.default_initial = "D";
    cat.add("delta-d-3", std::move(p), {"Δ-D-3", "Delta-D-3"});
  }

  // --- named diamond dark-state cases ---
  {
    Preset p = diamond_preset(16, 16, 16, 16, 16, 16, 2, kPi / 3,
                              "diamond, all omega=16, delta_1=delta_3=16, "
                              "delta_4=2, phi=pi/3");
    const Complex e_m3 = phase_factor(-kPi / 3);
    const Complex e_p3 = phase_factor(kPi / 3);
    const Complex e_2p3 = phase_factor(2 * kPi / 3);
    p.states.emplace("D", sv({1, 2.0 * I * sq3, -1, -2.0 * (1.0 + I * sq3)}));
    p.states.emplace("B1", sv({0, 2, 0, 1.0 + e_m3}));
    p.states.emplace("B2", sv({1, 0, 1, 0}));
    p.states.emplace("B3", sv({7.0 * e_2p3, 1.0 + e_p3, -7.0 * e_2p3, -2}));
    p.states.emplace("B_lambda", sv({1, 0, 1, 0}));
    p.states.emplace("D_lambda", sv({1, 0, -1, 0}));
    p.table_basis = {"D", "B1", "B2", "B3"};
    p.default_initial = "B1";
    cat.add("dl-d-1", std::move(p), {"DΛ-D-1", "DL-D-1"});
  }
  {
    Preset p = diamond_preset(10, 10, 10, 10 * sq2, 5, 0, 5, kPi / 4,
                              "diamond, omega_12=omega_23=omega_34=10, "
                              "omega_41=14.142135623730951 (sqrt(2)*10), "
                              "delta_1=delta_4=5, delta_3=0, phi=pi/4");
    p.states.emplace("D", sv({1, I, -1, -I}));
    p.table_basis = {"D"};
    cat.add("dl-d-2", std::move(p), {"DΛ-D-2", "DL-D-2"});
  }
  {
    Preset p = diamond_preset(10, 20, 30, 40, 0, 0, 0, kPi / 2,
                              "diamond, omega_12=10, omega_23=20, "
                              "omega_34=30, omega_41=40, all delta=0, "
                              "phi=pi/2");
    cat.add("dl-d-3", std::move(p), {"DΛ-D-3", "DL-D-3"});
  }
  {
    // Double-Lambda with equal branch couplings; double-dark case.
    const double op = 10, os = 10, delta = 5, phi = kPi / 3;
    Preset p;
    p.config = validate({DoubleLambdaAltDrive{op, os, delta, phi}, ""});
    p.summary =
        "double-lambda (alt), omega_p=omega_s=10, delta=5, phi=pi/3";
    const double odl = std::hypot(op, os);
    const Complex ep = phase_factor(phi);
    const Complex em = phase_factor(-phi);
    p.states.emplace("bright", sv({op * em, 0, os, 0}));
    p.states.emplace("dark1", sv({os * ep, 0, -op, 0}));
    p.states.emplace("dark2",
                     sv({2 * delta * op * ep, odl * odl, 2 * delta * os,
                         -odl * odl}));
    p.default_initial = "1";
    cat.add("dl-d-4", std::move(p), {"DΛ-D-4", "DL-D-4"});
  }

  // --- phi = 0, pi real-Hamiltonian cases ---
  {
    Preset p = triangle_preset(20, 20, 20, 0, 0, 0,
                               "triangle, omega_12=omega_23=omega_31=20, "
                               "delta_1=delta_3=0, phi=0");
    add_lambda_states(p);
    p.default_initial = "D_lambda";
    cat.add("delta-0phi-1", std::move(p), {"Δ-0Φ-1", "Delta-0Phi-1"});
  }
  {
    // Unbalanced Lambda with the compensating detuning difference
    // delta_1 - delta_3 = (omega_31/2)(omega_23^2-omega_12^2)/(o12 o23).
    const double o12 = 10, o23 = 20, o31 = 10;
    const double diff = 0.5 * o31 * (o23 * o23 - o12 * o12) / (o12 * o23);
    Preset p = triangle_preset(o12, o23, o31, 0, -diff, 0,
                               "triangle, omega_12=10, omega_23=20, "
                               "omega_31=10, delta_1=0, delta_3=-7.5, phi=0");
    p.states.emplace("D_u", sv({o23, 0, -o12}));
    p.states.emplace("B_u", sv({o12, 0, o23}));
    p.default_initial = "D_u";
    cat.add("delta-0phi-2", std::move(p), {"Δ-0Φ-2", "Delta-0Phi-2"});
  }
  {
    // phi=0, omega_12*omega_34 = omega_23*omega_41, delta_1=delta_3.
    Preset p = diamond_preset(10, 20, 15, 7.5, 3, 3, 5, 0,
                              "diamond, omega_12=10, omega_23=20, "
                              "omega_34=15, omega_41=7.5, "
                              "delta_1=delta_3=3, delta_4=5, phi=0");
    p.states.emplace("D_u", sv({20, 0, -10, 0}));
    p.states.emplace("B_u", sv({10, 0, 20, 0}));
    p.default_initial = "B_u";
    cat.add("dl-0phi-1", std::move(p), {"DΛ-0Φ-1", "DL-0Phi-1"});
  }
  {
    // phi=pi, omega_23*omega_34 = omega_12*omega_41, delta_1=delta_3.
    Preset p = diamond_preset(10, 20, 15, 30, 3, 3, 5, kPi,
                              "diamond, omega_12=10, omega_23=20, "
                              "omega_34=15, omega_41=30, "
                              "delta_1=delta_3=3, delta_4=5, phi=pi");
    p.states.emplace("D_u", sv({20, 0, -10, 0}));
    p.states.emplace("B_u", sv({10, 0, 20, 0}));
    p.default_initial = "B_u";
    cat.add("dl-0phi-2", std::move(p), {"DΛ-0Φ-2", "DL-0Phi-2"});
  }

  // --- figure presets (time span [0, 0.5], 1001 points) ---
  auto derive = [&cat](const std::string& base, std::string initial,
                       std::string basis, std::string summary) {
    Preset p = cat.presets.at(base);
    p.default_initial = std::move(initial);
    p.default_basis = std::move(basis);
    p.summary = std::move(summary) + "; " + p.summary;
    return p;
  };
  cat.add("fig2a",
          derive("delta-d-1", "1", "natural",
                 "PPhiS violation, natural basis, initial |1>"),
          {});
  cat.add("fig2b",
          derive("delta-d-2", "2", "natural",
                 "PPhiS violation, natural basis, initial |2>"),
          {});
  cat.add("fig2c",
          derive("dl-d-2", "1", "natural",
                 "PPhiS violation, natural basis, initial |1>"),
          {});
  cat.add("fig3a",
          derive("delta-d-2", "B1", "table1",
                 "dark-subspace PPhiS, dark/bright basis, initial |B1>"),
          {});
  cat.add("fig3b",
          derive("dl-d-1", "B1", "table1",
                 "dark-subspace PPhiS, dark/bright basis, initial |B1>"),
          {});
  cat.add("fig4a",
          derive("delta-d-1", "D_lambda", "cpt",
                 "open-loop PPhiS, CPT basis, initial |D>_Lambda"),
          {});
  cat.add("fig4b",
          derive("delta-d-2", "2", "cpt",
                 "open-loop PPhiS, CPT basis, initial |2>"),
          {});
  cat.add("fig4c",
          derive("dl-d-1", "B_lambda", "cpt",
                 "open-loop PPhiS, CPT basis, initial |B>_Lambda"),
          {});
  cat.add("fig5",
          derive("dl-d-3", "1", "natural",
                 "all-resonant PPhiS, natural basis, initial |1>"),
          {});
  return cat;
}

const Catalog& catalog() {
  static const Catalog cat = build_catalog();
  return cat;
}

}  // namespace

const std::vector<std::string>& preset_names() { return catalog().names; }

std::string canonical_preset_name(const std::string& name) {
  const Catalog& cat = catalog();
  if (cat.presets.count(name)) return name;
  auto it = cat.aliases.find(name);
  if (it != cat.aliases.end()) return it->second;
  // case-insensitive ASCII fallback
  std::string lower;
  for (char ch : name) lower.push_back(static_cast<char>(std::tolower(ch)));
  if (cat.presets.count(lower)) return lower;
  std::ostringstream os;
  os << "unknown preset '" << name << "'; valid names:";
  for (const auto& n : cat.names) os << ' ' << n;
  throw std::invalid_argument(os.str());
}

Preset preset(const std::string& name) {
  Preset p = catalog().presets.at(canonical_preset_name(name));
  p.config.label = canonical_preset_name(name);
  return p;
}

}  // namespace qloop
