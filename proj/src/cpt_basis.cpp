#include "qloop/cpt_basis.hpp"

#include <cmath>
#include <stdexcept>

#include "qloop/operator_core.hpp"

namespace qloop {

namespace {

void require_equal_deltas(double d1, double d3) {
  if (d1 != d3) {
    throw std::invalid_argument(
        "CPT rewrite requires delta_1 == delta_3 (equal two-photon "
        "detunings)");
  }
}

}  // namespace

CptBasis3 cpt_states(double omega_12, double omega_23) {
  const double ocpt = std::hypot(omega_12, omega_23);
  if (!(ocpt > 0)) {
    throw std::invalid_argument("CPT pair needs a nonzero branch coupling");
  }
  CptBasis3 out;
  Vector b(3), d(3);
  b << omega_12 / ocpt, 0, omega_23 / ocpt;
  d << omega_23 / ocpt, 0, -omega_12 / ocpt;
  out.bright = StateVector{std::move(b), "natural"};
  out.excited = natural_ket(3, 2);
  out.dark = StateVector{std::move(d), "natural"};
  out.omega_cpt = ocpt;
  return out;
}

Basis CptBasis3::as_basis() const {
  return make_basis({bright, excited, dark}, {"B", "2", "D"});
}

HermitianOperator to_cpt_hamiltonian_3(const TriangleDrive& d) {
  require_equal_deltas(d.delta_1, d.delta_3);
  return change_basis(build_triangle(d),
                      cpt_states(d.omega_12, d.omega_23).as_basis());
}

Basis cpt_basis_4(const DiamondDrive& d) {
  const CptBasis3 pair = cpt_states(d.omega_12, d.omega_23);
  Matrix vecs = Matrix::Zero(4, 4);
  vecs.block(0, 0, 3, 1) << pair.bright.amps;
  vecs(1, 1) = 1;
  vecs.block(0, 2, 3, 1) << pair.dark.amps;
  vecs(3, 3) = 1;
  return make_basis(std::move(vecs), {"B", "2", "D", "4"});
}

HermitianOperator to_cpt_hamiltonian_4(const DiamondDrive& d) {
  require_equal_deltas(d.delta_1, d.delta_3);
  return change_basis(build_diamond(d), cpt_basis_4(d));
}

DoubleDarkBasis double_dark_basis(const DoubleLambdaAltDrive& d) {
  const double odl2 = d.omega_p * d.omega_p + d.omega_s * d.omega_s;
  const double odl = std::sqrt(odl2);
  if (!(odl > 0)) {
    throw std::invalid_argument(
        "double-Lambda dark pair needs a nonzero coupling");
  }
  const Complex ep = phase_factor(d.phi_small);
  const Complex em = std::conj(ep);
  DoubleDarkBasis out;
  Vector b(4), d1(4), d2(4);
  b << d.omega_p * em, 0, d.omega_s, 0;
  d1 << d.omega_s * ep, 0, -d.omega_p, 0;
  d2 << 2 * d.delta * d.omega_p * ep, odl2, 2 * d.delta * d.omega_s, -odl2;
  out.theta = odl * std::sqrt(4 * d.delta * d.delta + 2 * odl2);
  out.bright = make_state(std::move(b));
  out.dark1 = make_state(std::move(d1));
  out.dark2 = make_state(std::move(d2));
  return out;
}

bool coupling_graph_is_open(const HermitianOperator& h, double tol) {
  const Eigen::Index n = h.dim();
  double maxoff = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      maxoff = std::max(maxoff, std::abs(h.mat(i, j)));
    }
  }
  if (tol <= 0) tol = 1e-10 * (1 + maxoff);

  // A graph on n vertices is acyclic iff union-find never joins two vertices
  // already connected.
  std::vector<Eigen::Index> parent(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](Eigen::Index x) {
    while (parent[static_cast<size_t>(x)] != x) {
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(h.mat(i, j)) <= tol) continue;
      const Eigen::Index ri = find(i), rj = find(j);
      if (ri == rj) return false;
      parent[static_cast<size_t>(ri)] = rj;
    }
  }
  return true;
}

}  // namespace qloop
