#include "qloop/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace qloop {

Trajectory evolve(const HermitianOperator& h, const StateVector& psi0,
                  const TimeGrid& grid, const Basis& basis,
                  bool keep_amplitudes) {
  if (h.dim() != psi0.dim() || basis.dim() != psi0.dim()) {
    throw std::invalid_argument("evolve: dimension mismatch");
  }
  validate(grid);
  const SpectralDecomposition spec = eig_hermitian(h);
  const Vector coeffs = spec.eigenvectors.adjoint() * psi0.amps;

  Trajectory traj;
  traj.grid = grid;
  traj.basis_labels = basis.labels;
  traj.populations.resize(grid.n_points, basis.size());
  traj.has_amplitudes = keep_amplitudes;
  if (keep_amplitudes) traj.amplitudes.resize(grid.n_points, basis.size());

  for (int k = 0; k < grid.n_points; ++k) {
    const double t = grid.t(k);
    const Vector phases =
        (Complex(0, -1) * t * spec.eigenvalues.cast<Complex>()).array().exp();
    const Vector psi = spec.eigenvectors * (phases.cwiseProduct(coeffs));
    const Vector amp = basis.vecs.adjoint() * psi;
    traj.populations.row(k) = amp.cwiseAbs2().transpose();
    if (keep_amplitudes) traj.amplitudes.row(k) = amp.transpose();
  }
  return traj;
}

PhaseSymmetryReport phase_symmetry_check(const DriveConfig& c,
                                         const StateVector& psi0,
                                         const TimeGrid& grid,
                                         const Basis& basis,
                                         double threshold) {
  PhaseSymmetryReport rep;
  rep.threshold = threshold;
  rep.plus = evolve(build(c), psi0, grid, basis);

  // Phi -> -Phi conjugates H; the -Phi case's own states are the conjugates
  // of the +Phi ones, so the initial state and the measurement basis are
  // conjugated alongside the drive.
  StateVector psi0m{psi0.amps.conjugate(), psi0.basis_tag};
  rep.minus = evolve(build(conjugate_phase(c)), psi0m, grid, conjugate(basis));

  const RealMatrix diff =
      (rep.plus.populations - rep.minus.populations).cwiseAbs();
  rep.per_state_deviation = diff.colwise().maxCoeff().transpose();
  rep.max_pop_deviation = rep.per_state_deviation.maxCoeff();
  rep.symmetric = rep.max_pop_deviation <= threshold;
  return rep;
}

FidelitySeries fidelity_series(const DriveConfig& c, const StateVector& psi0,
                               const TimeGrid& grid) {
  validate(grid);
  const SpectralDecomposition sp = eig_hermitian(build(c));
  const SpectralDecomposition sm = eig_hermitian(build(conjugate_phase(c)));
  const Vector cp = sp.eigenvectors.adjoint() * psi0.amps;
  const Vector cm = sm.eigenvectors.adjoint() * psi0.amps;

  FidelitySeries out;
  out.grid = grid;
  out.values.resize(grid.n_points);
  for (int k = 0; k < grid.n_points; ++k) {
    const double t = grid.t(k);
    const Vector pp =
        (Complex(0, -1) * t * sp.eigenvalues.cast<Complex>()).array().exp();
    const Vector pm =
        (Complex(0, -1) * t * sm.eigenvalues.cast<Complex>()).array().exp();
    const Vector psip = sp.eigenvectors * pp.cwiseProduct(cp);
    const Vector psim = sm.eigenvectors * pm.cwiseProduct(cm);
    out.values(k) = std::norm(psim.dot(psip));
  }
  return out;
}

double fidelity_at(const DriveConfig& c, const StateVector& psi0, double t) {
  const Vector psip = propagator(build(c), t) * psi0.amps;
  const Vector psim = propagator(build(conjugate_phase(c)), t) * psi0.amps;
  return std::norm(psim.dot(psip));
}

std::vector<Complex> coherence_series(const DriveConfig& c,
                                      const StateVector& psi0,
                                      const TimeGrid& grid,
                                      const StateVector& bra,
                                      const StateVector& ket) {
  validate(grid);
  const SpectralDecomposition spec = eig_hermitian(build(c));
  const Vector coeffs = spec.eigenvectors.adjoint() * psi0.amps;
  std::vector<Complex> out(static_cast<size_t>(grid.n_points));
  for (int k = 0; k < grid.n_points; ++k) {
    const double t = grid.t(k);
    const Vector phases =
        (Complex(0, -1) * t * spec.eigenvalues.cast<Complex>()).array().exp();
    const Vector psi = spec.eigenvectors * phases.cwiseProduct(coeffs);
    const Complex a = bra.amps.dot(psi);  // <bra|psi>
    const Complex b = psi.dot(ket.amps);  // <psi|ket>
    // <bra|rho|ket> + <ket|rho|bra> = a*b + conj(a*b)
    out[static_cast<size_t>(k)] = a * b + std::conj(a * b);
  }
  return out;
}

CheckerboardClass checkerboard_class(const Matrix& m, double tol) {
  if (tol <= 0) tol = 1e-12 * (1 + m.cwiseAbs().maxCoeff());
  bool odd_ok = true;   // entries on even (i+j) sites vanish
  bool even_ok = true;  // entries on odd (i+j) sites vanish
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) <= tol) continue;
      if ((i + j) % 2 == 0) {
        odd_ok = false;
      } else {
        even_ok = false;
      }
    }
  }
  if (even_ok) return CheckerboardClass::even;
  if (odd_ok) return CheckerboardClass::odd;
  return CheckerboardClass::neither;
}

Matrix parity_matrix(Eigen::Index dim) {
  Matrix j = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    j(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
  }
  return j;
}

bool eigenvalue_pairing_check(const HermitianOperator& h, double tol) {
  const SpectralDecomposition spec = eig_hermitian(h);
  const double rho = spec.eigenvalues.cwiseAbs().maxCoeff();
  if (tol <= 0) tol = 1e-10 * (1 + rho);
  const Eigen::Index n = spec.eigenvalues.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(spec.eigenvalues(i) + spec.eigenvalues(n - 1 - i)) > tol) {
      return false;
    }
  }
  if (checkerboard_class(h.mat) == CheckerboardClass::odd) {
    const Matrix j = parity_matrix(n);
    if ((h.mat * j + j * h.mat).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

StateVector analytic_deltazero_state(const DiamondDrive& d, double t) {
  if (d.delta_1 != 0 || d.delta_3 != 0 || d.delta_4 != 0) {
    throw std::invalid_argument(
        "analytic delta-zero evolution requires all detunings zero");
  }
  const HermitianOperator h = build_diamond(d);
  const SpectralDecomposition spec = eig_hermitian(h);
  const double rho = spec.eigenvalues.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (std::abs(spec.eigenvalues(i)) < 1e-9 * (1 + rho)) {
      throw std::invalid_argument(
          "analytic delta-zero evolution needs a gapped paired spectrum");
    }
  }
  if (std::abs(spec.eigenvectors(2, 3)) < 1e-12) {
    throw std::invalid_argument(
        "analytic delta-zero evolution undefined: vanishing |3> component");
  }
  // |1> = sum_k <v_k|1> v_k with the negative-eigenvalue partners J v_k
  // carrying the same weight, so only the positive half is summed.
  const Matrix j = parity_matrix(4);
  Vector psi = Vector::Zero(4);
  for (Eigen::Index k = 2; k < 4; ++k) {  // ascending order: positive pair
    const Complex w = std::conj(spec.eigenvectors(0, k));
    const Complex em = std::exp(Complex(0, -spec.eigenvalues(k) * t));
    const Complex ep = std::exp(Complex(0, spec.eigenvalues(k) * t));
    psi += w * (em * spec.eigenvectors.col(k) +
                ep * (j * spec.eigenvectors.col(k)));
  }
  return StateVector{std::move(psi), "natural"};
}

bool diagonal_time_symmetry_check(const HermitianOperator& h,
                                  const RealVector& rho0_diag,
                                  const TimeGrid& grid) {
  if (checkerboard_class(h.mat) != CheckerboardClass::odd) {
    throw std::invalid_argument(
        "diagonal time symmetry needs an odd-checkerboard Hamiltonian");
  }
  if (rho0_diag.size() != h.dim() || rho0_diag.minCoeff() < 0 ||
      std::abs(rho0_diag.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "rho0 diagonal must be nonnegative with unit trace");
  }
  validate(grid);
  const SpectralDecomposition spec = eig_hermitian(h);
  const Matrix rho0 = Matrix(rho0_diag.cast<Complex>().asDiagonal());
  for (int k = 0; k < grid.n_points; ++k) {
    const double t = grid.t(k);
    const Matrix up = propagator(spec, t);
    const Matrix um = propagator(spec, -t);
    const RealVector fwd =
        (up * rho0 * up.adjoint()).diagonal().real();
    const RealVector bwd =
        (um * rho0 * um.adjoint()).diagonal().real();
    if ((fwd - bwd).cwiseAbs().maxCoeff() > 1e-10) return false;
  }
  return true;
}

}  // namespace qloop
