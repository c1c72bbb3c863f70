#pragma once

#include "qloop/drive_model.hpp"
#include "qloop/operator_core.hpp"
#include "qloop/types.hpp"

namespace qloop {

struct Trajectory {
  TimeGrid grid;
  std::vector<std::string> basis_labels;
  RealMatrix populations;  // n_points x basis size
  Matrix amplitudes;       // n_points x basis size, kept on request
  bool has_amplitudes = false;
};

Trajectory evolve(const HermitianOperator& h, const StateVector& psi0,
                  const TimeGrid& grid, const Basis& basis,
                  bool keep_amplitudes = false);

/// Population comparison between the +Phi and -Phi drives. Phase inversion
/// conjugates the Hamiltonian, so the -Phi leg is measured against the
/// conjugated initial state and basis vectors (the -Phi case's own states);
/// for real inputs this is a no-op.
struct PhaseSymmetryReport {
  double max_pop_deviation = 0;
  bool symmetric = false;
  RealVector per_state_deviation;
  double threshold = 0;
  Trajectory plus;
  Trajectory minus;
};

PhaseSymmetryReport phase_symmetry_check(const DriveConfig& c,
                                         const StateVector& psi0,
                                         const TimeGrid& grid,
                                         const Basis& basis,
                                         double threshold = 1e-9);

struct FidelitySeries {
  TimeGrid grid;
  RealVector values;
};

/// F(t) = |<psi^{-Phi}(t)|psi^{+Phi}(t)>|^2 from the identical initial state.
FidelitySeries fidelity_series(const DriveConfig& c, const StateVector& psi0,
                               const TimeGrid& grid);
double fidelity_at(const DriveConfig& c, const StateVector& psi0, double t);

/// Symmetric (sigma_x-type) coherence <bra|rho(t)|ket> + <ket|rho(t)|bra>
/// for rho(t) = |psi(t)><psi(t)| under build(c).
std::vector<Complex> coherence_series(const DriveConfig& c,
                                      const StateVector& psi0,
                                      const TimeGrid& grid,
                                      const StateVector& bra,
                                      const StateVector& ket);

enum class CheckerboardClass { odd, even, neither };

/// odd: entries with even index sum (1-based) vanish; even: entries with odd
/// index sum vanish. A zero matrix reports even.
CheckerboardClass checkerboard_class(const Matrix& m, double tol = 0);

/// Parity matrix J_ij = delta_ij (-1)^{j+1}; anticommutes with every
/// odd-checkerboard matrix.
Matrix parity_matrix(Eigen::Index dim);

/// True iff the sorted spectrum pairs as lambda_i = -lambda_{n+1-i} within
/// tol (default 1e-10 * (1 + spectral radius)). For odd-checkerboard H the
/// J-anticommutation HJ = -JH is verified as well.
bool eigenvalue_pairing_check(const HermitianOperator& h, double tol = 0);

/// Closed-form evolution of |1> under an all-resonant diamond drive, built
/// from the opposite-eigenvalue pairing: cosines on |1>,|3>, imaginary sine
/// combinations on |2>,|4>. Throws on nonzero detunings, on a (near-)zero
/// eigenvalue, or when the |3> component of the second positive eigenvector
/// vanishes (undefined mixing ratio).
StateVector analytic_deltazero_state(const DiamondDrive& d, double t);

/// diag(rho(t)) == diag(rho(-t)) within 1e-10 at every grid point, for
/// rho(t) = U(t) rho0 U(t)^dagger. Requires an odd-checkerboard H (the
/// theorem's hypothesis) and a real nonnegative diagonal rho0 of unit trace.
bool diagonal_time_symmetry_check(const HermitianOperator& h,
                                  const RealVector& rho0_diag,
                                  const TimeGrid& grid);

}  // namespace qloop
