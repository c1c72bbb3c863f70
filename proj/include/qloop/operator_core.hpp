#pragma once

#include "qloop/types.hpp"

namespace qloop {

/// Eigenvalues sorted ascending; eigenvectors orthonormal, column i paired
/// with eigenvalue i, each in canonical gauge (first component of magnitude
/// > 1e-9 rotated real positive). Degenerate subspaces are re-orthonormalized
/// with modified Gram-Schmidt so reports are deterministic.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Eigen::Index dim() const { return eigenvalues.size(); }
};

SpectralDecomposition eig_hermitian(const HermitianOperator& h);

/// Rotates the global phase so the first component with |v_i| > 1e-9 is real
/// positive.
Vector canonical_gauge(Vector v);

/// U(t) = sum_k exp(-i lambda_k t) |v_k><v_k|.
Matrix propagator(const SpectralDecomposition& spec, double t);
Matrix propagator(const HermitianOperator& h, double t);

/// H' with entries <b_i|H|b_j>. The basis must be complete (n vectors of
/// dimension n).
HermitianOperator change_basis(const HermitianOperator& h, const Basis& basis);

/// p_i = |<b_i|psi>|^2.
RealVector populations(const StateVector& psi, const Basis& basis);

Complex matrix_element(const StateVector& bra, const Matrix& op,
                       const StateVector& ket);

}  // namespace qloop
