#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace qloop {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Normalized complex amplitude vector in a declared basis.
struct StateVector {
  Vector amps;
  std::string basis_tag = "natural";

  Eigen::Index dim() const { return amps.size(); }
};

/// Normalizes `a` and tags it. Throws std::invalid_argument on a (near-)zero
/// vector.
StateVector make_state(Vector a, std::string basis_tag = "natural");

/// Natural basis ket |i> (1-based index, matching the state labels).
StateVector natural_ket(Eigen::Index dim, int i);

/// Dense Hermitian matrix in angular-frequency units (hbar = 1).
struct HermitianOperator {
  Matrix mat;

  Eigen::Index dim() const { return mat.rows(); }
};

/// Wraps `m` after checking the Hermiticity residual max|M - M^dagger|
/// against 1e-12 * (1 + max|M|). Throws std::invalid_argument otherwise.
HermitianOperator make_hermitian(Matrix m);

double hermiticity_residual(const Matrix& m);

/// Ordered orthonormal set, columns of `vecs`, with one label per column.
struct Basis {
  Matrix vecs;
  std::vector<std::string> labels;

  Eigen::Index dim() const { return vecs.rows(); }
  Eigen::Index size() const { return vecs.cols(); }
  Vector vec(Eigen::Index j) const { return vecs.col(j); }
};

/// Validates orthonormality (Gram residual < 1e-10); throws otherwise.
Basis make_basis(Matrix vecs, std::vector<std::string> labels);
Basis make_basis(const std::vector<StateVector>& states,
                 std::vector<std::string> labels);

/// Identity basis with labels "1".."n".
Basis natural_basis(Eigen::Index dim);

/// Entrywise complex conjugate of every basis vector.
Basis conjugate(const Basis& b);

}  // namespace qloop
