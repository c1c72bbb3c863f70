#include "qloop/operator_core.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>
#include <stdexcept>

namespace qloop {

StateVector make_state(Vector a, std::string basis_tag) {
  const double norm = a.norm();
  if (!(norm > 1e-12)) {
    throw std::invalid_argument("state vector has (near-)zero norm");
  }
  return StateVector{a / norm, std::move(basis_tag)};
}

StateVector natural_ket(Eigen::Index dim, int i) {
  if (i < 1 || i > dim) {
    std::ostringstream os;
    os << "natural ket index " << i << " out of range 1.." << dim;
    throw std::invalid_argument(os.str());
  }
  Vector v = Vector::Zero(dim);
  v(i - 1) = 1.0;
  return StateVector{std::move(v), "natural"};
}

double hermiticity_residual(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator make_hermitian(Matrix m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("Hermitian operator must be square");
  }
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  const double res = hermiticity_residual(m);
  if (res > 1e-12 * scale) {
    std::ostringstream os;
    os << "matrix is not Hermitian: residual " << res;
    throw std::invalid_argument(os.str());
  }
  return HermitianOperator{std::move(m)};
}

Basis make_basis(Matrix vecs, std::vector<std::string> labels) {
  if (labels.size() != static_cast<size_t>(vecs.cols())) {
    throw std::invalid_argument("basis label count does not match vectors");
  }
  const Matrix gram = vecs.adjoint() * vecs;
  const double res =
      (gram - Matrix::Identity(vecs.cols(), vecs.cols())).cwiseAbs().maxCoeff();
  if (res > 1e-10) {
    std::ostringstream os;
    os << "basis is not orthonormal: Gram residual " << res;
    throw std::invalid_argument(os.str());
  }
  return Basis{std::move(vecs), std::move(labels)};
}

Basis make_basis(const std::vector<StateVector>& states,
                 std::vector<std::string> labels) {
  if (states.empty()) throw std::invalid_argument("empty basis");
  Matrix vecs(states.front().dim(), static_cast<Eigen::Index>(states.size()));
  for (size_t j = 0; j < states.size(); ++j) {
    if (states[j].dim() != vecs.rows()) {
      throw std::invalid_argument("basis vectors have mismatched dimensions");
    }
    vecs.col(static_cast<Eigen::Index>(j)) = states[j].amps;
  }
  return make_basis(std::move(vecs), std::move(labels));
}

Basis natural_basis(Eigen::Index dim) {
  std::vector<std::string> labels;
  for (Eigen::Index i = 1; i <= dim; ++i) labels.push_back(std::to_string(i));
  return Basis{Matrix::Identity(dim, dim), std::move(labels)};
}

Basis conjugate(const Basis& b) {
  return Basis{b.vecs.conjugate(), b.labels};
}

Vector canonical_gauge(Vector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-9) {
      v *= std::conj(v(i)) / mag;
      // clean the pivot's residual imaginary part
      v(i) = Complex(std::abs(v(i)), 0.0);
      break;
    }
  }
  return v;
}

SpectralDecomposition eig_hermitian(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.mat);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigensolver failed to converge");
  }
  RealVector lambda = solver.eigenvalues();
  Matrix vecs = solver.eigenvectors();

  // Re-orthonormalize degenerate clusters (modified Gram-Schmidt) and fix a
  // canonical gauge per vector.
  const double scale = 1.0 + lambda.cwiseAbs().maxCoeff();
  const double degtol = 1e-9 * scale;
  Eigen::Index start = 0;
  while (start < lambda.size()) {
    Eigen::Index end = start + 1;
    while (end < lambda.size() && lambda(end) - lambda(end - 1) < degtol) {
      ++end;
    }
    for (Eigen::Index j = start; j < end; ++j) {
      for (Eigen::Index k = start; k < j; ++k) {
        vecs.col(j) -= vecs.col(k) * (vecs.col(k).dot(vecs.col(j)));
      }
      vecs.col(j).normalize();
    }
    start = end;
  }
  for (Eigen::Index j = 0; j < vecs.cols(); ++j) {
    vecs.col(j) = canonical_gauge(vecs.col(j));
  }
  return SpectralDecomposition{std::move(lambda), std::move(vecs)};
}

Matrix propagator(const SpectralDecomposition& spec, double t) {
  const Vector phases =
      (Complex(0, -1) * t * spec.eigenvalues.cast<Complex>()).array().exp();
  return spec.eigenvectors * phases.asDiagonal() * spec.eigenvectors.adjoint();
}

Matrix propagator(const HermitianOperator& h, double t) {
  return propagator(eig_hermitian(h), t);
}

HermitianOperator change_basis(const HermitianOperator& h,
                               const Basis& basis) {
  if (basis.dim() != h.dim() || basis.size() != h.dim()) {
    throw std::invalid_argument(
        "change_basis requires a complete basis of the operator's dimension");
  }
  Matrix out = basis.vecs.adjoint() * h.mat * basis.vecs;
  // Hermitian up to rounding by construction; symmetrize the rounding away.
  out = 0.5 * (out + Matrix(out.adjoint()));
  return HermitianOperator{std::move(out)};
}

RealVector populations(const StateVector& psi, const Basis& basis) {
  if (basis.dim() != psi.dim()) {
    throw std::invalid_argument("populations: dimension mismatch");
  }
  return (basis.vecs.adjoint() * psi.amps).cwiseAbs2();
}

Complex matrix_element(const StateVector& bra, const Matrix& op,
                       const StateVector& ket) {
  if (op.rows() != bra.dim() || op.cols() != ket.dim()) {
    throw std::invalid_argument("matrix_element: dimension mismatch");
  }
  return bra.amps.dot(op * ket.amps);
}

}  // namespace qloop
