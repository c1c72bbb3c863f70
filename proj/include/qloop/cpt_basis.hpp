#pragma once

#include "qloop/drive_model.hpp"
#include "qloop/types.hpp"

namespace qloop {

/// Bright/dark CPT pair of a Lambda branch:
///   |B> = (O12|1> + O23|3>)/O_cpt,  |D> = (O23|1> - O12|3>)/O_cpt.
/// The paper's signs are kept verbatim; no canonical gauge here.
struct CptBasis3 {
  StateVector bright;
  StateVector excited;  // |2>
  StateVector dark;
  double omega_cpt = 0;

  /// (|B>, |2>, |D>) ordering.
  Basis as_basis() const;
};

CptBasis3 cpt_states(double omega_12, double omega_23);

/// Triangle Hamiltonian rewritten in the (|B>, |2>, |D>) basis; requires
/// delta_1 == delta_3. The (2, D) entry vanishes, leaving an open V chain.
HermitianOperator to_cpt_hamiltonian_3(const TriangleDrive& d);

/// Diamond Hamiltonian in the (|B>^u, |2>, |D>^u, |4>) basis; requires
/// delta_1 == delta_3. Entries (B,D), (2,D), (2,4) vanish (open loop).
HermitianOperator to_cpt_hamiltonian_4(const DiamondDrive& d);

/// (|B>, |2>, |D>, |4>) measurement basis of a diamond drive, the CPT pair
/// built from omega_12 and omega_23.
Basis cpt_basis_4(const DiamondDrive& d);

/// Double-Lambda bright state plus the two dark states; dark2 is the
/// delta-dependent superposition with normalization theta.
struct DoubleDarkBasis {
  StateVector bright;
  StateVector dark1;
  StateVector dark2;
  double theta = 0;
};

DoubleDarkBasis double_dark_basis(const DoubleLambdaAltDrive& d);

/// True iff the coupling graph (edges where |H_ij| > tol, i != j) is acyclic.
/// Pass tol <= 0 for the default 1e-10 * (1 + max offdiagonal magnitude).
bool coupling_graph_is_open(const HermitianOperator& h, double tol = 0);

}  // namespace qloop
