#pragma once

// The 4x4 gate catalog, the magic-basis matrix Q, m(U) = (Q^+ U Q)^T (Q^+ U Q)
// and the local invariants (G1, G2) that label bi-local equivalence classes.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qent/linalg.hpp"

namespace qent {

struct Gate {
  std::string name;
  std::vector<Complex> params;
  SquareMatrix matrix;  // 4x4 unitary
};

struct InvariantPair {
  Complex g1;
  Complex g2;
};

// Catalog names: cnot, swap, sqrt_swap, r, rprime (params a,b,c,d of unit
// modulus), rprime0, u_phi (param phi), controlled (params: 2x2 unitary,
// row-major), identity.
Gate catalog_gate(std::string_view name, std::span<const Complex> params = {});
std::vector<std::string> catalog_gate_names();

// Wraps an arbitrary matrix as a Gate after checking it is 4x4 and unitary
// within tol.
Gate gate_from_matrix(std::string name, SquareMatrix m, double tol = 1e-10);

Gate controlled_gate(const SquareMatrix& v2x2);  // control on qubit 1

SquareMatrix q_matrix();
SquareMatrix m_matrix(const Gate& u);

// G1 = tr^2[m(U)] / (16 det U), G2 = (tr^2[m(U)] - tr[m^2(U)]) / (4 det U).
InvariantPair invariants(const Gate& u);

// Closed forms, each cross-checkable against the general path above.
InvariantPair invariants_rprime_closed_form(Complex a, Complex b, Complex c,
                                            Complex d);
InvariantPair invariants_u_phi(double phi);  // (0, cos 4 phi)

// Equality of the invariant pair is the adopted local-equivalence criterion.
bool locally_equivalent(const Gate& u, const Gate& v, double tol);

// |G2 - 1 - 2 G1| for the controlled-v gate; all controlled gates satisfy
// G2 = 1 + 2 G1, so this vanishes up to roundoff.
double controlled_relation_residual(const SquareMatrix& v2x2);

// Single-qubit constants.
SquareMatrix hadamard2();
SquareMatrix pauli_x();
SquareMatrix pauli_y();
SquareMatrix pauli_z();

}  // namespace qent
