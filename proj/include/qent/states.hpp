#pragma once

// n-qubit pure states, two-qubit entanglement measures, reduced density
// matrices and single-qubit measurement.
//
// Qubit ordering: qubit 1 is the leftmost tensor factor, i.e. the most
// significant bit of the computational-basis index, so |q1 q2 q3> lives at
// amplitude index 4*q1 + 2*q2 + q3.

#include <array>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qent/linalg.hpp"

namespace qent {

class PureState {
 public:
  // Validates 2^n amplitudes with norm within 1e-6 of 1, then renormalizes
  // exactly. Stored amplitudes keep their global phase.
  PureState(int qubits, std::vector<Complex> amplitudes);

  int qubits() const noexcept { return qubits_; }
  int dim() const noexcept { return static_cast<int>(amps_.size()); }
  const Complex& amp(int index) const { return amps_.at(index); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

 private:
  int qubits_;
  std::vector<Complex> amps_;
};

// 2x2 density matrix: Hermitian, unit trace, nonnegative spectrum
// (all within 1e-10; validated on construction).
class DensityMatrix2 {
 public:
  explicit DensityMatrix2(SquareMatrix m);
  const SquareMatrix& matrix() const noexcept { return m_; }
  // Eigenvalues in descending order, clamped to [0, 1].
  std::pair<double, double> eigenvalues() const;

 private:
  SquareMatrix m_;
};

enum class Subsystem { A, B };  // A = qubit 1 (leftmost), B = qubit 2

struct MeasurementRecord {
  int outcome;          // index into the measurement basis (0 or 1)
  double probability;   // Born-rule probability
  PureState residual;   // post-measurement state of the remaining qubits;
                        // meaningful only when possible
  bool possible;        // false when probability < 1e-12
};

// Orthonormal single-qubit measurement basis.
struct QubitBasis {
  std::array<Complex, 2> b0;
  std::array<Complex, 2> b1;
};

QubitBasis computational_basis();
QubitBasis x_basis();  // {|x+>, |x->}

PureState make_state(int qubits, std::vector<Complex> amplitudes);

// Named states: ghz, w, phi, bell (param k in 0..3), xplus, xminus,
// basis (params n, k).
PureState catalog_state(std::string_view name,
                        std::span<const double> params = {});
std::vector<std::string> catalog_state_names();

// Concurrence 2|a0 a3 - a1 a2| of a normalized two-qubit amplitude vector.
double concurrence_amps(std::span<const Complex> amps);
double concurrence(const PureState& s);

// Same value through the independent |<Psi*|sigma_y(x)sigma_y|Psi>| route;
// kept separate for cross-validation.
double concurrence_sigma_y(const PureState& s);

DensityMatrix2 reduced_density(const PureState& s, Subsystem keep);

double linear_entropy(const DensityMatrix2& rho);       // 1 - tr(rho^2)
double von_neumann_entropy(const DensityMatrix2& rho);  // -tr(rho ln rho), max ln 2

// Reduced-density eigenvalues (1 +- sqrt(1 - c^2)) / 2 of a two-qubit pure
// state with concurrence c.
std::pair<double, double> schmidt_lambdas(double c);

// Apply a 4x4 unitary to qubits (qubit_a, qubit_b) of s, qubit_a feeding the
// gate's first tensor slot. Qubits are 1-indexed from the left.
PureState apply_gate(const PureState& s, const SquareMatrix& gate4,
                     int qubit_a, int qubit_b);
// Apply a 2x2 unitary to one qubit.
PureState apply_gate(const PureState& s, const SquareMatrix& gate2, int qubit);

// Measure one qubit in an orthonormal basis; returns both outcome records.
std::array<MeasurementRecord, 2> measure_qubit(const PureState& s, int qubit,
                                               const QubitBasis& basis);

Complex inner_product(const PureState& a, const PureState& b);  // <a|b>
double fidelity(const PureState& a, const PureState& b);        // |<a|b>|
PureState tensor(const PureState& a, const PureState& b);

}  // namespace qent
