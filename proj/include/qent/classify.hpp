#pragma once

// Perfect-entangler decision via the convex hull of the eigenvalues of m(U),
// three-way gate classification, and the product-basis max-min concurrence
// search.

#include <array>
#include <cstdint>
#include <span>

#include "qent/gates.hpp"
#include "qent/states.hpp"

namespace qent {

enum class GateClass { Local, PerfectEntangler, NonPerfectNonLocal };
const char* to_string(GateClass c);

// Euclidean distance from the origin to the convex hull of 1..4 points in
// the complex plane. Exact small-case geometry: vertices, edges, and triangle
// containment.
double hull_origin_distance(std::span<const Complex> points);
bool hull_contains_zero(std::span<const Complex> points, double tol);

// True iff the hull of the eigenvalues of m(U) contains zero (within tol).
bool is_perfect_entangler(const Gate& u, double tol = 1e-9);

// Local iff the invariants match the identity's pair (1, 3) within tol.
GateClass classify(const Gate& u, double tol = 1e-9);

// Orthonormal product basis from six real parameters: with
// a = cos(t1/2), b = sin(t1/2) e^{i p1} (and likewise (c, d) from (t2, p2),
// (e, f) from (t3, p3)), the four states are
//   psi1 = (a, b) (x) (c, d)         psi2 = (b*, -a*) (x) (c, d)
//   psi3 = (e, f) (x) (d*, -c*)      psi4 = (f*, -e*) (x) (d*, -c*).
// Orthonormal for every parameter value.
struct ProductBasis {
  double theta1 = 0.0, phi1 = 0.0;
  double theta2 = 0.0, phi2 = 0.0;
  double theta3 = 0.0, phi3 = 0.0;
  std::array<std::array<Complex, 4>, 4> amplitudes() const;
  std::array<PureState, 4> states() const;
};

// Min over the four basis states of the concurrence of (u applied to it).
double basis_images_min_concurrence(const Gate& u, const ProductBasis& b);

struct BasisSearchResult {
  double value;
  ProductBasis basis;
};

// Maximize basis_images_min_concurrence by seeded Nelder-Mead restarts.
// Deterministic for fixed (restarts, seed); ties resolve to the lowest
// restart index.
BasisSearchResult max_min_basis_search(const Gate& u, int restarts,
                                       std::uint64_t seed);

// | |ad-bc|^2 + |a* c + b* d|^2 - 1 | for normalized pairs (a,b), (c,d);
// vanishes identically, which is what blocks sqrt(SWAP) from maximally
// entangling a full product basis.
double sqrt_swap_identity_residual(Complex a, Complex b, Complex c, Complex d);

}  // namespace qent
