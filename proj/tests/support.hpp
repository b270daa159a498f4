#pragma once

// Shared helpers for the test suites: seeded random matrices, unitaries and
// states (all driven by SplitMix64 so failures reproduce exactly), plus a
// tolerant multiset comparison for eigenvalue lists.

#include <algorithm>
#include <cmath>
#include <vector>

#include "qent/linalg.hpp"
#include "qent/rng.hpp"
#include "qent/states.hpp"

namespace qent::test {

inline double gaussian(SplitMix64& rng) {
  const double u1 = 1.0 - rng.next_double();  // (0, 1]
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

inline Complex complex_gaussian(SplitMix64& rng) {
  const double re = gaussian(rng);
  const double im = gaussian(rng);
  return Complex(re, im);
}

inline SquareMatrix random_matrix(int dim, SplitMix64& rng) {
  SquareMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = complex_gaussian(rng);
  return m;
}

// Gram-Schmidt on a Ginibre matrix: Haar-like, exactly unitary to roundoff.
inline SquareMatrix random_unitary(int dim, SplitMix64& rng) {
  SquareMatrix g = random_matrix(dim, rng);
  SquareMatrix q(dim);
  for (int j = 0; j < dim; ++j) {
    std::vector<Complex> v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = g.at(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        Complex proj(0.0, 0.0);
        for (int i = 0; i < dim; ++i)
          proj += std::conj(q.at(i, k)) * v[static_cast<std::size_t>(i)];
        for (int i = 0; i < dim; ++i)
          v[static_cast<std::size_t>(i)] -= proj * q.at(i, k);
      }
    }
    double norm = 0.0;
    for (const Complex& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (int i = 0; i < dim; ++i)
      q.at(i, j) = v[static_cast<std::size_t>(i)] / norm;
  }
  return q;
}

inline PureState random_state(int qubits, SplitMix64& rng) {
  std::vector<Complex> amps(std::size_t{1} << qubits);
  double norm = 0.0;
  for (Complex& z : amps) {
    z = complex_gaussian(rng);
    norm += std::norm(z);
  }
  norm = std::sqrt(norm);
  for (Complex& z : amps) z /= norm;
  return PureState(qubits, std::move(amps));
}

// Random point on the Bloch sphere as (amp0, amp1), same parameterization as
// the entangling-power average.
inline std::pair<Complex, Complex> random_bloch(SplitMix64& rng) {
  const double u = 2.0 * rng.next_double() - 1.0;
  const double phi = 2.0 * 3.14159265358979323846 * rng.next_double();
  const double c = std::sqrt(0.5 * (1.0 + u));
  const double s = std::sqrt(0.5 * (1.0 - u));
  return {std::polar(c, -0.5 * phi), std::polar(s, 0.5 * phi)};
}

inline PureState random_product_state(SplitMix64& rng) {
  const auto [a0, a1] = random_bloch(rng);
  const auto [b0, b1] = random_bloch(rng);
  return PureState(2, {a0 * b0, a0 * b1, a1 * b0, a1 * b1});
}

// Greedy matching of two complex multisets within tol.
inline bool multiset_close(std::vector<Complex> got, std::vector<Complex> want,
                           double tol) {
  if (got.size() != want.size()) return false;
  for (const Complex& w : want) {
    std::size_t best = got.size();
    double best_d = tol;
    for (std::size_t i = 0; i < got.size(); ++i) {
      const double d = std::abs(got[i] - w);
      if (d <= best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best == got.size()) return false;
    got.erase(got.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return true;
}

}  // namespace qent::test
