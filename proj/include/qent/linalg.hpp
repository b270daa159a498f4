#pragma once

// Small dense complex linear algebra for the 2-, 4- and d^2-dimensional
// matrices used throughout this project.
//
// Conventions relied on by every other module:
//   * entries are stored row-major: entry (r, c) lives at index r*dim + c;
//   * kron(a, b) follows the tensor convention |i>(x)|j> -> |i*b.dim + j>,
//     i.e. two qubits are ordered {|00>, |01>, |10>, |11>} with the first
//     factor as the most significant digit.

#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qent {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

// Thrown when an iterative routine fails to meet its residual target.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg,
                          std::vector<double> residuals = {});
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int dim);                      // zero-filled
  SquareMatrix(int dim, std::vector<Complex> entries); // validates size, finiteness
  static SquareMatrix identity(int dim);

  int dim() const noexcept { return dim_; }
  Complex& at(int r, int c) { return entries_[index(r, c)]; }
  const Complex& at(int r, int c) const { return entries_[index(r, c)]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

 private:
  std::size_t index(int r, int c) const;
  int dim_ = 0;
  std::vector<Complex> entries_;
};

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix dagger(const SquareMatrix& a);    // conjugate transpose
SquareMatrix transpose(const SquareMatrix& a); // no conjugation
SquareMatrix add(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix sub(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix scale(const SquareMatrix& a, Complex factor);
Complex trace(const SquareMatrix& a);

// Cofactor expansion at dims 1, 2 and 4; LU with partial pivoting otherwise.
// Supported up to dim 8.
Complex determinant(const SquareMatrix& a);

// The four roots of the characteristic polynomial of a 4x4 matrix.
// Coefficients come from Newton's identities on tr(A^k); roots from
// Durand-Kerner iteration with Newton polishing, and root clusters are
// replaced by their centroid (the centroid of a k-fold cluster is accurate
// to machine precision where the individual approximations are not).
// Order unspecified but deterministic. Throws NumericalError with the
// per-root residuals |det(A - lambda I)| if polishing misses its target.
std::array<Complex, 4> eigenvalues4(const SquareMatrix& a);

// true iff max-norm of (a^dagger a - I) <= tol.
bool is_unitary(const SquareMatrix& a, double tol);

double max_abs(const SquareMatrix& a);
double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b);
bool approx_equal(const SquareMatrix& a, const SquareMatrix& b,
                  double tol = kDefaultTol);

}  // namespace qent
