#include "qent/braid.hpp"

#include <cmath>
#include <string>

namespace qent {

namespace {

constexpr long kMaxRepDim = 1024;

// d such that d*d == dim, or a descriptive error.
int square_side(int dim, const char* what) {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim))));
  if (d < 1 || d * d != dim) {
    throw std::invalid_argument(std::string(what) + ": dimension " +
                                std::to_string(dim) +
                                " is not a perfect square");
  }
  return d;
}

}  // namespace

SquareMatrix generator_rep(int i, int n, const SquareMatrix& r) {
  const int d = square_side(r.dim(), "generator_rep");
  if (n < 2) throw std::invalid_argument("generator_rep: need n >= 2 strands");
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("generator_rep: generator index " +
                                std::to_string(i) + " outside [1, " +
                                std::to_string(n - 1) + "]");
  }
  long total = 1;
  for (int k = 0; k < n; ++k) {
    total *= d;
    if (total > kMaxRepDim) {
      throw std::invalid_argument(
          "generator_rep: representation dimension exceeds " +
          std::to_string(kMaxRepDim) + " (n too large)");
    }
  }
  if (!is_unitary(r, 1e-10))
    throw std::invalid_argument("generator_rep: r not unitary within 1e-10");

  long left = 1, right = 1;
  for (int k = 0; k < i - 1; ++k) left *= d;
  for (int k = 0; k < n - i - 1; ++k) right *= d;
  SquareMatrix out = kron(SquareMatrix::identity(static_cast<int>(left)), r);
  if (right > 1)
    out = kron(out, SquareMatrix::identity(static_cast<int>(right)));
  return out;
}

SquareMatrix word_rep(const BraidWord& w, const SquareMatrix& r) {
  const int d = square_side(r.dim(), "word_rep");
  long total = 1;
  for (int k = 0; k < w.strands; ++k) total *= d;
  SquareMatrix acc = SquareMatrix::identity(static_cast<int>(total));
  for (int letter : w.letters) {
    const int i = std::abs(letter);
    if (letter == 0 || i > w.strands - 1) {
      throw std::invalid_argument("word_rep: letter " + std::to_string(letter) +
                                  " invalid on " + std::to_string(w.strands) +
                                  " strands");
    }
    SquareMatrix g = generator_rep(i, w.strands, r);
    if (letter < 0) g = dagger(g);  // unitary r: inverse = adjoint
    acc = acc * g;
  }
  return acc;
}

RelationCheck check_braid_relation(const SquareMatrix& r, double tol) {
  const int d = square_side(r.dim(), "check_braid_relation");
  if (d > 4)
    throw std::invalid_argument("check_braid_relation: d capped at 4");
  const SquareMatrix id = SquareMatrix::identity(d);
  const SquareMatrix a = kron(r, id);  // acts on factors 1,2
  const SquareMatrix b = kron(id, r);  // acts on factors 2,3
  const double residual = max_abs_diff(a * b * a, b * a * b);
  return {residual <= tol, residual};
}

RelationCheck check_yang_baxter(const SquareMatrix& rhat, double tol) {
  const int d = square_side(rhat.dim(), "check_yang_baxter");
  if (d > 4)
    throw std::invalid_argument("check_yang_baxter: d capped at 4");
  const SquareMatrix id = SquareMatrix::identity(d);
  const SquareMatrix r12 = kron(rhat, id);
  const SquareMatrix r23 = kron(id, rhat);
  const SquareMatrix s23 = kron(id, swap_matrix(d));
  const SquareMatrix r13 = s23 * r12 * s23;
  const double residual = max_abs_diff(r12 * r13 * r23, r23 * r13 * r12);
  return {residual <= tol, residual};
}

SquareMatrix swap_matrix(int d) {
  if (d < 1) throw std::invalid_argument("swap_matrix: d must be >= 1");
  SquareMatrix p(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p.at(i * d + j, j * d + i) = Complex(1.0, 0.0);
  return p;
}

SquareMatrix to_braid_operator(const SquareMatrix& rhat) {
  const int d = square_side(rhat.dim(), "to_braid_operator");
  return swap_matrix(d) * rhat;
}

SquareMatrix generalized_rprime(const SquareMatrix& m) {
  const int d = m.dim();
  if (d > 4) throw std::invalid_argument("generalized_rprime: d capped at 4");
  SquareMatrix out(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Complex phase = m.at(i, j);
      if (std::abs(std::abs(phase) - 1.0) > 1e-10) {
        throw std::invalid_argument(
            "generalized_rprime: entry (" + std::to_string(i) + ", " +
            std::to_string(j) + ") must have unit modulus");
      }
      out.at(i * d + j, j * d + i) = phase;
    }
  return out;
}

}  // namespace qent
