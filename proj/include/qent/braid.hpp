#pragma once

// Braid words, braid-group representations built from a d^2 x d^2 operator,
// the braid and Yang-Baxter relations and the R = P*Rhat correspondence.
//
// Word composition: letters are read left to right and multiply onto the
// accumulated product from the right, so word {1, 2} represents the braid
// sigma_1 sigma_2 (sigma_2 stacked on top of sigma_1) and maps to
// rep(sigma_1) * rep(sigma_2). Its inverse is the word {-2, -1}:
// word_rep({1, 2}) * word_rep({-2, -1}) = identity.

#include <vector>

#include "qent/linalg.hpp"

namespace qent {

struct BraidWord {
  int strands;               // n >= 2
  std::vector<int> letters;  // signed generator indices, |letter| in [1, n-1]
};

struct RelationCheck {
  bool ok;
  double residual;  // max-norm of (lhs - rhs)
};

// sigma_i as I^(i-1) (x) r (x) I^(n-i-1) on n strands; r acts on two adjacent
// d-dimensional factors (r.dim == d^2). Capped at d^n <= 1024.
SquareMatrix generator_rep(int i, int n, const SquareMatrix& r);

SquareMatrix word_rep(const BraidWord& w, const SquareMatrix& r);

// (r (x) I)(I (x) r)(r (x) I) == (I (x) r)(r (x) I)(I (x) r), d <= 4.
RelationCheck check_braid_relation(const SquareMatrix& r, double tol);

// Rhat_12 Rhat_13 Rhat_23 == Rhat_23 Rhat_13 Rhat_12 on V (x) V (x) V, with
// Rhat_13 built by conjugating Rhat_12 with the (2,3) swap.
RelationCheck check_yang_baxter(const SquareMatrix& rhat, double tol);

// The d-dimensional SWAP, P|i,j> = |j,i>.
SquareMatrix swap_matrix(int d);

// R = P * rhat: any Yang-Baxter solution becomes a braid operator.
SquareMatrix to_braid_operator(const SquareMatrix& rhat);

// The d-dimensional diagonal-phase family R'_{ij,kl} = M_ij delta_il delta_jk
// with |M_ij| = 1; satisfies the braid relation for every such M.
SquareMatrix generalized_rprime(const SquareMatrix& m);

}  // namespace qent
