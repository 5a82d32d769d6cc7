#pragma once

#include <vector>

#include "exflat/matrix.hpp"

namespace exflat {

// Pivots chosen by the fixed rule "lowest row, then lowest column index":
// the recorded subsets are reproducible and every leading k-subset of pivot
// rows/columns spans a nonsingular k x k submatrix.
struct RankProfile {
    int rank = 0;
    std::vector<int> pivot_rows;  // 0-based indices into the input matrix
    std::vector<int> pivot_cols;
};

// Exact rank over Q by fraction-free (Bareiss) elimination.
int rank(const QMatrix& m);
RankProfile rank_profile(const QMatrix& m);

// Exact determinant (square input) by fraction-free elimination.
Rational determinant(const QMatrix& m);

// Pfaffian of an even-dimensional skew-symmetric matrix, sign convention
// pf([[0,1],[-1,0]]) = +1; skew-symmetric fraction-free elimination.
// Throws "not skew-symmetric" on odd dimension or M^T != -M.
Rational pfaffian(const QMatrix& m);

// rank() restricted to skew-symmetric input; asserts the result is even.
int even_rank(const QMatrix& m);

// Congruence-style elimination on a skew-symmetric matrix; `principal`
// lists original indices in the order their pivot pairs were found. The
// principal submatrix on the first 2t of them has nonzero Pfaffian.
struct SkewProfile {
    int rank = 0;
    std::vector<int> principal;
};
SkewProfile skew_rank_profile(const QMatrix& m);

// Unique exact solution X of A X = B for A with full column rank and
// col(B) inside col(A); throws if the system is inconsistent.
QMatrix solve_exact(const QMatrix& a, const QMatrix& b);

// Canonical basis of the column space: columns in reduced echelon form
// (leading 1 at strictly increasing coordinates). For a coordinate subspace
// this returns the coordinate vectors themselves.
QMatrix column_space_basis(const QMatrix& m);

}  // namespace exflat
