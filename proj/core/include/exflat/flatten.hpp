#pragma once

#include <utility>
#include <vector>

#include "exflat/matrix.hpp"
#include "exflat/subsets.hpp"
#include "exflat/tensor.hpp"

namespace exflat {

// Matrix of the exterior flattening psi_{j,x}: V (x) /\^j U* -> W* (x) /\^{j+1} U*.
//
// Fixed basis contract: rows are indexed by (V-index a, j-subset S) and
// columns by (W-index b, (j+1)-subset T), both subset-major with subsets in
// colex order. The entry at ((a,S),(b,T)) is zero unless T = S u {i}, in
// which case it is sign(S,i) * (A_i)_{a,b} with sign(S,i) = (-1)^#{s in S : s < i}.
struct FlatteningMatrix {
    int j = 0;
    QMatrix matrix;
    std::vector<std::pair<int, std::vector<int>>> row_labels;  // (a, S), 1-based
    std::vector<std::pair<int, std::vector<int>>> col_labels;  // (b, T), 1-based
};

// Requires 0 <= j <= m-1. For j = 0 this is the n x (k*m) row block
// (A_1 ... A_m); for j = m-1 the (n*m) x k stacked block.
FlatteningMatrix exterior_flattening(const Tensor3& x, int j);

// The 3n x 3n skew form [[0, A3, -A2], [-A3, 0, A1], [A2, -A1, 0]]; equal to
// psi_{1,x} after the fixed column-block re-indexing by Hodge complement
// with signs (+,-,+). Requires m = 3 and a symmetric tensor.
QMatrix pfaffian_form(const Tensor3& x);

}  // namespace exflat
