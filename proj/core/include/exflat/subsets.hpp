#pragma once

#include <cstdint>
#include <vector>

#include "exflat/rational.hpp"

namespace exflat {

Int binomial(int n, int k);
std::int64_t binomial_i64(int n, int k);

// All j-element subsets of {1..m} in colexicographic order (sorted by
// largest element, then recursively); for m=3, j=2 this is {1,2},{1,3},{2,3}.
std::vector<std::vector<int>> subsets_colex(int m, int j);

// Position of a sorted 1-based subset within the colex enumeration.
std::int64_t colex_rank(const std::vector<int>& subset);

// Basis e_{i_1} ^ ... ^ e_{i_j} of the j-th exterior power of an
// m-dimensional space, in the fixed colex order.
struct SubsetBasis {
    int m = 0;
    int j = 0;
    std::vector<std::vector<int>> subsets;
};

SubsetBasis subset_basis(int m, int j);

}  // namespace exflat
