#include "exflat/subsets.hpp"

#include <stdexcept>

namespace exflat {

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::int64_t binomial_i64(int n, int k) {
    Int b = binomial(n, k);
    if (!b.fits_slong_p()) throw std::overflow_error("binomial overflows int64");
    return b.get_si();
}

std::vector<std::vector<int>> subsets_colex(int m, int j) {
    if (j < 0 || j > m) throw std::invalid_argument("subset size out of range");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(j);
    // Colex: recurse on the largest element.
    auto rec = [&](auto&& self, int size, int top) -> void {
        if (size == 0) {
            out.emplace_back(cur.begin(), cur.begin() + j);
            return;
        }
        for (int t = size; t <= top; ++t) {
            cur[size - 1] = t;
            self(self, size - 1, t - 1);
        }
    };
    if (j == 0)
        out.push_back({});
    else
        rec(rec, j, m);
    return out;
}

std::int64_t colex_rank(const std::vector<int>& subset) {
    std::int64_t r = 0;
    for (std::size_t t = 0; t < subset.size(); ++t)
        r += binomial_i64(subset[t] - 1, static_cast<int>(t) + 1);
    return r;
}

SubsetBasis subset_basis(int m, int j) { return SubsetBasis{m, j, subsets_colex(m, j)}; }

}  // namespace exflat
