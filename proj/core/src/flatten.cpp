#include "exflat/flatten.hpp"

#include <algorithm>
#include <stdexcept>

namespace exflat {

namespace {

int wedge_sign(const std::vector<int>& s, int i) {
    int below = 0;
    for (int v : s) below += (v < i);
    return below % 2 == 0 ? 1 : -1;
}

}  // namespace

FlatteningMatrix exterior_flattening(const Tensor3& x, int j) {
    const int m = x.m(), n = x.n(), k = x.k();
    if (j < 0 || j > m - 1) throw std::invalid_argument("flattening index j out of range");

    const auto rows_basis = subsets_colex(m, j);
    const auto cols_basis = subsets_colex(m, j + 1);

    FlatteningMatrix f;
    f.j = j;
    f.matrix = QMatrix(n * static_cast<int>(rows_basis.size()),
                       k * static_cast<int>(cols_basis.size()));
    for (const auto& s : rows_basis)
        for (int a = 1; a <= n; ++a) f.row_labels.emplace_back(a, s);
    for (const auto& t : cols_basis)
        for (int b = 1; b <= k; ++b) f.col_labels.emplace_back(b, t);

    for (std::size_t si = 0; si < rows_basis.size(); ++si) {
        const auto& s = rows_basis[si];
        for (std::size_t ti = 0; ti < cols_basis.size(); ++ti) {
            const auto& t = cols_basis[ti];
            // T must be S plus one extra index i.
            std::vector<int> diff;
            std::set_difference(t.begin(), t.end(), s.begin(), s.end(),
                                std::back_inserter(diff));
            if (diff.size() != 1) continue;
            if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
            const int i = diff[0];
            const int sign = wedge_sign(s, i);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < k; ++b) {
                    const Rational& v = x.at(i - 1, a, b);
                    if (v == 0) continue;
                    f.matrix.at(static_cast<int>(si) * n + a, static_cast<int>(ti) * k + b) =
                        sign > 0 ? v : Rational(-v);
                }
        }
    }
    return f;
}

QMatrix pfaffian_form(const Tensor3& x) {
    if (x.m() != 3 || !x.symmetric())
        throw std::invalid_argument("pfaffian form requires m=3 partially symmetric");
    const int n = x.n();
    QMatrix w(3 * n, 3 * n);
    // Block pattern [[0, A3, -A2], [-A3, 0, A1], [A2, -A1, 0]].
    struct Placement {
        int row, col, slice, sign;
    };
    static constexpr Placement kBlocks[] = {
        {0, 1, 2, +1}, {0, 2, 1, -1}, {1, 0, 2, -1},
        {1, 2, 0, +1}, {2, 0, 1, +1}, {2, 1, 0, -1},
    };
    for (const auto& blk : kBlocks)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const Rational& v = x.at(blk.slice, a, b);
                if (v == 0) continue;
                w.at(blk.row * n + a, blk.col * n + b) = blk.sign > 0 ? v : Rational(-v);
            }
    return w;
}

}  // namespace exflat
