#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// cofactor determinants vs Bareiss, plain Gaussian rank vs fraction-free
// rank, tableau enumeration vs the Weyl formula, tabloid characters vs
// Murnaghan-Nakayama.

#include <vector>

#include "exflat/matrix.hpp"
#include "exflat/prng.hpp"
#include "exflat/rep.hpp"

namespace oracles {

using exflat::QMatrix;
using exflat::Rational;

inline QMatrix mat(const std::vector<std::vector<long>>& rows) {
    QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

inline QMatrix random_int_matrix(int rows, int cols, exflat::SplitMix64& rng) {
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.digit();
    return m;
}

inline QMatrix random_skew_matrix(int n, exflat::SplitMix64& rng) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int v = rng.digit();
            m.at(i, j) = v;
            m.at(j, i) = -v;
        }
    return m;
}

// Laplace cofactor expansion along the first row.
inline Rational laplace_det(const QMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Rational total = 0;
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c) == 0) continue;
        QMatrix sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c) continue;
                sub.at(i - 1, jj++) = m.at(i, j);
            }
        }
        Rational term = m.at(0, c) * laplace_det(sub);
        total += (c % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

// Plain rational Gaussian elimination, no fraction-free machinery.
inline int gauss_rank(QMatrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (m.at(r, c) == 0) continue;
            Rational f = m.at(r, c) / m.at(rank, c);
            for (int j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Number of semistandard Young tableaux of shape lam with entries in 1..n,
// by direct backtracking; equals dim S_lam(C^n).
inline long ssyt_count(const exflat::Partition& lam, int n) {
    const int rows = lam.length();
    if (rows == 0) return 1;
    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r) t[r].assign(lam.part(r), 0);
    long count = 0;
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= lam.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        const int lo = std::max(c > 0 ? t[r][c - 1] : 1, r > 0 && c < lam.part(r - 1)
                                                             ? t[r - 1][c] + 1
                                                             : 1);
        for (int v = lo; v <= n; ++v) {
            t[r][c] = v;
            self(self, nr, nc);
        }
    };
    rec(rec, 0, 0);
    return count;
}

// Character of S_3 on tabloids of shape (2,1) minus the trivial character:
// the (2,1) irreducible, computed from honest permutation matrices.
inline long tabloid_character_21(const std::vector<int>& perm) {
    // Tabloids of shape (2,1) <-> the element placed alone in row 2.
    long fixed = 0;
    for (int alone = 0; alone < 3; ++alone)
        if (perm[alone] == alone) ++fixed;
    return fixed - 1;
}

}  // namespace oracles
