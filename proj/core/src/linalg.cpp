#include "exflat/linalg.hpp"

#include <cassert>
#include <numeric>

namespace exflat {

namespace {

Int exact_div(const Int& a, const Int& b) {
    Int q;
    assert(b != 0 && a % b == 0);
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Clears denominators row by row; rank and pivot positions are unchanged,
// determinant picks up the product of the scales.
std::vector<std::vector<Int>> scale_rows(const QMatrix& m, Int* scale_product) {
    std::vector<std::vector<Int>> w(m.rows(), std::vector<Int>(m.cols()));
    if (scale_product) *scale_product = 1;
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).get_den());
        for (int j = 0; j < m.cols(); ++j) {
            Rational v = m.at(i, j) * Rational(l);
            assert(v.get_den() == 1);
            w[i][j] = v.get_num();
        }
        if (scale_product) *scale_product *= l;
    }
    return w;
}

struct Elimination {
    RankProfile profile;
    Int last_pivot = 1;
    int row_swaps = 0;
};

// Fraction-free elimination, pivot rule: among the rows not yet used, the
// topmost one with a nonzero entry in a free column, and within it the
// leftmost such column.
Elimination bareiss(std::vector<std::vector<Int>>& w, int rows, int cols) {
    Elimination e;
    std::vector<int> orig_row(rows);
    std::iota(orig_row.begin(), orig_row.end(), 0);
    std::vector<bool> col_used(cols, false);

    Int prev = 1;
    int k = 0;
    while (k < rows) {
        int pr = -1, pc = -1;
        for (int r = k; r < rows && pr < 0; ++r)
            for (int c = 0; c < cols; ++c)
                if (!col_used[c] && w[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        if (pr != k) {
            std::swap(w[pr], w[k]);
            std::swap(orig_row[pr], orig_row[k]);
            ++e.row_swaps;
        }
        col_used[pc] = true;
        e.profile.pivot_rows.push_back(orig_row[k]);
        e.profile.pivot_cols.push_back(pc);

        const Int piv = w[k][pc];
        for (int i = k + 1; i < rows; ++i) {
            for (int c = 0; c < cols; ++c) {
                if (col_used[c]) continue;
                w[i][c] = exact_div(piv * w[i][c] - w[i][pc] * w[k][c], prev);
            }
            w[i][pc] = 0;
        }
        prev = piv;
        ++k;
    }
    e.profile.rank = k;
    e.last_pivot = prev;
    return e;
}

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

void require_skew(const QMatrix& m) {
    if (!is_skew_symmetric(m)) throw std::invalid_argument("not skew-symmetric");
}

}  // namespace

int rank(const QMatrix& m) {
    auto w = scale_rows(m, nullptr);
    return bareiss(w, m.rows(), m.cols()).profile.rank;
}

RankProfile rank_profile(const QMatrix& m) {
    auto w = scale_rows(m, nullptr);
    return bareiss(w, m.rows(), m.cols()).profile;
}

Rational determinant(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    Int scale;
    auto w = scale_rows(m, &scale);
    Elimination e = bareiss(w, m.rows(), m.cols());
    if (e.profile.rank < m.rows()) return 0;
    int sign = (e.row_swaps % 2 == 0 ? 1 : -1) * permutation_sign(e.profile.pivot_cols);
    return make_rational(sign * e.last_pivot, scale);
}

Rational pfaffian(const QMatrix& m) {
    const int n = m.rows();
    if (n % 2 != 0) throw std::invalid_argument("not skew-symmetric");
    require_skew(m);
    if (n == 0) return 1;

    // Clear denominators with one global factor so skewness is preserved:
    // pf(L*M) = L^{n/2} pf(M).
    Int l = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) l = lcm(l, m.at(i, j).get_den());
    std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = m.at(i, j) * Rational(l);
            w[i][j] = v.get_num();
        }

    auto sym_swap = [&](int a, int b) {
        if (a == b) return;
        std::swap(w[a], w[b]);
        for (int i = 0; i < n; ++i) std::swap(w[i][a], w[i][b]);
    };

    int sign = 1;
    Int prev = 1;
    Int last = 1;
    for (int t = 0; t + 1 < n; t += 2) {
        int pi = -1, pj = -1;
        for (int i = t; i < n && pi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (w[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) return 0;
        if (pi != t) {
            sym_swap(pi, t);
            sign = -sign;
        }
        if (pj != t + 1) {
            sym_swap(pj, t + 1);
            sign = -sign;
        }

        const Int a = w[t][t + 1];
        for (int i = t + 2; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                w[i][j] = exact_div(a * w[i][j] - w[t][i] * w[t + 1][j] + w[t + 1][i] * w[t][j],
                                    prev);
                w[j][i] = -w[i][j];
            }
        prev = a;
        last = a;
    }

    Int denom;
    mpz_pow_ui(denom.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(n / 2));
    return make_rational(sign * last, denom);
}

int even_rank(const QMatrix& m) {
    require_skew(m);
    int r = rank(m);
    assert(r % 2 == 0);
    return r;
}

SkewProfile skew_rank_profile(const QMatrix& m) {
    require_skew(m);
    const int n = m.rows();
    std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
    Int l = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) l = lcm(l, m.at(i, j).get_den());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = Rational(m.at(i, j) * Rational(l)).get_num();

    std::vector<int> orig(n);
    std::iota(orig.begin(), orig.end(), 0);
    auto sym_swap = [&](int a, int b) {
        if (a == b) return;
        std::swap(w[a], w[b]);
        for (int i = 0; i < n; ++i) std::swap(w[i][a], w[i][b]);
        std::swap(orig[a], orig[b]);
    };

    SkewProfile out;
    Int prev = 1;
    for (int t = 0; t + 1 < n; t += 2) {
        int pi = -1, pj = -1;
        for (int i = t; i < n && pi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (w[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != t) sym_swap(pi, t);
        if (pj != t + 1) sym_swap(pj, t + 1);

        const Int a = w[t][t + 1];
        for (int i = t + 2; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                w[i][j] = exact_div(a * w[i][j] - w[t][i] * w[t + 1][j] + w[t + 1][i] * w[t][j],
                                    prev);
                w[j][i] = -w[i][j];
            }
        prev = a;
        out.rank += 2;
        out.principal.push_back(orig[t]);
        out.principal.push_back(orig[t + 1]);
    }
    return out;
}

QMatrix column_space_basis(const QMatrix& m) {
    // Row-reduce the transpose; the nonzero reduced rows are the canonical
    // basis vectors.
    QMatrix t = m.transposed();
    const int rows = t.rows(), cols = t.cols();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (t.at(r, c) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != rank)
            for (int j = 0; j < cols; ++j) std::swap(t.at(pr, j), t.at(rank, j));
        const Rational inv = t.at(rank, c);
        for (int j = 0; j < cols; ++j) t.at(rank, j) /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || t.at(r, c) == 0) continue;
            const Rational f = t.at(r, c);
            for (int j = 0; j < cols; ++j) t.at(r, j) -= f * t.at(rank, j);
        }
        ++rank;
    }
    QMatrix basis(m.rows(), rank);
    for (int r = 0; r < rank; ++r)
        for (int j = 0; j < cols; ++j) basis.at(j, r) = t.at(r, j);
    return basis;
}

QMatrix solve_exact(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact shape mismatch");
    const int n = a.rows(), mcols = a.cols(), q = b.cols();
    QMatrix aug(n, mcols + q);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < mcols; ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < q; ++j) aug.at(i, mcols + j) = b.at(i, j);
    }

    // Gauss-Jordan over Q; pivots must all land in the A-part.
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int c = 0; c < mcols && row < n; ++c) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (aug.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < mcols + q; ++j) std::swap(aug.at(pr, j), aug.at(row, j));
        Rational inv = aug.at(row, c);
        for (int j = 0; j < mcols + q; ++j) aug.at(row, j) /= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || aug.at(i, c) == 0) continue;
            Rational f = aug.at(i, c);
            for (int j = 0; j < mcols + q; ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivot_col_of_row.push_back(c);
        ++row;
    }
    if (static_cast<int>(pivot_col_of_row.size()) != mcols)
        throw std::invalid_argument("solve_exact: matrix does not have full column rank");
    for (int i = row; i < n; ++i)
        for (int j = 0; j < q; ++j)
            if (aug.at(i, mcols + j) != 0)
                throw std::invalid_argument("solve_exact: inconsistent system");

    QMatrix x(mcols, q);
    for (int r = 0; r < mcols; ++r)
        for (int j = 0; j < q; ++j) x.at(pivot_col_of_row[r], j) = aug.at(r, mcols + j);
    return x;
}

}  // namespace exflat
