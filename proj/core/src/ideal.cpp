#include "exflat/ideal.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "exflat/subsets.hpp"

namespace exflat {

int CoordinateSystem::var_index(int i, int a, int b) const {
    if (symmetric) {
        if (a > b) std::swap(a, b);
        return (i - 1) * (n * (n + 1) / 2) + (b - 1) * b / 2 + (a - 1);
    }
    return (i - 1) * (n * k) + (b - 1) * n + (a - 1);
}

void CoordinateSystem::var_triple(int v, int& i, int& a, int& b) const {
    if (symmetric) {
        const int per = n * (n + 1) / 2;
        i = v / per + 1;
        int rest = v % per;
        b = 1;
        while (b * (b + 1) / 2 <= rest) ++b;
        a = rest - (b - 1) * b / 2 + 1;
    } else {
        const int per = n * k;
        i = v / per + 1;
        int rest = v % per;
        b = rest / n + 1;
        a = rest % n + 1;
    }
}

std::string CoordinateSystem::var_name(int v) const {
    int i, a, b;
    var_triple(v, i, a, b);
    return "x[" + std::to_string(i) + ";" + std::to_string(a) + "," + std::to_string(b) + "]";
}

int SparsePoly::degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (std::uint8_t e : terms_.begin()->first) d += e;
    return d;
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePoly::negate() {
    for (auto& [e, c] : terms_) c = -c;
}

Rational SparsePoly::evaluate(const Tensor3& x) const {
    if (cs_.m != x.m() || cs_.n != x.n() || cs_.k != x.k() || cs_.symmetric != x.symmetric())
        throw std::invalid_argument("tensor does not match coordinate system");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < static_cast<int>(e.size()); ++v)
            for (int t = 0; t < e[v]; ++t) {
                int i, a, b;
                cs_.var_triple(v, i, a, b);
                term *= x.at(i - 1, a - 1, b - 1);
            }
        total += term;
    }
    return total;
}

namespace {

int wedge_sign(const std::vector<int>& s, int i) {
    int below = 0;
    for (int v : s) below += (v < i);
    return below % 2 == 0 ? 1 : -1;
}

}  // namespace

SymbolicMatrix symbolic_flattening(const CoordinateSystem& cs, int j) {
    const int m = cs.m, n = cs.n, k = cs.k;
    if (j < 0 || j > m - 1) throw std::invalid_argument("flattening index j out of range");
    const auto rows_basis = subsets_colex(m, j);
    const auto cols_basis = subsets_colex(m, j + 1);

    SymbolicMatrix sym;
    sym.rows = n * static_cast<int>(rows_basis.size());
    sym.cols = k * static_cast<int>(cols_basis.size());
    sym.e.assign(static_cast<std::size_t>(sym.rows) * sym.cols, {});

    for (std::size_t si = 0; si < rows_basis.size(); ++si) {
        const auto& s = rows_basis[si];
        for (std::size_t ti = 0; ti < cols_basis.size(); ++ti) {
            const auto& t = cols_basis[ti];
            std::vector<int> diff;
            std::set_difference(t.begin(), t.end(), s.begin(), s.end(),
                                std::back_inserter(diff));
            if (diff.size() != 1 || !std::includes(t.begin(), t.end(), s.begin(), s.end()))
                continue;
            const int i = diff[0];
            const int sign = wedge_sign(s, i);
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= k; ++b)
                    sym.at(static_cast<int>(si) * n + a - 1, static_cast<int>(ti) * k + b - 1) =
                        {cs.var_index(i, a, b), sign};
        }
    }
    return sym;
}

SymbolicMatrix symbolic_pfaffian_form(const CoordinateSystem& cs) {
    if (cs.m != 3 || !cs.symmetric)
        throw std::invalid_argument("pfaffian form requires m=3 partially symmetric");
    const int n = cs.n;
    SymbolicMatrix sym;
    sym.rows = sym.cols = 3 * n;
    sym.e.assign(static_cast<std::size_t>(sym.rows) * sym.cols, {});
    struct Placement {
        int row, col, slice, sign;
    };
    static constexpr Placement kBlocks[] = {
        {0, 1, 3, +1}, {0, 2, 2, -1}, {1, 0, 3, -1},
        {1, 2, 1, +1}, {2, 0, 2, +1}, {2, 1, 1, -1},
    };
    for (const auto& blk : kBlocks)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                sym.at(blk.row * n + a - 1, blk.col * n + b - 1) =
                    {cs.var_index(blk.slice, a, b), blk.sign};
    return sym;
}

QMatrix evaluate(const SymbolicMatrix& sym, const Tensor3& x) {
    CoordinateSystem cs = x.symmetric() ? CoordinateSystem::sym(x.m(), x.n())
                                        : CoordinateSystem::general(x.m(), x.n(), x.k());
    QMatrix out(sym.rows, sym.cols);
    for (int r = 0; r < sym.rows; ++r)
        for (int c = 0; c < sym.cols; ++c) {
            const auto& entry = sym.at(r, c);
            if (entry.var < 0) continue;
            int i, a, b;
            cs.var_triple(entry.var, i, a, b);
            const Rational& v = x.at(i - 1, a - 1, b - 1);
            if (v == 0) continue;
            out.at(r, c) = entry.sign > 0 ? v : Rational(-v);
        }
    return out;
}

namespace {

// Determinant of a submatrix with single-variable entries: Laplace DP over
// column subsets, expanding along the last included row.
SparsePoly symbolic_minor(const CoordinateSystem& cs, const SymbolicMatrix& sym,
                          const std::vector<int>& rows, const std::vector<int>& cols) {
    const int s = static_cast<int>(rows.size());
    const int d = cs.dim();
    std::vector<std::map<Exponents, Rational>> dp(std::size_t(1) << s);
    dp[0][Exponents(d, 0)] = 1;

    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        const int r = __builtin_popcount(mask) - 1;
        auto& out = dp[mask];
        int pos = 0;
        for (int t = 0; t < s; ++t) {
            if (!(mask & (1u << t))) continue;
            const int my_pos = pos++;
            const auto& entry = sym.at(rows[r] - 1, cols[t] - 1);
            if (entry.var < 0) continue;
            const int sign = ((r + my_pos) % 2 == 0 ? 1 : -1) * entry.sign;
            for (const auto& [e, c] : dp[mask ^ (1u << t)]) {
                Exponents e2 = e;
                ++e2[entry.var];
                auto [it, inserted] = out.try_emplace(std::move(e2), sign > 0 ? c : Rational(-c));
                if (!inserted) {
                    it->second += sign > 0 ? c : Rational(-c);
                    if (it->second == 0) out.erase(it);
                }
            }
        }
    }

    SparsePoly poly(cs);
    for (auto& [e, c] : dp.back()) poly.add_term(e, c);
    return poly;
}

// Pfaffian of a principal submatrix by perfect-matching DP over index
// subsets: match the lowest live index against each later one.
SparsePoly symbolic_pfaffian(const CoordinateSystem& cs, const SymbolicMatrix& sym,
                             const std::vector<int>& idx) {
    const int s = static_cast<int>(idx.size());
    const int d = cs.dim();
    std::vector<std::map<Exponents, Rational>> dp(std::size_t(1) << s);
    dp[0][Exponents(d, 0)] = 1;

    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        auto& out = dp[mask];
        const int lo = __builtin_ctz(mask);
        int skipped = 0;
        for (int t = lo + 1; t < s; ++t) {
            if (!(mask & (1u << t))) continue;
            const int my_skip = skipped++;
            const auto& entry = sym.at(idx[lo] - 1, idx[t] - 1);
            if (entry.var < 0) continue;
            const int sign = (my_skip % 2 == 0 ? 1 : -1) * entry.sign;
            for (const auto& [e, c] : dp[mask ^ (1u << lo) ^ (1u << t)]) {
                Exponents e2 = e;
                ++e2[entry.var];
                auto [it, inserted] = out.try_emplace(std::move(e2), sign > 0 ? c : Rational(-c));
                if (!inserted) {
                    it->second += sign > 0 ? c : Rational(-c);
                    if (it->second == 0) out.erase(it);
                }
            }
        }
    }

    SparsePoly poly(cs);
    for (auto& [e, c] : dp.back()) poly.add_term(e, c);
    return poly;
}

}  // namespace

SparsePoly minor_generator(const CoordinateSystem& cs, int j, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor must be square");
    const SymbolicMatrix sym = symbolic_flattening(cs, j);
    for (int r : rows)
        if (r < 1 || r > sym.rows) throw std::invalid_argument("minor row out of range");
    for (int c : cols)
        if (c < 1 || c > sym.cols) throw std::invalid_argument("minor column out of range");
    return symbolic_minor(cs, sym, rows, cols);
}

std::vector<SparsePoly> minor_generators(int m, int n, int k, bool symmetric, int j, int size) {
    const CoordinateSystem cs =
        symmetric ? CoordinateSystem::sym(m, n) : CoordinateSystem::general(m, n, k);
    const SymbolicMatrix sym = symbolic_flattening(cs, j);
    if (size < 1 || size > std::min(sym.rows, sym.cols))
        throw std::invalid_argument("minor size exceeds matrix shape");
    if (size > 10) throw std::invalid_argument("minor size capped at 10");

    std::vector<SparsePoly> out;
    for (const auto& rows : subsets_colex(sym.rows, size))
        for (const auto& cols : subsets_colex(sym.cols, size))
            out.push_back(symbolic_minor(cs, sym, rows, cols));
    return out;
}

SparsePoly pfaffian_generator(int n, const std::vector<int>& indices) {
    const CoordinateSystem cs = CoordinateSystem::sym(3, n);
    const SymbolicMatrix sym = symbolic_pfaffian_form(cs);
    if (indices.size() % 2 != 0) throw std::invalid_argument("pfaffian size must be even");
    for (int i : indices)
        if (i < 1 || i > sym.rows) throw std::invalid_argument("pfaffian index out of range");
    return symbolic_pfaffian(cs, sym, indices);
}

std::vector<SparsePoly> pfaffian_generators(int n, int size) {
    if (size % 2 != 0) throw std::invalid_argument("pfaffian size must be even");
    if (size < 2 || size > std::min(3 * n, 12))
        throw std::invalid_argument("pfaffian size out of range (even, <= min(3n, 12))");
    const CoordinateSystem cs = CoordinateSystem::sym(3, n);
    const SymbolicMatrix sym = symbolic_pfaffian_form(cs);

    std::vector<SparsePoly> out;
    for (const auto& idx : subsets_colex(3 * n, size)) out.push_back(symbolic_pfaffian(cs, sym, idx));
    return out;
}

namespace {

// Reduce mod the Mersenne prime 2^31 - 1; valid for x < 2^63.
inline std::uint64_t fold31(std::uint64_t x) {
    constexpr std::uint64_t kP = 2147483647ull;
    x = (x & kP) + (x >> 31);
    x = (x & kP) + (x >> 31);
    if (x >= kP) x -= kP;
    return x;
}

// Incremental row echelon over F_p with normalized sparse pivot rows.
class SpanEliminator {
public:
    SpanEliminator(std::uint64_t p, int ncols)
        : fp_(p), ncols_(ncols), mersenne_(p == kDefaultPrime), pivot_of_col_(ncols, -1),
          dense_(ncols, 0) {}

    // `row`: sorted (column, value) pairs, values in [1, p). Returns true if
    // the row enlarged the span.
    bool insert(const std::vector<std::pair<int, std::uint64_t>>& row) {
        std::fill(dense_.begin(), dense_.end(), 0);
        int lead = ncols_;
        for (const auto& [c, v] : row) {
            dense_[c] = v;
            lead = std::min(lead, c);
        }
        while (lead < ncols_) {
            if (dense_[lead] == 0) {
                ++lead;
                continue;
            }
            const int pr = pivot_of_col_[lead];
            if (pr < 0) break;
            const std::uint64_t c = dense_[lead];
            if (mersenne_) {
                for (const auto& [col, val] : pivots_[pr])
                    dense_[col] = fold31(dense_[col] + c * (fp_.p() - val));
            } else {
                for (const auto& [col, val] : pivots_[pr])
                    dense_[col] = fp_.sub(dense_[col], fp_.mul(c, val));
            }
        }
        if (lead >= ncols_) return false;

        // New pivot: normalize to leading coefficient 1 and store sparse.
        const std::uint64_t inv = fp_.inv(dense_[lead]);
        std::vector<std::pair<int, std::uint64_t>> piv;
        for (int c = lead; c < ncols_; ++c)
            if (dense_[c] != 0) piv.emplace_back(c, fp_.mul(dense_[c], inv));
        pivot_of_col_[lead] = static_cast<int>(pivots_.size());
        pivots_.push_back(std::move(piv));
        return true;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    Fp fp_;
    int ncols_;
    bool mersenne_;
    std::vector<int> pivot_of_col_;
    std::vector<std::vector<std::pair<int, std::uint64_t>>> pivots_;
    std::vector<std::uint64_t> dense_;
};

// Colex on exponent vectors: compare at the last differing variable.
bool colex_less(const Exponents& a, const Exponents& b) {
    for (std::size_t t = a.size(); t-- > 0;)
        if (a[t] != b[t]) return a[t] < b[t];
    return false;
}

struct SpanSetup {
    std::vector<Exponents> monomials;  // sorted, graded colex
    std::map<Exponents, int> column;
};

SpanSetup index_monomials(const std::vector<const SparsePoly*>& polys) {
    SpanSetup s;
    int degree = -2;
    const CoordinateSystem* cs = nullptr;
    for (const SparsePoly* p : polys) {
        if (p->is_zero()) continue;
        if (cs && !(*cs == p->coords()))
            throw std::invalid_argument("span of polynomials over mixed coordinate systems");
        cs = &p->coords();
        if (degree == -2)
            degree = p->degree();
        else if (p->degree() != degree)
            throw std::invalid_argument("span of polynomials of mixed degrees");
        for (const auto& [e, c] : p->terms()) s.column.emplace(e, 0);
    }
    s.monomials.reserve(s.column.size());
    for (const auto& [e, c] : s.column) s.monomials.push_back(e);
    std::sort(s.monomials.begin(), s.monomials.end(), colex_less);
    for (std::size_t t = 0; t < s.monomials.size(); ++t) s.column[s.monomials[t]] = static_cast<int>(t);
    return s;
}

std::vector<std::pair<int, std::uint64_t>> poly_row(const SparsePoly& p, const SpanSetup& setup,
                                                    const Fp& fp) {
    std::vector<std::pair<int, std::uint64_t>> row;
    row.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        const std::uint64_t v = fp.from_rational(c);
        if (v != 0) row.emplace_back(setup.column.at(e), v);
    }
    std::sort(row.begin(), row.end());
    return row;
}

}  // namespace

int span_dimension(const std::vector<SparsePoly>& polys, std::uint64_t p) {
    std::vector<const SparsePoly*> ptrs;
    for (const auto& q : polys) ptrs.push_back(&q);
    const SpanSetup setup = index_monomials(ptrs);
    if (setup.monomials.empty()) return 0;
    const Fp fp(p);
    SpanEliminator elim(p, static_cast<int>(setup.monomials.size()));
    for (const auto& q : polys)
        if (!q.is_zero()) elim.insert(poly_row(q, setup, fp));
    return elim.rank();
}

bool in_span(const SparsePoly& f, const std::vector<SparsePoly>& polys, std::uint64_t p) {
    if (f.is_zero()) return true;
    std::vector<const SparsePoly*> ptrs;
    for (const auto& q : polys) ptrs.push_back(&q);
    ptrs.push_back(&f);
    const SpanSetup setup = index_monomials(ptrs);
    const Fp fp(p);
    SpanEliminator elim(p, static_cast<int>(setup.monomials.size()));
    for (const auto& q : polys)
        if (!q.is_zero()) elim.insert(poly_row(q, setup, fp));
    return !elim.insert(poly_row(f, setup, fp));
}

void write_generators(std::ostream& os, const std::vector<SparsePoly>& polys) {
    for (std::size_t t = 0; t < polys.size(); ++t) {
        if (t) os << "---\n";
        for (const auto& [e, c] : polys[t].terms()) {
            os << rational_to_string(c);
            for (std::uint8_t exp : e) os << ' ' << static_cast<int>(exp);
            os << '\n';
        }
    }
}

}  // namespace exflat
