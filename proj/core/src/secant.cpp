#include "exflat/secant.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "exflat/flatten.hpp"
#include "exflat/linalg.hpp"
#include "exflat/prng.hpp"
#include "exflat/subsets.hpp"

namespace exflat {

KappaVector kappa(const Tensor3& x) {
    KappaVector out;
    out.values.reserve(x.m());
    for (int j = 0; j < x.m(); ++j) out.values.push_back(rank(exterior_flattening(x, j).matrix));
    return out;
}

int border_rank_lower_bound(const Tensor3& x) {
    const KappaVector kv = kappa(x);
    int bound = 0;
    for (int j = 0; j < x.m(); ++j) {
        const std::int64_t c = binomial_i64(x.m() - 1, j);
        bound = std::max<int>(bound, static_cast<int>((kv.values[j] + c - 1) / c));
    }
    return bound;
}

MembershipCertificate certify_membership(const Tensor3& x, int r) {
    if (!x.symmetric() || (x.m() != 2 && x.m() != 3))
        throw std::invalid_argument(
            "certify_membership requires a partially symmetric tensor with m in {2,3}; "
            "use kappa / border_rank_lower_bound for other shapes");
    if (r < 0) throw std::invalid_argument("certify_membership requires r >= 0");

    MembershipCertificate cert;
    cert.r = r;
    cert.kappa = kappa(x);
    cert.theorem_backed = x.m() == 2 || r <= 5;

    const int kappa0 = cert.kappa.values[0];
    if (kappa0 > r) {
        cert.member = false;
        cert.violated_stage = "kappa0";
        const RankProfile prof = rank_profile(exterior_flattening(x, 0).matrix);
        for (int t = 0; t <= r; ++t) {
            cert.witness_rows.push_back(prof.pivot_rows[t] + 1);
            cert.witness_cols.push_back(prof.pivot_cols[t] + 1);
        }
        std::sort(cert.witness_rows.begin(), cert.witness_rows.end());
        std::sort(cert.witness_cols.begin(), cert.witness_cols.end());
        return cert;
    }
    if (x.m() == 3) {
        const int kappa1 = cert.kappa.values[1];
        if (kappa1 > 2 * r) {
            cert.member = false;
            cert.violated_stage = "kappa1";
            const SkewProfile prof = skew_rank_profile(pfaffian_form(x));
            cert.witness_principal.assign(prof.principal.begin(),
                                          prof.principal.begin() + 2 * r + 2);
            for (int& v : cert.witness_principal) ++v;
            std::sort(cert.witness_principal.begin(), cert.witness_principal.end());
            return cert;
        }
    }
    cert.member = true;
    return cert;
}

Compression subspace_compress(const Tensor3& x) {
    if (!x.symmetric()) throw std::invalid_argument("subspace_compress requires a symmetric tensor");
    const int m = x.m(), n = x.n();
    const FlatteningMatrix psi0 = exterior_flattening(x, 0);
    QMatrix basis = column_space_basis(psi0.matrix);
    const int np = basis.cols();

    if (np == 0) {
        // Zero tensor: report n' = 0; pad the basis with one zero column so
        // the core stays a legal (m x 1 x 1) tensor. Reconstruction is exact.
        return Compression{0, QMatrix(n, 1), Tensor3::zero(m, 1, 1, true)};
    }

    std::vector<Rational> core_entries(static_cast<std::size_t>(m) * np * np);
    for (int i = 0; i < m; ++i) {
        // A_i = B Z with Z = C_i B^T, then C_i from B C_i^T = Z^T.
        const QMatrix z = solve_exact(basis, x.slice(i));
        const QMatrix ci = solve_exact(basis, z.transposed()).transposed();
        for (int a = 0; a < np; ++a)
            for (int b = 0; b < np; ++b)
                core_entries[(static_cast<std::size_t>(i) * np + a) * np + b] = ci.at(a, b);
    }
    return Compression{np, std::move(basis), Tensor3(m, np, np, true, std::move(core_entries))};
}

Tensor3 expand(const QMatrix& basis, const Tensor3& core) {
    const int n = basis.rows();
    const QMatrix bt = basis.transposed();
    std::vector<Rational> entries(static_cast<std::size_t>(core.m()) * n * n);
    for (int i = 0; i < core.m(); ++i) {
        const QMatrix s = basis * core.slice(i) * bt;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                entries[(static_cast<std::size_t>(i) * n + a) * n + b] = s.at(a, b);
    }
    return Tensor3(core.m(), n, n, core.symmetric(), std::move(entries));
}

namespace {

// Homogeneous polynomial in (t1, t2, t3) as exponent-triple -> coefficient.
using TernaryPoly = std::map<std::array<int, 3>, Rational>;

void add_term(TernaryPoly& p, const std::array<int, 3>& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

}  // namespace

bool det_pencil_vanishes(const Tensor3& x) {
    if (x.m() != 3) throw std::invalid_argument("det pencil requires m = 3");
    if (x.k() != x.n()) throw std::invalid_argument("det pencil requires square slices");
    const int n = x.n();

    // Determinant of t1 A1 + t2 A2 + t3 A3 by Laplace DP over column
    // subsets; entries are linear forms in t.
    std::vector<TernaryPoly> dp(std::size_t(1) << n);
    dp[0][{0, 0, 0}] = 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int r = __builtin_popcount(mask) - 1;
        auto& out = dp[mask];
        int pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const int my_pos = pos++;
            const int sign = (r + my_pos) % 2 == 0 ? 1 : -1;
            for (int t = 0; t < 3; ++t) {
                const Rational& coeff = x.at(t, r, c);
                if (coeff == 0) continue;
                const Rational signed_coeff = sign > 0 ? coeff : Rational(-coeff);
                for (const auto& [e, v] : dp[mask ^ (1u << c)]) {
                    std::array<int, 3> e2 = e;
                    ++e2[t];
                    add_term(out, e2, v * signed_coeff);
                }
            }
        }
    }
    return dp.back().empty();
}

bool inherited_pfaffian_check(const Tensor3& x, int r, int samples, std::uint64_t seed) {
    if (!x.symmetric() || x.m() < 3)
        throw std::invalid_argument("inherited_pfaffian_check requires symmetric m >= 3");
    const int m = x.m(), n = x.n();
    const auto slice_list = slices(x);

    auto passes = [&](const QMatrix& b1, const QMatrix& b2, const QMatrix& b3) {
        std::vector<Rational> e;
        e.reserve(static_cast<std::size_t>(3) * n * n);
        for (const QMatrix* s : {&b1, &b2, &b3})
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) e.push_back(s->at(a, b));
        const Tensor3 y(3, n, n, true, std::move(e));
        return even_rank(pfaffian_form(y)) <= 2 * r;
    };

    for (const auto& triple : subsets_colex(m, 3))
        if (!passes(slice_list[triple[0] - 1], slice_list[triple[1] - 1],
                    slice_list[triple[2] - 1]))
            return false;

    SplitMix64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        QMatrix g(3, m);
        for (int i = 0; i < 3; ++i)
            for (int t = 0; t < m; ++t) g.at(i, t) = rng.digit();
        std::array<QMatrix, 3> proj = {QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
        for (int i = 0; i < 3; ++i)
            for (int t = 0; t < m; ++t) {
                if (g.at(i, t) == 0) continue;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        proj[i].at(a, b) += g.at(i, t) * slice_list[t].at(a, b);
            }
        if (!passes(proj[0], proj[1], proj[2])) return false;
    }
    return true;
}

int terracini_dimension(int m, int n, int r, int trials, std::uint64_t seed, std::uint64_t p) {
    if (m < 1 || n < 1 || r < 1 || trials < 1)
        throw std::invalid_argument("terracini_dimension: bad arguments");
    const Fp fp(p);
    SplitMix64 rng(seed);
    const int pairs = n * (n + 1) / 2;
    const int dim = m * pairs;
    auto coord = [&](int i, int a, int b) {  // 0-based, a <= b
        return i * pairs + b * (b + 1) / 2 + a;
    };

    int best = 0;
    for (int trial = 0; trial < trials; ++trial) {
        FpMatrix mat(p, r * (m + n), dim);
        int row = 0;
        for (int pt = 0; pt < r; ++pt) {
            std::vector<std::uint64_t> u(m), v(n);
            for (int i = 0; i < m; ++i) u[i] = rng.below(p);
            for (int a = 0; a < n; ++a) v[a] = rng.below(p);
            // e_i (x) v v^T for each basis vector of U
            for (int i = 0; i < m; ++i, ++row)
                for (int a = 0; a < n; ++a)
                    for (int b = a; b < n; ++b) mat.at(row, coord(i, a, b)) = fp.mul(v[a], v[b]);
            // u (x) (v w^T + w v^T) for each basis vector w of V
            for (int w = 0; w < n; ++w, ++row)
                for (int a = 0; a < n; ++a)
                    for (int b = a; b < n; ++b) {
                        std::uint64_t s = 0;
                        if (b == w) s = fp.add(s, v[a]);
                        if (a == w) s = fp.add(s, v[b]);
                        for (int i = 0; i < m && s; ++i)
                            mat.at(row, coord(i, a, b)) = fp.mul(u[i], s);
                    }
        }
        best = std::max(best, rank(std::move(mat)));
    }
    return best - 1;
}

}  // namespace exflat
