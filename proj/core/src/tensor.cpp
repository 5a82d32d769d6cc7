#include "exflat/tensor.hpp"

#include <stdexcept>

#include "exflat/linalg.hpp"
#include "exflat/prng.hpp"

namespace exflat {

Tensor3::Tensor3(int m, int n, int k, bool symmetric, std::vector<Rational> entries)
    : m_(m), n_(n), k_(k), symmetric_(symmetric), e_(std::move(entries)) {
    if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("tensor dimensions must be >= 1");
    if (e_.size() != static_cast<std::size_t>(m) * n * k)
        throw std::invalid_argument("tensor entry count does not match dimensions");
    if (symmetric_) {
        if (k_ != n_) throw std::invalid_argument("symmetric tensor requires k = n");
        for (int i = 0; i < m_; ++i)
            for (int a = 0; a < n_; ++a)
                for (int b = a + 1; b < n_; ++b)
                    if (at(i, a, b) != at(i, b, a))
                        throw std::invalid_argument("slices of a symmetric tensor must be symmetric");
    }
}

Tensor3 Tensor3::zero(int m, int n, int k, bool symmetric) {
    return Tensor3(m, n, k, symmetric, std::vector<Rational>(static_cast<std::size_t>(m) * n * k));
}

QMatrix Tensor3::slice(int i) const {
    QMatrix a(n_, k_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < k_; ++c) a.at(r, c) = at(i, r, c);
    return a;
}

std::vector<QMatrix> slices(const Tensor3& x) {
    std::vector<QMatrix> out;
    out.reserve(x.m());
    for (int i = 0; i < x.m(); ++i) out.push_back(x.slice(i));
    return out;
}

namespace {

// Parses "name(a,b)" / "name(a,b,c)" argument lists.
bool parse_args(const std::string& name, const std::string& head, std::vector<int>& args) {
    if (name.rfind(head + "(", 0) != 0 || name.back() != ')') return false;
    std::string body = name.substr(head.size() + 1, name.size() - head.size() - 2);
    args.clear();
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? body.size() - pos
                                                                      : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
        args.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return !args.empty();
}

}  // namespace

Tensor3 example_tensor(const std::string& name) {
    if (name == "ex23_kappa464") {
        // x = sum_{i=1..3} u_i (x) (v_1 v_{i+1} + v_{i+1} v_1), m = 3, n = 4.
        std::vector<Rational> e(3 * 4 * 4);
        auto set = [&](int i, int a, int b) { e[(i * 4 + a) * 4 + b] = 1; };
        for (int i = 0; i < 3; ++i) {
            set(i, 0, i + 1);
            set(i, i + 1, 0);
        }
        return Tensor3(3, 4, 4, true, std::move(e));
    }
    std::vector<int> args;
    if (parse_args(name, "zero", args) && args.size() == 3 && args[0] >= 1 && args[1] >= 1 &&
        args[2] >= 1)
        return Tensor3::zero(args[0], args[1], args[2], args[1] == args[2]);
    if (parse_args(name, "rank_one", args) && args.size() == 2 && args[0] >= 1 && args[1] >= 1) {
        const int m = args[0], n = args[1];
        std::vector<Rational> e(static_cast<std::size_t>(m) * n * n);
        e[0] = 1;  // e_1 (x) v_1 (x) v_1
        return Tensor3(m, n, n, true, std::move(e));
    }
    throw std::invalid_argument("unknown example");
}

Tensor3 random_rank_r(int m, int n, int r, std::uint64_t seed, bool symmetric) {
    if (m < 1 || n < 1 || r < 0) throw std::invalid_argument("random_rank_r: bad arguments");
    SplitMix64 rng(seed);
    std::vector<Rational> e(static_cast<std::size_t>(m) * n * n);
    for (int t = 0; t < r; ++t) {
        std::vector<int> u(m), v(n), w(n);
        for (int i = 0; i < m; ++i) u[i] = rng.digit();
        for (int a = 0; a < n; ++a) v[a] = rng.digit();
        if (symmetric)
            w = v;
        else
            for (int b = 0; b < n; ++b) w[b] = rng.digit();
        for (int i = 0; i < m; ++i) {
            if (u[i] == 0) continue;
            for (int a = 0; a < n; ++a) {
                if (v[a] == 0) continue;
                for (int b = 0; b < n; ++b)
                    e[(static_cast<std::size_t>(i) * n + a) * n + b] += u[i] * v[a] * w[b];
            }
        }
    }
    return Tensor3(m, n, n, symmetric, std::move(e));
}

Tensor3 random_dense(int m, int n, std::uint64_t seed, bool symmetric) {
    SplitMix64 rng(seed);
    std::vector<Rational> e(static_cast<std::size_t>(m) * n * n);
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = symmetric ? a : 0; b < n; ++b) {
                int val = rng.digit();
                e[(static_cast<std::size_t>(i) * n + a) * n + b] = val;
                if (symmetric) e[(static_cast<std::size_t>(i) * n + b) * n + a] = val;
            }
    return Tensor3(m, n, n, symmetric, std::move(e));
}

Tensor3 apply_gl(const QMatrix& g, const QMatrix& h, const Tensor3& x) {
    if (x.k() != x.n()) throw std::invalid_argument("apply_gl requires k = n");
    if (g.rows() != x.m() || g.cols() != x.m() || h.rows() != x.n() || h.cols() != x.n())
        throw std::invalid_argument("apply_gl: group element shape mismatch");
    if (rank(g) < g.rows() || rank(h) < h.rows())
        throw std::invalid_argument("singular group element");

    const int m = x.m(), n = x.n();
    // x'_i = sum_{i'} g_{ii'} h A_{i'} h^T
    std::vector<QMatrix> transformed;
    transformed.reserve(m);
    const QMatrix ht = h.transposed();
    for (int i = 0; i < m; ++i) transformed.push_back(h * x.slice(i) * ht);

    std::vector<Rational> e(static_cast<std::size_t>(m) * n * n);
    for (int i = 0; i < m; ++i)
        for (int ip = 0; ip < m; ++ip) {
            if (g.at(i, ip) == 0) continue;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    e[(static_cast<std::size_t>(i) * n + a) * n + b] +=
                        g.at(i, ip) * transformed[ip].at(a, b);
        }
    return Tensor3(m, n, n, x.symmetric(), std::move(e));
}

Tensor3 add(const Tensor3& x, const Tensor3& y) {
    if (x.m() != y.m() || x.n() != y.n() || x.k() != y.k())
        throw std::invalid_argument("tensor shape mismatch");
    std::vector<Rational> e;
    e.reserve(static_cast<std::size_t>(x.m()) * x.n() * x.k());
    for (int i = 0; i < x.m(); ++i)
        for (int a = 0; a < x.n(); ++a)
            for (int b = 0; b < x.k(); ++b) e.push_back(x.at(i, a, b) + y.at(i, a, b));
    return Tensor3(x.m(), x.n(), x.k(), x.symmetric() && y.symmetric(), std::move(e));
}

}  // namespace exflat
