#include "exflat/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "exflat/subsets.hpp"

namespace exflat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition conjugate(const Partition& lam) {
    std::vector<int> out(lam.part(0), 0);
    for (int c = 0; c < lam.part(0); ++c)
        for (int i = 0; i < lam.length(); ++i) out[c] += (lam.part(i) > c);
    return Partition(std::move(out));
}

std::optional<Partition> complement(const Partition& lam, int l, int rows) {
    if (lam.length() > rows) throw std::invalid_argument("partition has more than `rows` parts");
    if (lam.part(0) > l) return std::nullopt;
    std::vector<int> out(rows);
    for (int i = 0; i < rows; ++i) out[i] = l - lam.part(rows - 1 - i);
    return Partition(std::move(out));
}

Int schur_dim(const Partition& lam, int n) {
    if (lam.length() > n) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lam.part(i) - lam.part(j) + j - i;
            den *= j - i;
        }
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

namespace {

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

// Fills the cells of nu/lam in reverse reading order (rows top to bottom,
// right to left within a row), so the ballot condition on the reverse
// reading word can be checked as a running prefix count.
struct LrCounter {
    const Partition& lam;
    const Partition& nu;
    std::vector<int> remaining;           // of mu
    std::vector<std::vector<int>> fill;   // value at (row, col-offset), 0 = empty
    std::vector<int> prefix;              // running content of the placed prefix
    long count = 0;

    int value_at(int row, int col) const {
        if (row < 0) return 0;
        if (col < lam.part(row) || col >= nu.part(row)) return 0;
        return fill[row][col - lam.part(row)];
    }

    void run(int row, int col) {
        while (row < nu.length() && nu.part(row) == lam.part(row)) {
            ++row;
            col = row < nu.length() ? nu.part(row) - 1 : 0;
        }
        if (row >= nu.length()) {
            ++count;
            return;
        }
        const int right = (col + 1 < nu.part(row)) ? value_at(row, col + 1)
                                                   : static_cast<int>(remaining.size());
        const int above = value_at(row - 1, col);  // 0 when no cell above in the skew shape
        for (int v = above + 1; v <= right && v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            if (v > 1 && prefix[v - 2] <= prefix[v - 1]) continue;  // ballot
            --remaining[v - 1];
            ++prefix[v - 1];
            fill[row][col - lam.part(row)] = v;

            int nrow = row, ncol = col - 1;
            if (ncol < lam.part(row)) {
                nrow = row + 1;
                ncol = nrow < nu.length() ? nu.part(nrow) - 1 : 0;
            }
            run(nrow, ncol);

            fill[row][col - lam.part(row)] = 0;
            ++remaining[v - 1];
            --prefix[v - 1];
        }
    }
};

}  // namespace

long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lam.weight() + mu.weight()) return 0;
    if (!contains(nu, lam)) return 0;
    if (mu.length() == 0) return 1;  // nu == lam at this point

    LrCounter ctr{lam, nu, mu.parts(), {}, std::vector<int>(mu.length(), 0), 0};
    ctr.fill.resize(nu.length());
    for (int r = 0; r < nu.length(); ++r) ctr.fill[r].assign(nu.part(r) - lam.part(r), 0);
    int row = 0, col = nu.part(0) - 1;
    ctr.run(row, col);
    return ctr.count;
}

namespace {

// Beta-set Murnaghan-Nakayama. Removing a border strip of length t from
// lambda is subtracting t from one beta number without colliding with
// another; the leg length is the number of beta numbers jumped over.
long mn_character(std::vector<int> beta, const std::vector<int>& cls, std::size_t idx,
                  std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
    if (idx == cls.size()) return 1;
    auto key = std::make_pair(beta, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int t = cls[idx];
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - t;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int jumped = 0;
        for (int b : beta) jumped += (target < b && b < beta[i]);
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end());
        const long sub = mn_character(next, cls, idx + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

std::vector<int> beta_set(const Partition& lam, int size) {
    std::vector<int> beta(size);
    for (int i = 0; i < size; ++i) beta[i] = lam.part(size - 1 - i) + i;
    return beta;
}

}  // namespace

long sn_character(const Partition& lam, const Partition& cls) {
    if (lam.weight() != cls.weight())
        throw std::invalid_argument("character of mismatched partition sizes");
    if (lam.weight() == 0) return 1;
    std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
    return mn_character(beta_set(lam, lam.length()), cls.parts(), 0, memo);
}

namespace {

Int class_size(const Partition& cls, const Int& d_factorial) {
    // |class| = d! / prod_i i^{m_i} m_i!
    Int z = 1;
    int run = 1;
    for (int i = 0; i < cls.length(); ++i) {
        z *= cls.part(i);
        if (i + 1 < cls.length() && cls.part(i + 1) == cls.part(i))
            ++run;
        else {
            for (int t = 2; t <= run; ++t) z *= t;
            run = 1;
        }
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), d_factorial.get_mpz_t(), z.get_mpz_t());
    return q;
}

}  // namespace

long kronecker_coefficient(const Partition& pi, const Partition& lam, const Partition& mu) {
    const int d = pi.weight();
    if (lam.weight() != d || mu.weight() != d)
        throw std::invalid_argument("Kronecker coefficient of mismatched sizes");
    if (d > 12) throw std::invalid_argument("Kronecker coefficient capped at d = 12");
    if (d == 0) return 1;

    Int d_factorial = 1;
    for (int t = 2; t <= d; ++t) d_factorial *= t;

    Int sum = 0;
    for (const Partition& cls : partitions_of(d)) {
        const Int term = Int(sn_character(pi, cls)) * Int(sn_character(lam, cls)) *
                         Int(sn_character(mu, cls));
        sum += class_size(cls, d_factorial) * term;
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), d_factorial.get_mpz_t());
    return q.get_si();
}

std::vector<Partition> partitions_of(int d, int max_length, int max_part) {
    if (max_length < 0) max_length = d;
    if (max_part < 0) max_part = d;
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_length) return;
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, max_part);
    return out;
}

Int total_dimension(const std::vector<SchurSummand>& summands) {
    Int t = 0;
    for (const auto& s : summands) t += s.dimension;
    return t;
}

std::vector<SchurSummand> decompose_kappa0(int m, int n, int r) {
    if (r < 1) throw std::invalid_argument("decompose_kappa0 requires r >= 1");
    std::vector<SchurSummand> out;
    for (const Partition& pi : partitions_of(r + 1, m)) {
        std::vector<int> v = conjugate(pi).parts();
        v.resize(r + 1, 0);
        for (int& p : v) ++p;  // pi' + 1^{r+1}
        Partition vpart(std::move(v));
        if (vpart.length() > n) continue;  // zero module
        Int dim = schur_dim(pi, m) * schur_dim(vpart, n);
        out.push_back({pi, std::move(vpart), std::nullopt, 1, std::move(dim)});
    }
    return out;
}

std::vector<SchurSummand> decompose_kappa1_sym(int n, int r) {
    if (r < 1) throw std::invalid_argument("decompose_kappa1_sym requires r >= 1");
    std::vector<SchurSummand> out;
    for (const Partition& pi : partitions_of(r + 1, 3)) {
        auto box = complement(pi, r + 1, 3);
        if (!box) continue;  // pi_1 > r+1 cannot happen for |pi| = r+1, kept for clarity
        Partition vpart = conjugate(*box);  // (3)^{r+1} - pi'
        if (vpart.length() > n) continue;
        Int dim = schur_dim(pi, 3) * schur_dim(vpart, n);
        out.push_back({pi, std::move(vpart), std::nullopt, 1, std::move(dim)});
    }
    return out;
}

std::vector<SchurSummand> decompose_kappa1_nonsym_bound(int n, int k, int c) {
    if (c < 1) throw std::invalid_argument("decompose_kappa1_nonsym_bound requires c >= 1");
    if (c + 1 > 12) throw std::invalid_argument("decompose_kappa1_nonsym_bound capped at c = 11");
    const int d = c + 1;
    std::vector<SchurSummand> out;
    const auto pis = partitions_of(d, 3);
    // lam' and mu' need at most 3 parts, so lam and mu have parts <= 3.
    const auto lams = partitions_of(d, n, 3);
    const auto mus = partitions_of(d, k, 3);
    for (const Partition& pi : pis) {
        const Partition nu = *complement(pi, d, 3);
        for (const Partition& lam : lams) {
            const Partition lamc = conjugate(lam);
            for (const Partition& mu : mus) {
                const long lr = lr_coefficient(lamc, conjugate(mu), nu);
                if (lr == 0) continue;
                const long kron = kronecker_coefficient(pi, lam, mu);
                const long mult = std::min(lr, kron);
                if (mult == 0) continue;
                Int dim = Int(mult) * schur_dim(pi, 3) * schur_dim(lam, n) * schur_dim(mu, k);
                out.push_back({pi, lam, mu, mult, std::move(dim)});
            }
        }
    }
    return out;
}

}  // namespace exflat
