#include "exflat/fp.hpp"

#include <stdexcept>
#include <utility>

namespace exflat {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin bases for the full 64-bit range.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Fp::Fp(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (1ull << 62)) throw std::invalid_argument("modulus out of range");
    if (!is_probable_prime(p)) throw std::invalid_argument("modulus is not prime");
}

std::uint64_t Fp::pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, p_); }

std::uint64_t Fp::inv(std::uint64_t a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    // Extended Euclid on (a, p); p prime so the gcd is 1.
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t Fp::from_int(const Int& z) const {
    Int r = z % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
}

std::uint64_t Fp::from_rational(const Rational& q) const {
    std::uint64_t den = from_int(q.get_den());
    if (den == 0) throw std::invalid_argument("denominator divisible by modulus");
    return mul(from_int(q.get_num()), inv(den));
}

int rank(FpMatrix m) {
    const Fp f(m.p);
    std::vector<bool> col_used(m.cols, false);
    int k = 0;
    while (k < m.rows) {
        int pr = -1, pc = -1;
        for (int r = k; r < m.rows && pr < 0; ++r)
            for (int c = 0; c < m.cols; ++c)
                if (!col_used[c] && m.at(r, c) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        if (pr != k)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(k, c));
        col_used[pc] = true;
        const std::uint64_t inv = f.inv(m.at(k, pc));
        for (int i = k + 1; i < m.rows; ++i) {
            if (m.at(i, pc) == 0) continue;
            const std::uint64_t factor = f.mul(m.at(i, pc), inv);
            for (int c = 0; c < m.cols; ++c) {
                if (col_used[c] || m.at(k, c) == 0) continue;
                m.at(i, c) = f.sub(m.at(i, c), f.mul(factor, m.at(k, c)));
            }
            m.at(i, pc) = 0;
        }
        ++k;
    }
    return k;
}

}  // namespace exflat
