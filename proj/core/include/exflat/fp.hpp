#pragma once

#include <cstdint>
#include <vector>

#include "exflat/rational.hpp"

namespace exflat {

// Default modulus for every F_p computation: the Mersenne prime 2^31 - 1.
// Fits in a machine word with headroom for multiply-accumulate; overridable
// everywhere a prime parameter is accepted.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ull;

// Arithmetic context for F_p, p < 2^62. Values are kept reduced in [0, p).
class Fp {
public:
    explicit Fp(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // a != 0

    std::uint64_t from_int(const Int& z) const;
    std::uint64_t from_rational(const Rational& q) const;  // throws if p | den

private:
    std::uint64_t p_;
};

bool is_probable_prime(std::uint64_t p);

// Dense matrix over F_p. Plumbing for span dimensions and tangent-space
// ranks; not part of the exact-rational path.
struct FpMatrix {
    std::uint64_t p = kDefaultPrime;
    int rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    FpMatrix() = default;
    FpMatrix(std::uint64_t prime, int r, int c)
        : p(prime), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::uint64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Exact rank over F_p; Gaussian elimination with the same deterministic
// pivot rule as the rational path (lowest row, then lowest column).
int rank(FpMatrix m);

}  // namespace exflat
