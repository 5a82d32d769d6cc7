#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exflat/matrix.hpp"
#include "exflat/rational.hpp"

namespace exflat {

// Exact-rational 3-tensor x in U* (x) V* (x) W*, stored as m slices of
// n x k matrices: x = sum_i e_i (x) A_i. With the symmetric flag set, k = n
// and every slice is a symmetric matrix (x lives in U* (x) S^2 V*).
// Immutable after construction.
class Tensor3 {
public:
    Tensor3(int m, int n, int k, bool symmetric, std::vector<Rational> entries);

    static Tensor3 zero(int m, int n, int k, bool symmetric = false);

    int m() const { return m_; }
    int n() const { return n_; }
    int k() const { return k_; }
    bool symmetric() const { return symmetric_; }

    // Entry x_{i,a,b}, all indices 0-based.
    const Rational& at(int i, int a, int b) const {
        return e_[(static_cast<std::size_t>(i) * n_ + a) * k_ + b];
    }

    QMatrix slice(int i) const;

    bool operator==(const Tensor3& o) const = default;

private:
    int m_, n_, k_;
    bool symmetric_;
    std::vector<Rational> e_;
};

// The coordinate slices (A_1, ..., A_m).
std::vector<QMatrix> slices(const Tensor3& x);

// Named tensors: "ex23_kappa464", "rank_one(m,n)", "zero(m,n,k)".
Tensor3 example_tensor(const std::string& name);

// Sum of r random decomposable terms, entries uniform in [-9, 9] drawn from
// SplitMix64(seed); bit-identical across platforms for equal arguments.
// Symmetric: sum u_i (x) v_i (x) v_i; general: sum u_i (x) v_i (x) w_i (k = n).
Tensor3 random_rank_r(int m, int n, int r, std::uint64_t seed, bool symmetric);

// Dense random tensor with entries in [-9, 9]; generic with overwhelming
// probability at these sizes.
Tensor3 random_dense(int m, int n, std::uint64_t seed, bool symmetric);

// Action of (g, h) in GL(U) x GL(V): x'_{i,a,b} = sum g_{ii'} h_{aa'} h_{bb'}
// x_{i',a',b'}; h acts on both V factors, so k = n is required. Throws
// "singular group element" if g or h is not invertible.
Tensor3 apply_gl(const QMatrix& g, const QMatrix& h, const Tensor3& x);

Tensor3 add(const Tensor3& x, const Tensor3& y);

}  // namespace exflat
