#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exflat/fp.hpp"
#include "exflat/matrix.hpp"
#include "exflat/tensor.hpp"

namespace exflat {

// (kappa_0, ..., kappa_{m-1}): the ranks of the exterior flattenings.
struct KappaVector {
    std::vector<int> values;
    bool operator==(const KappaVector&) const = default;
};

KappaVector kappa(const Tensor3& x);

// max_j ceil(kappa_j / C(m-1, j)): certified lower bound for the (partially
// symmetric) border rank.
int border_rank_lower_bound(const Tensor3& x);

// Decision for x in Sigma_{kappa <= (r,2r,r)} (m = 3) or kappa_0 <= r
// (m = 2). theorem_backed means the rank conditions cut out sigma_r exactly
// (always for m = 2; for m = 3 when r <= 5); otherwise membership is only a
// necessary condition. On failure the witness names a nonsingular
// submatrix: pivot rows/columns of psi_0 of size r+1, or a principal subset
// of the skew form of size 2r+2 (indices 1-based in the fixed block order).
struct MembershipCertificate {
    int r = 0;
    bool member = false;
    KappaVector kappa;
    bool theorem_backed = false;
    std::optional<std::string> violated_stage;  // "kappa0" | "kappa1"
    std::vector<int> witness_rows;
    std::vector<int> witness_cols;
    std::vector<int> witness_principal;
};

MembershipCertificate certify_membership(const Tensor3& x, int r);

// Compression onto the span of the slice column spaces: n' = kappa_0(x),
// basis = the n x n' pivot columns of (A_1 ... A_m), and core y the unique
// m x n' x n' symmetric tensor with A_i = B Y_i B^T.
struct Compression {
    int n_prime = 0;
    QMatrix basis;
    Tensor3 core;
};

Compression subspace_compress(const Tensor3& x);

// Expands a compressed tensor back: slices B Y_i B^T.
Tensor3 expand(const QMatrix& basis, const Tensor3& core);

// True iff det(t1 A1 + t2 A2 + t3 A3) vanishes identically (the locus P);
// the ternary form is expanded symbolically, exact arithmetic.
bool det_pencil_vanishes(const Tensor3& x);

// Inheritance test: the m=3 Pfaffian rank condition kappa_1 <= 2r applied
// to every coordinate triple and `samples` random 3 x m projections of x.
// Necessary for border rank <= r; deterministic in seed.
bool inherited_pfaffian_check(const Tensor3& x, int r, int samples, std::uint64_t seed);

// Projective dimension of sigma_r of P(U*) x P(V*) in O(1,2) by a
// randomized Terracini probe over F_p: rank of stacked tangent spaces at r
// random points, max over `trials`, minus one.
int terracini_dimension(int m, int n, int r, int trials, std::uint64_t seed, std::uint64_t p);

}  // namespace exflat
