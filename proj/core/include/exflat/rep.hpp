#pragma once

#include <optional>
#include <vector>

#include "exflat/rational.hpp"

namespace exflat {

// Weakly decreasing sequence of positive integers; the empty partition is {}.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    // 0-based; parts beyond the length read as 0.
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lam);

// (l - lam_rows, ..., l - lam_1): the complement in the rows x l box, read
// in reverse; nullopt when lam_1 > l and the result is not a partition.
std::optional<Partition> complement(const Partition& lam, int l, int rows);

// dim S_lam(C^n) by the Weyl dimension formula; 0 if lam has more than n parts.
Int schur_dim(const Partition& lam, int n);

// Littlewood-Richardson coefficient c^{nu}_{lam,mu}: the number of LR skew
// tableaux of shape nu/lam and content mu.
long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Character chi^lam of S_d on the conjugacy class of cycle type cls
// (Murnaghan-Nakayama); requires |lam| = |cls|.
long sn_character(const Partition& lam, const Partition& cls);

// Kronecker coefficient K_{pi,lam,mu} = (1/d!) sum over classes of
// |class| chi^pi chi^lam chi^mu; requires equal weights d <= 12.
long kronecker_coefficient(const Partition& pi, const Partition& lam, const Partition& mu);

// All partitions of d (optionally bounded length / largest part), in
// descending lexicographic order: (d), (d-1,1), ..., (1^d).
std::vector<Partition> partitions_of(int d, int max_length = -1, int max_part = -1);

// One irreducible summand S_u(U) (x) S_v(V) [(x) S_w(W)] with multiplicity.
struct SchurSummand {
    Partition u, v;
    std::optional<Partition> w;
    long multiplicity = 1;
    Int dimension;  // multiplicity * product of Weyl dimensions
};

Int total_dimension(const std::vector<SchurSummand>& summands);

// Generators of the kappa_0 <= r ideal in degree r+1:
// direct sum over |pi| = r+1 of S_pi U (x) S_{pi' + 1^{r+1}} V.
std::vector<SchurSummand> decompose_kappa0(int m, int n, int r);

// Generators of the kappa_1 <= 2r Pfaffian ideal in degree r+1 (m = 3):
// direct sum over |pi| = r+1 of S_pi U (x) S_{(3)^{r+1} - pi'} V.
std::vector<SchurSummand> decompose_kappa1_sym(int n, int r);

// Upper bound for the degree-(c+1) generators of kappa_1 <= c in the
// O(1,1,1) case with dim U = 3: multiplicity of S_pi S_lam S_mu is
// min(c^{nu}_{lam',mu'}, K_{pi,lam,mu}) with nu the box complement of pi.
std::vector<SchurSummand> decompose_kappa1_nonsym_bound(int n, int k, int c);

}  // namespace exflat
