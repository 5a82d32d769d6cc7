#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "exflat/fp.hpp"
#include "exflat/matrix.hpp"
#include "exflat/tensor.hpp"

namespace exflat {

// Coordinates on U (x) S^2 V (symmetric: x_{i,(a,b)}, 1 <= a <= b <= n,
// D = m n(n+1)/2 variables) or on U (x) V (x) W (general: x_{i,a,b},
// D = m n k). Variables are ordered slice-major, colex within a slice.
struct CoordinateSystem {
    int m = 0, n = 0, k = 0;
    bool symmetric = false;

    static CoordinateSystem sym(int m, int n) { return {m, n, n, true}; }
    static CoordinateSystem general(int m, int n, int k) { return {m, n, k, false}; }

    int dim() const { return symmetric ? m * n * (n + 1) / 2 : m * n * k; }
    // 1-based (i, a, b); the symmetric map identifies (a,b) with (b,a).
    int var_index(int i, int a, int b) const;
    // Inverse of var_index: (i, a, b) with a <= b in the symmetric case.
    void var_triple(int v, int& i, int& a, int& b) const;
    std::string var_name(int v) const;

    bool operator==(const CoordinateSystem&) const = default;
};

// Exponent vector over the D variables of a coordinate system.
using Exponents = std::vector<std::uint8_t>;

// Homogeneous polynomial in the tensor coordinates, no zero terms stored.
class SparsePoly {
public:
    explicit SparsePoly(CoordinateSystem cs) : cs_(cs) {}

    const CoordinateSystem& coords() const { return cs_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial

    void add_term(const Exponents& e, const Rational& c);
    void negate();

    Rational evaluate(const Tensor3& x) const;

    bool operator==(const SparsePoly&) const = default;

private:
    CoordinateSystem cs_;
    std::map<Exponents, Rational> terms_;
};

// Matrix whose entries are single signed variables or zero; the symbolic
// realization of psi_{j,x} and of the m=3 skew form.
struct SymbolicMatrix {
    struct Entry {
        int var = -1;  // -1 = zero entry
        int sign = 1;
    };
    int rows = 0, cols = 0;
    std::vector<Entry> e;

    Entry& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
    const Entry& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }
};

SymbolicMatrix symbolic_flattening(const CoordinateSystem& cs, int j);
// The 3n x 3n block form [[0,A3,-A2],[-A3,0,A1],[A2,-A1,0]]; symmetric m=3 only.
SymbolicMatrix symbolic_pfaffian_form(const CoordinateSystem& cs);

QMatrix evaluate(const SymbolicMatrix& sym, const Tensor3& x);

// All size x size minors of the symbolic psi_{j,x}, one polynomial per
// (row subset, column subset) pair, row-subset-major, subsets in colex
// order. Guard: size <= 10.
std::vector<SparsePoly> minor_generators(int m, int n, int k, bool symmetric, int j, int size);

// Single minor for a fixed choice of (1-based) rows and columns.
SparsePoly minor_generator(const CoordinateSystem& cs, int j, const std::vector<int>& rows,
                           const std::vector<int>& cols);

// Principal Pfaffians of the 3n x 3n skew form, one per size-subset of
// {1..3n} in colex order; degree size/2. Guard: size even, <= 12.
std::vector<SparsePoly> pfaffian_generators(int n, int size);

// Single principal Pfaffian for a fixed (1-based) index subset.
SparsePoly pfaffian_generator(int n, const std::vector<int>& indices);

// Dimension over F_p of the span of homogeneous polynomials of one common
// degree: rank of the (polys x monomials) coefficient matrix.
int span_dimension(const std::vector<SparsePoly>& polys, std::uint64_t p);

// True iff f lies in the F_p-span of polys (span ranks with and without f).
bool in_span(const SparsePoly& f, const std::vector<SparsePoly>& polys, std::uint64_t p);

// Text export: one line per term "coeff e_1 ... e_D", generators separated
// by "---" lines.
void write_generators(std::ostream& os, const std::vector<SparsePoly>& polys);

}  // namespace exflat
