/**
 * @file lattice.hpp
 * @brief Integer matrices: Smith normal form, kernels, cokernels.
 */
#pragma once

#include "hz/arith.hpp"

#include <initializer_list>
#include <vector>

namespace hz {

using IntVec = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix(std::size_t rows = 0, std::size_t cols = 0) : r_(rows), c_(cols), e_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Int& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntVec operator*(const IntVec& v) const;
    bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }
    IntMatrix transpose() const;
    IntMatrix drop_col(std::size_t j) const;
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row(std::size_t dst, std::size_t src, const Int& k);  // row dst += k * row src
    void add_col(std::size_t dst, std::size_t src, const Int& k);

    std::string str() const;

private:
    std::size_t r_, c_;
    std::vector<Int> e_;
};

Int det(const IntMatrix& m);  // Bareiss, square only

struct SnfResult {
    IntMatrix U, D, V;
};

struct AbelianGroupStructure {
    int free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility chain
    bool operator==(const AbelianGroupStructure& o) const = default;
};

SnfResult smith_normal_form(const IntMatrix& m);
std::vector<IntVec> integer_kernel(const IntMatrix& m);
AbelianGroupStructure cokernel_invariants(const IntMatrix& m);
int matrix_rank(const IntMatrix& m);

// Row-style Hermite normal form of the lattice spanned by the given vectors;
// zero rows dropped, pivots positive, entries above pivots reduced.
std::vector<IntVec> hermite_basis(const std::vector<IntVec>& gens, std::size_t dim);
bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b, std::size_t dim);

// extended gcd: g = s*x + t*y with g >= 0
void xgcd(const Int& x, const Int& y, Int& g, Int& s, Int& t);

// Row i (1-based) of the weighted projective matrix; lambdas[k-1] = gcd(w_k..w_{n+1}).
IntVec solve_gcd_chain_row(int i, const std::vector<Int>& weights, const std::vector<Int>& lambdas);
std::vector<Int> suffix_gcds(const std::vector<Int>& weights);

}  // namespace hz
