#include "doctest.h"
#include "hz/lattice.hpp"

#include <functional>
#include <random>

using namespace hz;

namespace {

// d_1 ... d_k from gcds of k x k minors
std::vector<Int> determinantal_invariants(const IntMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    std::vector<Int> dk{Int(1)};
    for (std::size_t k = 1; k <= std::min(R, C); ++k) {
        Int g = 0;
        std::vector<std::size_t> ri(k), ci(k);
        std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::size_t,
                           std::function<void()>)>
            choose = [&](std::size_t start, std::size_t n, std::vector<std::size_t>& out,
                         std::size_t depth, std::function<void()> f) {
                if (depth == out.size()) return f();
                for (std::size_t x = start; x < n; ++x) {
                    out[depth] = x;
                    choose(x + 1, n, out, depth + 1, f);
                }
            };
        choose(0, R, ri, 0, [&] {
            choose(0, C, ci, 0, [&] {
                IntMatrix sub(k, k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
                g = gcd(g, det(sub));
            });
        });
        if (g == 0) break;
        dk.push_back(g);
    }
    std::vector<Int> inv;
    for (std::size_t k = 1; k < dk.size(); ++k) inv.push_back(dk[k] / dk[k - 1]);
    return inv;
}

std::vector<Int> snf_diagonal(const SnfResult& s) {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i)
        if (s.D(i, i) != 0) d.push_back(s.D(i, i));
    return d;
}

void check_snf(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.V)) == 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(s.D(i, j) == 0);
    auto d = snf_diagonal(s);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    CHECK(d == determinantal_invariants(m));
}

}  // namespace

TEST_CASE("smith normal form examples") {
    auto s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.D == IntMatrix::identity(2));
    s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.D == IntMatrix({{1, 0}, {0, 6}}));
    // Hirzebruch B for (a,b,r) = (2,1,2), (s,t) = (0,2)
    s = smith_normal_form(IntMatrix{{1, 0, -2, 0}, {0, 1, 2, -1}});
    CHECK(s.D == IntMatrix({{1, 0, 0, 0}, {0, 1, 0, 0}}));
    check_snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ent(-50, 50), dim(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = ent(rng) * (trial % 4 == 0 ? 2 : 1);
        check_snf(m);
    }
}

TEST_CASE("integer kernel") {
    auto k = integer_kernel(IntMatrix{{1, 0, -2, 0}, {0, 1, 2, -1}});
    CHECK(same_lattice(k, {{2, 0, 1, 2}, {0, 1, 0, 1}}, 4));
    CHECK(integer_kernel(IntMatrix::identity(3)).empty());
    // kernel of [2 1 1 -1; 0 2 1 -1; 0 0 2 -1] is spanned by the weights (1,2,4,8)
    k = integer_kernel(IntMatrix{{2, 1, 1, -1}, {0, 2, 1, -1}, {0, 0, 2, -1}});
    CHECK(same_lattice(k, {{1, 2, 4, 8}}, 4));
    // non-saturated generators: 2e1 does not span the kernel of [0 1]
    k = integer_kernel(IntMatrix{{0, 1}});
    CHECK(k == std::vector<IntVec>{{1, 0}});
    CHECK_FALSE(same_lattice(k, {{2, 0}}, 2));
}

TEST_CASE("kernel basis size and membership on random matrices") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> ent(-6, 6), dim(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = ent(rng);
        auto k = integer_kernel(m);
        CHECK(static_cast<int>(k.size()) == static_cast<int>(m.cols()) - matrix_rank(m));
        for (const auto& v : k) CHECK(m * v == IntVec(m.rows(), Int(0)));
    }
}

TEST_CASE("cokernel invariants") {
    IntMatrix B{{2, 1, 1, -1}, {0, 2, 1, -1}, {0, 0, 2, -1}};
    auto g = cokernel_invariants(B.transpose());
    CHECK(g.free_rank == 1);
    CHECK(g.torsion.empty());
    g = cokernel_invariants(IntMatrix(1, 1));
    CHECK(g.free_rank == 1);
    g = cokernel_invariants(IntMatrix{{2}});
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<Int>{2});
    // invariance under unimodular changes
    IntMatrix m{{4, 6}, {2, 8}, {0, 2}};
    IntMatrix P{{1, 2, 0}, {0, 1, 0}, {3, 7, 1}}, Q{{2, 1}, {1, 1}};
    CHECK(cokernel_invariants(P * m * Q) == cokernel_invariants(m));
}

TEST_CASE("gcd chain rows") {
    std::vector<Int> w{1, 2, 4, 8};
    auto lam = suffix_gcds(w);
    CHECK(lam == std::vector<Int>{1, 2, 4, 8});
    auto r1 = solve_gcd_chain_row(1, w, lam);
    Int s = 0;
    for (int j = 0; j < 4; ++j) s += r1[j] * w[j];
    CHECK(s == 0);
    CHECK(r1[0] == 2);
    CHECK(r1 == IntVec{2, 1, 1, -1});

    auto ab = solve_gcd_chain_row(1, {2, 3}, suffix_gcds({2, 3}));
    CHECK(ab == IntVec{3, -2});

    // exhaustive oracle for (1,1,1): 1 + b12 + b13 = 0 with 0 <= b12 < 1
    std::vector<Int> w3{1, 1, 1};
    auto row = solve_gcd_chain_row(1, w3, suffix_gcds(w3));
    std::vector<IntVec> sols;
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
            if (1 + x + y == 0 && x >= 0 && x < 1) sols.push_back({1, x, y});
    REQUIRE(sols.size() == 1);
    CHECK(row == sols[0]);
}
