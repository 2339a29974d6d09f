#include "doctest.h"
#include "hz/sheaf.hpp"

#include <random>

using namespace hz;

namespace {

Rank2Datum datum(std::array<long, 4> L, Incidence inc, long B1 = 0, long B2 = 0) {
    Rank2Datum d;
    d.B1 = B1;
    d.B2 = B2;
    d.Lambda = L;
    d.incidence = inc;
    return d;
}

const Incidence T1{IncidenceKind::type1, -1, -1};

}  // namespace

TEST_CASE("line bundle data") {
    auto P = derive_params(1, 2, 2);
    CHECK(underlying_c1({{1, 0, 0, 0}}, P) == PicClass{-1, 0});
    CHECK(underlying_c1({{0, 0, 0, 1}}, P) == PicClass{-2, -1});
    CHECK(underlying_c1({{0, 0, 0, 0}}, P) == PicClass{0, 0});

    auto Q = derive_params(2, 3, 1);
    CHECK(fine_gradings({{0, 0, 0, 0}}, Q) == std::array<long, 4>{0, 0, 0, 0});
    CHECK(fine_gradings({{1, 0, 0, 0}}, Q) == std::array<long, 4>{1, 1, 1, 1});
    CHECK(fine_gradings({{0, 1, 0, 0}}, Q) == std::array<long, 4>{2, 1, 0, 0});

    CHECK(gauge_fix({{0, 0, 1, 1}}, P) == EquivLineBundle{{3, 1, 0, 0}});
    CHECK(gauge_fix({{5, -2, 0, 3}}, derive_params(1, 1, 0)) == EquivLineBundle{{5, 1, 0, 0}});

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-9, 9);
    for (long r = -4; r <= 4; ++r) {
        auto H = derive_params(2, 5, r);
        for (int k = 0; k < 50; ++k) {
            EquivLineBundle L{{d(rng), d(rng), d(rng), d(rng)}};
            auto g = gauge_fix(L, H);
            CHECK(gauge_fix(g, H) == g);
            CHECK(underlying_c1(g, H) == underlying_c1(L, H));
            // trivial bundles: B3, B4 free, B1, B2 determined
            EquivLineBundle T{{-L.B[2] - r * L.B[3], -L.B[3], L.B[2], L.B[3]}};
            CHECK(underlying_c1(T, H) == PicClass{0, 0});
            CHECK(fine_gradings(T, H) == std::array<long, 4>{0, 0, 0, 0});
        }
    }
}

TEST_CASE("incidence types") {
    auto all = all_incidence_types();
    CHECK(all.size() == 11);
    for (const auto& t : all) {
        auto blocks = incidence_blocks(t);
        CHECK(blocks.size() == (t.kind == IncidenceKind::type1 ? 4u : 3u));
    }
    CHECK(euler_weight(T1) == -1);
    CHECK(euler_weight({IncidenceKind::type2, 2, -1}) == 1);
    CHECK(euler_weight({IncidenceKind::type3, 0, 3}) == 1);
}

TEST_CASE("stability") {
    auto P = derive_params(1, 1, 0);
    CHECK(stability_check(datum({1, 1, 1, 1}, T1), P));
    CHECK_FALSE(stability_check(datum({3, 1, 1, 1}, T1), P));
    CHECK(stability_check(datum({0, 1, 1, 1}, {IncidenceKind::type2, 0, -1}), P));
    CHECK_THROWS_AS(stability_check(datum({0, 1, 1, 1}, T1), P), DomainError);
    CHECK_THROWS_AS(stability_check(datum({1, 1, 1, 1}, {IncidenceKind::type2, 0, -1}), P), DomainError);
    CHECK_THROWS_AS(stability_check(datum({1, 1, 1, 1}, T1), derive_params(2, 3, 0)), DomainError);

    // the displayed systems, written out literally
    for (long r : {0L, 1L, 2L})
        for (long a : {1L, 2L}) {
            auto H = derive_params(a, 3, r);
            long pq = H.p * H.q;
            for (long L1 = a; L1 <= 4 * a; L1 += a)
                for (long L2 = 1; L2 <= 4; ++L2)
                    for (long L3 = 3; L3 <= 9; L3 += 3)
                        for (long L4 = 1; L4 <= 4; ++L4) {
                            long w4 = (r + pq) * L4;
                            bool t1 = L1 < pq * L2 + L3 + w4 && pq * L2 < L1 + L3 + w4 && L3 < L1 + pq * L2 + w4 &&
                                      w4 < L1 + pq * L2 + L3;
                            CHECK(stability_check(datum({L1, L2, L3, L4}, T1), H) == t1);
                            bool t3 = L1 + pq * L2 < L3 + w4 && L3 < L1 + pq * L2 + w4 && w4 < L1 + pq * L2 + L3;
                            CHECK(stability_check(datum({L1, L2, L3, L4}, {IncidenceKind::type3, 0, 1}), H) == t3);
                            bool t2 = pq * L2 < L3 + w4 && L3 < pq * L2 + w4 && w4 < pq * L2 + L3;
                            CHECK(stability_check(datum({0, L2, L3, L4}, {IncidenceKind::type2, 0, -1}), H) == t2);
                            // independent of B
                            CHECK(stability_check(datum({L1, L2, L3, L4}, T1, 7, -3), H) == t1);
                        }
        }
    // type1 symmetric under Lambda_1 <-> Lambda_3 when a = b
    auto H = derive_params(1, 1, 1);
    for (long L1 = 1; L1 <= 5; ++L1)
        for (long L3 = 1; L3 <= 5; ++L3)
            CHECK(stability_check(datum({L1, 2, L3, 1}, T1), H) == stability_check(datum({L3, 2, L1, 1}, T1), H));
}

TEST_CASE("rank 2 chern class and chi") {
    auto P = derive_params(1, 2, 0);
    auto inv = rank2_c1_chi(datum({1, 1, 2, 1}, T1), P);
    CHECK(inv.c1 == PicClass{-3, -2});
    CHECK(inv.chi == -3);
    CHECK(inv.chi == rank2_indecomposable_mhp(P, {0, 0, 0, 0}, {1, 1, 2, 1}, {}).coeff(0));

    auto Q = derive_params(1, 1, 0);
    inv = rank2_c1_chi(datum({1, 1, 1, 1}, T1), Q);
    CHECK(inv.c1 == PicClass{-2, -2});
    CHECK(inv.chi == rank2_f(Q, -2, -2) - 2);

    // Lambda = 0 degenerate pattern
    Rank2Datum z;
    z.B1 = 2;
    z.B2 = -1;
    CHECK(rank2_c1_chi(z, P).chi == modified_hilbert_polynomial(P, {-2, 1}).coeff(0) * 2);

    // type1: chi = f(c1) - (L2+L4)(L1 + r L2/2 + L3 - r L4/2)/2, against the sum of P_E
    for (long r : {0L, 1L, 2L, 3L}) {
        auto H = derive_params(2, 3, r);
        for (long B1 = -2; B1 <= 2; ++B1)
            for (long B2 = -2; B2 <= 2; ++B2)
                for (long L1 : {2L, 4L})
                    for (long L2 = 1; L2 <= 3; ++L2)
                        for (long L3 : {3L, 6L})
                            for (long L4 = 1; L4 <= 3; ++L4) {
                                auto v = rank2_c1_chi(datum({L1, L2, L3, L4}, T1, B1, B2), H);
                                Rat expect = rank2_f(H, v.c1.m, v.c1.n) -
                                             Rat(L2 + L4) * (Rat(L1 + L3) + make_rat(Int(r) * (L2 - L4), 2)) / Rat(2);
                                CHECK(v.chi == expect);
                                auto w = rank2_c1_chi(datum({L1, L2, L3, L4}, {IncidenceKind::type3, 1, 2}, B1, B2), H);
                                CHECK(w.chi == v.chi + Rat(L2 * L3));
                                w = rank2_c1_chi(datum({L1, L2, L3, L4}, {IncidenceKind::type3, 0, 2}, B1, B2), H);
                                CHECK(w.chi == v.chi);
                            }
    }
}

TEST_CASE("rank 1 quotients") {
    auto P = derive_params(1, 2, 0);
    PartitionQuadruple q;
    CHECK(rank1_quotient_chi({0, 0}, q, P) == 2);
    q.parts[0] = {1};
    CHECK(rank1_quotient_chi({0, 0}, q, P) == 1);
    q.parts[0] = {};
    q.parts[1] = {1};
    CHECK(rank1_quotient_chi({0, 0}, q, P) == 0);
    // strictly decreasing by a or b per added cell
    auto H = derive_params(2, 3, 1);
    PartitionQuadruple acc;
    Rat prev = rank1_quotient_chi({1, 1}, acc, H);
    for (int k = 0; k < 12; ++k) {
        int which = k % 4;
        acc.parts[which].push_back(1);
        Rat cur = rank1_quotient_chi({1, 1}, acc, H);
        CHECK(prev - cur == ((which == 0 || which == 3) ? H.a : H.b));
        prev = cur;
    }
    q.parts[1] = {1, 2};
    CHECK_THROWS_AS(rank1_quotient_chi({0, 0}, q, P), DomainError);
}

TEST_CASE("tensor shift") {
    auto P = derive_params(1, 2, 0);
    CHECK(tensor_shift(0, 0, {0, 0}, P) == 0);
    CHECK(tensor_shift(1, 0, {0, 0}, P) == 2);
    CHECK(tensor_shift(0, 1, {0, 0}, P) == 4);
    // agrees with the change of f under c1 -> c1 + 2(i, j)
    for (long r = -2; r <= 3; ++r) {
        auto H = derive_params(2, 3, r);
        for (long m = -3; m <= 3; ++m)
            for (long n = -3; n <= 3; ++n)
                for (long i = -2; i <= 2; ++i)
                    for (long j = -2; j <= 2; ++j)
                        CHECK(tensor_shift(i, j, {m, n}, H) == rank2_f(H, m + 2 * i, n + 2 * j) - rank2_f(H, m, n));
    }
}
