#include "doctest.h"
#include "hz/genfun.hpp"
#include "hz/sheaf.hpp"

#include <functional>

using namespace hz;

namespace {

// number of partitions of k, by listing them
long partitions_by_listing(long k) {
    long count = 0;
    std::function<void(long, long)> rec = [&](long rest, long largest) {
        if (rest == 0) {
            ++count;
            return;
        }
        for (long part = std::min(rest, largest); part >= 1; --part) rec(rest - part, part);
    };
    rec(k, k);
    return count;
}

long quadruple_count(long a, long b, long d) {
    long total = 0;
    for (long k1 = 0; a * k1 <= d; ++k1)
        for (long k4 = 0; a * (k1 + k4) <= d; ++k4)
            for (long k2 = 0; a * (k1 + k4) + b * k2 <= d; ++k2) {
                long rest = d - a * (k1 + k4) - b * k2;
                if (rest % b) continue;
                long k3 = rest / b;
                total += partitions_by_listing(k1) * partitions_by_listing(k2) * partitions_by_listing(k3) *
                         partitions_by_listing(k4);
            }
    return total;
}

HalfExpLaurent series(long min2, std::initializer_list<std::pair<long, long>> terms) {
    HalfExpLaurent s(min2);
    for (auto [e, c] : terms) s.add_term(2 * e, Rat(c));
    return s;
}

EnumerationOptions one_thread() {
    EnumerationOptions o;
    o.threads = 1;
    return o;
}

}  // namespace

TEST_CASE("rank 1 series") {
    auto P = derive_params(1, 2, 0);
    auto s = rank1_series(P, {0, 0}, -2);
    CHECK(s.series == series(-2, {{2, 1}, {1, 2}, {0, 7}, {-1, 14}}));
    // P^1 x P^1: chi_E of O is 1
    s = rank1_series(derive_params(1, 1, 0), {0, 0}, 0);
    CHECK(s.series.max2exp() == 2);
    CHECK(s.series.coeff(2) == 1);
    CHECK(s.series.coeff(0) == 4);

    for (auto [a, b, r] : {std::array<long, 3>{1, 1, 0}, {1, 2, 0}, {2, 3, 1}}) {
        auto H = derive_params(a, b, r);
        long top2 = (H.C);  // class (0,0): doubled chi_E = C
        auto w = rank1_series(H, {0, 0}, top2 - 60);
        for (long d = 0; d <= 30; ++d) CHECK(w.series.coeff(top2 - 2 * d) == quadruple_count(a, b, d));
        // leading exponent is chi_E of the hull
        for (long m = -2; m <= 2; ++m)
            for (long n = -2; n <= 2; ++n) {
                Rat chi = modified_hilbert_polynomial(H, {m, n}).coeff(0);
                auto v = rank1_series(H, {m, n}, -40);
                if (2 * chi >= -40) CHECK(make_rat(Int(v.series.max2exp()), Int(2)) == chi);
                // each coefficient is a rank-1 quotient count at that chi
                PartitionQuadruple q;
                q.parts[1] = {1};
                Rat c = rank1_quotient_chi({m, n}, q, H);
                if (2 * c >= -40) CHECK(v.series.coeff(Rat(2 * c).get_num().get_si()) >= 1);
            }
    }
}

TEST_CASE("vb to tf") {
    auto P = derive_params(1, 2, 0);
    for (long m = -1; m <= 1; ++m) {
        auto one = rank1_series(P, {m, 0}, -20);
        SeriesWindow vb{-20, HalfExpLaurent::monomial(one.series.max2exp(), Rat(1), -20)};
        CHECK(vb_to_tf(vb, 1, P).series == one.series);
    }
    SeriesWindow zero{-10, HalfExpLaurent(-10)};
    CHECK(vb_to_tf(zero, 2, P).series.empty());
    auto Q = derive_params(1, 1, 0);
    SeriesWindow unit{-10, HalfExpLaurent::monomial(0, Rat(1), -10)};
    auto tf = vb_to_tf(unit, 2, Q);
    CHECK(tf.series.coeff(0) == 1);
    CHECK(tf.series.coeff(-2) == 8);
    // agrees with multiplying by the geometric factors one at a time
    HalfExpLaurent prod = unit.series;
    for (long k = 1; k <= 5; ++k) prod = prod * geometric_factor(Rat(k), 8, -10);
    CHECK(tf.series == prod.truncated(-10));
    CHECK_THROWS_AS(vb_to_tf(unit, 0, Q), DomainError);
}

TEST_CASE("rank 2 engines agree at r = 0") {
    for (auto [a, b] : {std::pair<long, long>{1, 1}, {1, 2}, {1, 3}, {2, 3}}) {
        auto P = derive_params(a, b, 0);
        long top2 = P.C;
        long min2 = top2 - 24;  // 13 integer exponents
        auto c = run_engine(Engine::csets, P, {0, 0}, min2, one_thread());
        auto z = run_engine(Engine::r0, P, {0, 0}, min2, one_thread());
        CHECK(c.stabilized);
        CHECK(z.stabilized);
        CHECK(c.window.series == z.window.series);
    }
    for (long m = 0; m <= 1; ++m)
        for (long n = 0; n <= 1; ++n) {
            auto P = derive_params(1, 2, 0);
            CHECK(rank2_vb_csets(P, {m, n}, -8).series == rank2_vb_r0(1, 2, {m, n}, -8).series);
        }
}

TEST_CASE("csets against direct lambda enumeration") {
    for (auto [a, b, r] : std::vector<std::array<long, 3>>{{1, 2, 0}, {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {2, 3, 1}}) {
        auto P = derive_params(a, b, r);
        for (long m = 0; m <= 1; ++m)
            for (long n = 0; n <= 1; ++n) {
                long top2 = (2 * (P.C - r) * n + 4 * P.C + 4 * m + 2 * m * n - n * n * r) / 2;
                auto c = run_engine(Engine::csets, P, {m, n}, top2 - 12, one_thread());
                auto l = run_engine(Engine::lambda, P, {m, n}, top2 - 12, one_thread());
                CHECK(c.window.series == l.window.series);
            }
    }
}

TEST_CASE("lambda engine against the sheaf data") {
    // slow oracle: every box datum through stability_check and rank2_c1_chi
    for (auto [a, b, r] : std::vector<std::array<long, 3>>{{1, 2, 0}, {2, 3, 1}}) {
        auto P = derive_params(a, b, r);
        const long M = 6;
        for (long m = 0; m <= 1; ++m)
            for (long n = 0; n <= 1; ++n) {
                Counts expect;
                for (long L1 = 0; L1 <= M; L1 += a)
                    for (long L2 = 0; L2 <= M; ++L2)
                        for (long L3 = 0; L3 <= M; L3 += b)
                            for (long L4 = 0; L4 <= M; ++L4) {
                                long sm = m + L1 + L3 + r * L4, sn = n + L2 + L4;
                                if (sm % 2 || sn % 2) continue;
                                for (const auto& t : all_incidence_types()) {
                                    Rank2Datum d;
                                    d.B1 = -sm / 2;
                                    d.B2 = -sn / 2;
                                    d.Lambda = {L1, L2, L3, L4};
                                    d.incidence = t;
                                    try {
                                        validate_rank2(d, P);
                                    } catch (const DomainError&) {
                                        continue;
                                    }
                                    if (!stability_check(d, P)) continue;
                                    auto inv = rank2_c1_chi(d, P);
                                    CHECK(inv.c1 == PicClass{m, n});
                                    expect[Rat(2 * inv.chi).get_num().get_si()] += euler_weight(t);
                                }
                            }
                std::erase_if(expect, [](const auto& kv) { return kv.second == 0; });
                CHECK(enumerate_lambda(P, {m, n}, -100000, M) == expect);
            }
    }
}

TEST_CASE("closed forms") {
    CHECK(rank2_vb_closed_p12({0, 0}, -8).series == series(-8, {{2, 2}, {0, 5}, {-2, 8}, {-4, 18}}));
    CHECK(rank2_vb_closed_p12({1, 0}, -8).series ==
          series(-8, {{3, 2}, {2, 4}, {1, 6}, {0, 8}, {-1, 12}, {-2, 12}, {-3, 14}, {-4, 20}}));
    CHECK(rank2_vb_closed_p12({0, 1}, -8).series ==
          series(-8, {{4, 2}, {3, 1}, {2, 6}, {1, 1}, {0, 9}, {-1, 5}, {-2, 14}, {-3, -3}, {-4, 17}}));
    auto s11 = rank2_vb_closed_p12({1, 1}, -8).series;
    CHECK(s11.max2exp() == 12);
    CHECK(s11.coeff(12) == 2);
    CHECK(rank2_f(derive_params(1, 2, 0), 1, 1) == make_rat(15, 2));
    // shifted classes reduce to the four above
    auto P = derive_params(1, 2, 0);
    auto base = rank2_vb_closed_p12({0, 0}, -8);
    auto moved = rank2_vb_closed_p12({2, 0}, -8 + 4);
    CHECK(moved.series == base.series.shifted(4));
    CHECK(tensor_shift(1, 0, {0, 0}, P) == 2);
    CHECK_THROWS_AS(enumerate_closed_p12({2, 0}, -8, 4), DomainError);
    CHECK_THROWS_AS(run_engine(Engine::closed, derive_params(1, 3, 0), {0, 0}, -8), DomainError);
}

TEST_CASE("shift covariance") {
    auto P = derive_params(1, 2, 0);
    long min2 = -8;
    auto base = rank2_vb_csets(P, {0, 0}, min2);
    for (auto [i, j] : {std::pair<long, long>{1, 0}, {0, 1}, {1, 1}, {-1, 0}}) {
        long g2 = 2 * tensor_shift(i, j, {0, 0}, P).get_num().get_si();
        auto moved = rank2_vb_csets(P, {2 * i, 2 * j}, min2 + g2);
        CHECK(moved.series == base.series.shifted(g2));
    }
    auto H = derive_params(2, 3, 1);
    auto b2 = rank2_vb_csets(H, {1, 0}, 0);
    long g2 = 2 * tensor_shift(0, 1, {1, 0}, H).get_num().get_si();
    CHECK(rank2_vb_csets(H, {1, 2}, g2).series == b2.series.shifted(g2));
}

TEST_CASE("stabilization and threads") {
    auto P = derive_params(1, 2, 0);
    EnumerationOptions o;
    o.threads = 3;
    auto par = run_engine(Engine::csets, P, {0, 1}, -8, o);
    auto seq = run_engine(Engine::csets, P, {0, 1}, -8, one_thread());
    CHECK(par.window.series == seq.window.series);
    CHECK(par.bounds == seq.bounds);
    REQUIRE(par.passes.size() >= 3);
    CHECK(par.stabilized);
    for (std::size_t k = 1; k < par.bounds.size(); ++k) CHECK(par.bounds[k] == 2 * par.bounds[k - 1]);
    // too small a cap leaves the run unstabilized and the report says so
    EnumerationOptions tiny;
    tiny.initial_bound = 2;
    tiny.max_bound = 4;
    auto cut = run_engine(Engine::csets, P, {0, 0}, -8, tiny);
    CHECK_FALSE(cut.stabilized);
    auto rep = compare_runs(P, {0, 0}, -8, {cut});
    CHECK_FALSE(rep.pass);
    CHECK_THROWS_AS(run_engine(Engine::csets, derive_params(1, 2, -1), {0, 0}, -8), DomainError);
    CHECK_THROWS_AS(run_engine(Engine::r0, derive_params(1, 2, 1), {0, 0}, -8), DomainError);
}

TEST_CASE("crosscheck report") {
    auto rep = crosscheck(derive_params(2, 3, 0), {0, 0}, -8);
    CHECK(rep.pass);
    CHECK(rep.runs.size() == 2);
    rep = crosscheck(derive_params(1, 2, 0), {0, 1}, -8);
    CHECK(rep.runs.size() == 3);
    for (const auto& run : rep.runs)
        if (run.engine != Engine::closed) CHECK(run.window.series.coeff(-6) == -4);
    CHECK(rep.runs[2].window.series.coeff(-6) == -3);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.first_disagreement);
    CHECK(*rep.first_disagreement == 6);  // q^3: csets 0, closed 1
    CHECK(parse_engine("csets") == Engine::csets);
    CHECK(engine_name(Engine::closed) == "closed");
    CHECK_THROWS_AS(parse_engine("nope"), DomainError);
}
