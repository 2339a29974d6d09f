#include "doctest.h"
#include "hz/fan.hpp"

#include <functional>
#include <random>

using namespace hz;

namespace {

std::vector<IntVec> free_rays(const StackyFan& f) {
    std::vector<IntVec> out;
    for (const auto& r : f.rays) out.push_back(r.free);
    return out;
}

StackyFan point_fan() {
    StackyFan f;
    f.cones = {{}};
    return f;
}

StackyFan fan_from(int rank, std::vector<IntVec> rays, std::vector<Cone> cones) {
    StackyFan f;
    f.lattice.free_rank = rank;
    for (auto& r : rays) f.rays.push_back({r, {}});
    f.cones = cones;
    validate_fan(f);
    return f;
}

// brute-force colex-minimal c: compare from the last coordinate
std::vector<Int> colex_min_c(const std::vector<Int>& wr, long lam) {
    std::size_t N = wr.size();
    std::vector<Int> best, cur(N);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == N) {
            Int s = 0;
            for (std::size_t i = 0; i < N; ++i) s += cur[i] * wr[i];
            if (mod_floor(s, Int(lam)) != 1) return;
            if (best.empty() || std::lexicographical_compare(cur.rbegin(), cur.rend(), best.rbegin(), best.rend()))
                best = cur;
            return;
        }
        for (long v = 0; v < lam; ++v) {
            cur[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return best;
}

}  // namespace

TEST_CASE("wps fan examples") {
    CHECK(free_rays(wps_fan({1, 1})) == std::vector<IntVec>{{1}, {-1}});
    CHECK(free_rays(wps_fan({2, 3})) == std::vector<IntVec>{{3}, {-2}});
    CHECK(free_rays(wps_fan({2, 1})) == std::vector<IntVec>{{1}, {-2}});
    auto f = wps_fan({1, 2, 4, 8});
    CHECK(f.free_matrix() == IntMatrix({{2, 1, 1, -1}, {0, 2, 1, -1}, {0, 0, 2, -1}}));
    CHECK(f.cones.size() == 4);
    CHECK_THROWS_AS(wps_fan({2, 4}), DomainError);
    CHECK_THROWS_AS(wps_fan({1}), DomainError);
    CHECK_THROWS_AS(wps_fan({0, 1}), DomainError);
}

TEST_CASE("wps fan minor identities on random weights") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(2, 5), ent(1, 50);
    int done = 0;
    while (done < 100) {
        std::vector<Int> w(len(rng));
        Int g = 0;
        for (auto& x : w) {
            x = ent(rng);
            g = gcd(g, x);
        }
        if (g != 1) continue;
        ++done;
        auto B = wps_fan(w).free_matrix();
        std::size_t n = w.size() - 1;
        CHECK(B * w == IntVec(n, Int(0)));
        Int mg = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            Int d = det(B.drop_col(i));
            CHECK(d == (((n - i) % 2 == 0) ? w[i] : Int(-w[i])));
            mg = gcd(mg, d);
        }
        CHECK(mg == 1);
        // upper triangular with diagonal lambda_{i+1}/lambda_i, off-diagonal reduced
        auto lam = suffix_gcds(w);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) CHECK(B(i, j) == 0);
            CHECK(B(i, i) == lam[i + 1] / lam[i]);
        }
    }
}

TEST_CASE("wps gerbe fan") {
    struct Case {
        std::vector<Int> w;
        std::vector<IntVec> base;
        std::vector<Int> c;
    };
    std::vector<Case> cases = {{{2, 2}, {{1}, {-1}}, {1, 0}},
                               {{2, 4}, {{2}, {-1}}, {1, 0}},
                               {{3, 3, 3}, free_rays(wps_fan({1, 1, 1})), {1, 0, 0}}};
    for (const auto& cs : cases) {
        auto f = wps_gerbe_fan(cs.w);
        CHECK(free_rays(f) == cs.base);
        Int lam = f.lattice.torsion.at(0);
        std::vector<Int> c;
        for (const auto& r : f.rays) c.push_back(r.torsion.at(0));
        CHECK(c == cs.c);
    }
    std::vector<std::vector<Int>> more = {{2, 2}, {2, 4}, {3, 3, 3}, {4, 6, 10}, {6, 9}, {6, 12, 18, 30}, {5, 10, 15}, {4, 4, 6}};
    for (const auto& w : more) {
        auto f = wps_gerbe_fan(w);
        Int lam = f.lattice.torsion.at(0);
        std::vector<Int> wr, c;
        for (const auto& x : w) wr.push_back(x / lam);
        for (const auto& r : f.rays) c.push_back(r.torsion.at(0));
        CHECK(c == colex_min_c(wr, lam.get_si()));
        // [B' 0; c lam] has integer null space spanned by (w, *)
        IntMatrix BQ = f.beta_matrix();
        IntMatrix M(BQ.rows(), BQ.cols() + 1);
        for (std::size_t i = 0; i < BQ.rows(); ++i)
            for (std::size_t j = 0; j < BQ.cols(); ++j) M(i, j) = BQ(i, j);
        M(BQ.rows() - 1, BQ.cols()) = lam;
        Int x = 0;
        for (std::size_t i = 0; i < w.size(); ++i) x -= c[i] * wr[i];
        IntVec gen = w;
        gen.push_back(x);
        CHECK(same_lattice(integer_kernel(M), {gen}, gen.size()));
    }
    CHECK_THROWS_AS(wps_gerbe_fan({1, 2}), DomainError);
}

TEST_CASE("line bundle total space") {
    auto p21 = wps_fan({2, 1});
    auto f = line_bundle_total_space(p21, {-1, -1});
    CHECK(free_rays(f) == std::vector<IntVec>{{1, 1}, {-2, 1}, {0, 1}});
    CHECK(f.cones == std::vector<Cone>{{0, 2}, {1, 2}});

    // trivial bundle over P^1 is P^1 x A^1
    auto p1 = wps_fan({1, 1});
    auto t = line_bundle_total_space(p1, {0, 0});
    auto prod = fan_from(2, {{1, 0}, {-1, 0}, {0, 1}}, {{0, 2}, {1, 2}});
    CHECK(fans_equivalent(t, prod));

    auto c1 = fan_from(1, {{1}}, {{0}});
    CHECK(free_rays(line_bundle_total_space(c1, {-2})) == std::vector<IntVec>{{1, 2}, {0, 1}});

    // dropping the last coordinate of the original rays recovers the base
    for (const auto& coeffs : std::vector<std::vector<Int>>{{3, -5}, {0, 7}, {-1, -2}}) {
        auto g = line_bundle_total_space(p21, coeffs);
        for (std::size_t i = 0; i < p21.n_rays(); ++i) {
            IntVec v = g.rays[i].free;
            CHECK(v.back() == -coeffs[i]);
            v.pop_back();
            CHECK(v == p21.rays[i].free);
        }
    }
    CHECK_THROWS_AS(line_bundle_total_space(wps_gerbe_fan({2, 2}), {0, 0}), DomainError);
    CHECK_THROWS_AS(line_bundle_total_space(p21, {0}), DomainError);
}

TEST_CASE("hirzebruch fan") {
    CHECK(free_rays(hirzebruch_fan(2, 1, 2)) == std::vector<IntVec>{{1, 0}, {0, 1}, {-2, 2}, {0, -1}});
    CHECK(free_rays(hirzebruch_fan(1, 1, 0)) == std::vector<IntVec>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(free_rays(hirzebruch_fan(2, 3, 1)) == std::vector<IntVec>{{3, 2}, {0, 1}, {-2, -1}, {0, -1}});
    CHECK_THROWS_AS(hirzebruch_fan(2, 4, 0), DomainError);
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (long r = -6; r <= 6; ++r) {
                long s, t;
                canonical_st(a, b, r, s, t);
                CHECK(s * a + t * b == r);
                CHECK(s >= 0);
                CHECK(s < b);
                auto f = hirzebruch_fan(a, b, r);
                CHECK(f.cones.size() == 4);
            }
        }
}

TEST_CASE("projective bundle") {
    auto p21 = wps_fan({2, 1});
    auto f = projective_bundle(p21, {{0, 0}, {0, 2}});
    CHECK(free_rays(f) == std::vector<IntVec>{{1, 0}, {-2, 2}, {0, -1}, {0, 1}});
    CHECK(fans_equivalent(f, hirzebruch_fan(2, 1, 2)));

    auto p1 = wps_fan({1, 1});
    CHECK(fans_equivalent(projective_bundle(p1, {{0, 0}, {0, 0}}), hirzebruch_fan(1, 1, 0)));

    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b) {
            if (std::gcd(a, b) != 1) continue;
            auto base = wps_fan({Int(a), Int(b)});
            for (long r = -6; r <= 6; ++r) {
                long s, t;
                canonical_st(a, b, r, s, t);
                auto pb = projective_bundle(base, {{0, 0}, {Int(s), Int(t)}});
                CHECK(fans_equivalent(pb, hirzebruch_fan(a, b, r)));
            }
        }

    // P^2 fiber: r+1 maximal cones per base cone
    auto p2 = projective_bundle(p1, {{0, 0}, {1, 0}, {0, 3}});
    CHECK(p2.cones.size() == 6);
    CHECK(p2.lattice.free_rank == 3);
    CHECK_THROWS_AS(projective_bundle(p1, {{0, 0}}), DomainError);
}

TEST_CASE("split checks") {
    auto c = fan_from(1, {{1}}, {{0}});
    auto cmu2 = fan_from(1, {{2}}, {{0}});
    auto whole = fan_from(2, {{1, 0}, {2, 2}}, {{0, 1}});
    CHECK(check_split(whole, c, cmu2, {IntMatrix{{1}}}, SplitMode::global));
    CHECK_FALSE(check_split(whole, c, cmu2, {IntMatrix{{2}}}, SplitMode::global));

    // line bundle over [C/mu_2] with nontrivial fiber character
    auto twisted = fan_from(2, {{1, 0}, {1, 2}}, {{0, 1}});
    for (long A = -10; A <= 10; ++A) CHECK_FALSE(check_split(twisted, c, cmu2, {IntMatrix{{A}}}, SplitMode::global));

    // locally but not globally split line bundle over P(2,1)
    auto p21 = wps_fan({2, 1});
    auto loc = fan_from(2, {{1, 0}, {1, 1}, {2, -2}}, {{0, 1}, {0, 2}});
    CHECK(check_split(loc, c, p21, {IntMatrix{{1}}, IntMatrix{{-1}}}, SplitMode::local));
    for (long A = -5; A <= 5; ++A) CHECK_FALSE(check_split(loc, c, p21, {IntMatrix{{A}}}, SplitMode::global));

    // any fan against itself and a point
    auto h = hirzebruch_fan(2, 3, 1);
    CHECK(check_split(h, h, point_fan(), {IntMatrix(2, 0)}, SplitMode::global));
    CHECK(check_split(h, point_fan(), h, {IntMatrix(0, 2)}, SplitMode::global));

    // zero divisors: base times fiber with A = 0
    auto base = wps_fan({2, 3});
    auto pb = projective_bundle(base, {{0, 0}, {0, 0}});
    auto fiber = projective_bundle(point_fan(), {{}, {}});
    CHECK(check_split(pb, base, fiber, {IntMatrix(1, 1)}, SplitMode::global));
    auto pb2 = projective_bundle(wps_fan({1, 1, 1}), {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK(check_split(pb2, wps_fan({1, 1, 1}), projective_bundle(point_fan(), {{}, {}, {}}), {IntMatrix(2, 2)},
                      SplitMode::global));

    CHECK_THROWS_AS(check_split(whole, c, p21, {IntMatrix{{1}}}, SplitMode::global), DomainError);
    CHECK_THROWS_AS(check_split(whole, c, cmu2, {IntMatrix{{1}}, IntMatrix{{1}}}, SplitMode::global), DomainError);
}
