#include "hz/hirzebruch.hpp"

#include "hz/fan.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hz {

namespace {

// inverse of x modulo m, m >= 1, gcd(x,m) = 1
long inv_mod(long x, long m) {
    if (m == 1) return 0;
    Int g, s, t;
    xgcd(Int(mod_floor(x, m)), Int(m), g, s, t);
    return mod_floor(s.get_si(), m);
}

Rat frac(long n, long d) { return make_rat(Int(n), Int(d)); }

}  // namespace

HirzebruchParams derive_params(long a, long b, long r) {
    HirzebruchParams P;
    canonical_st(a, b, r, P.s, P.t);  // validates a, b > 0 and coprime
    P.a = a;
    P.b = b;
    P.r = r;
    P.p = gcd0(b, r);
    P.q = gcd0(a, r);
    P.v1 = mod_floor(-r * inv_mod(a, b), b);
    P.v2 = mod_floor(-r * inv_mod(b, a), a);
    long num = r + P.v1 * a + P.v2 * b;
    if (num % (a * b) != 0) throw std::logic_error("derive_params: u not integral");
    P.u = num / (a * b);
    P.C = a + b + a * b - 1;
    return P;
}

std::vector<ChartRecord> chart_weight_tables(const HirzebruchParams& P) {
    long a = P.a, b = P.b, r = P.r, s = P.s, t = P.t;
    std::vector<ChartRecord> out = {
        {1, b, {a, -s * a}, {}, {{{a, 0}, {0, 1}}}, {{{0, 1}, {-1, 0}}}},
        {2, a, {-t * b, b}, {}, {{{r, 1}, {-b, 0}}}, {{{-b, 0}, {-r, -1}}}},
        {3, a, {b, t * b}, {}, {{{-b, 0}, {-r, -1}}}, {{{-r, -1}, {1, 0}}}},
        {4, b, {s * a, a}, {}, {{{0, -1}, {a, 0}}}, {{{a, 0}, {0, 1}}}},
    };
    for (auto& c : out)
        for (int k = 0; k < 2; ++k) c.action_mod[k] = mod_floor(c.action[k], c.order);
    return out;
}

ChiEvaluator::ChiEvaluator(const HirzebruchParams& P) : P_(P) {
    for (long N : {P.p, P.q, P.a, P.b}) {
        if (N <= 1 || inv_.count(N)) continue;
        std::vector<Cyclotomic> tab;
        tab.push_back(Cyclotomic::zero(static_cast<int>(N)));  // k = 0 unused
        for (long k = 1; k < N; ++k) {
            auto one = Cyclotomic::constant(static_cast<int>(N), Rat(1));
            tab.push_back(cyc_inverse(one - Cyclotomic::zeta_pow(static_cast<int>(N), k)));
        }
        inv_.emplace(N, std::move(tab));
    }
}

const Cyclotomic& ChiEvaluator::inv_one_minus(long N, long k) const {
    long kk = mod_floor(k, N);
    if (kk == 0) throw std::logic_error("1/(1 - 1) requested");
    return inv_.at(N)[kk];
}

Rat ChiEvaluator::rho1_sum(long m) const {
    long p = P_.p;
    if (p <= 1) return 0;
    auto S = Cyclotomic::zero(static_cast<int>(p));
    for (long l = 1; l < p; ++l)
        S += Cyclotomic::zeta_pow(static_cast<int>(p), mod_floor(m, p) * l) * inv_one_minus(p, -P_.a * l);
    return rational_part(S);
}

Rat ChiEvaluator::rho3_sum(long m) const {
    long q = P_.q;
    if (q <= 1) return 0;
    auto S = Cyclotomic::zero(static_cast<int>(q));
    for (long l = 1; l < q; ++l)
        S += Cyclotomic::zeta_pow(static_cast<int>(q), mod_floor(m, q) * l) * inv_one_minus(q, -P_.b * l);
    return rational_part(S);
}

Rat ChiEvaluator::operator()(long m, long n) const {
    const auto& P = P_;
    long a = P.a, b = P.b, r = P.r;
    Rat total = frac(1 + n, 2 * a) + frac(1 + n, 2 * b) + make_rat(Int(1 + n) * m, Int(a * b)) -
                make_rat(Int(n) * (n + 1) * r, Int(2 * a * b));
    total += rho1_sum(m) * frac(n + 1, b);
    total += rho3_sum(m) * frac(n + 1, a);

    // sigma_1 + sigma_4 over mu_b, then sigma_2 + sigma_3 over mu_a
    auto sigma = [&](long N, long other, long coef, long divisor) -> Rat {
        if (N <= 1) return 0;
        int Ni = static_cast<int>(N);
        long step = N / divisor;
        auto S = Cyclotomic::zero(Ni);
        auto one = Cyclotomic::constant(Ni, Rat(1));
        long mm = mod_floor(m, N), cc = mod_floor(coef, N), n1 = mod_floor(n + 1, N);
        for (long l = 1; l < N; ++l) {
            if (l % step == 0) continue;
            long e = mod_floor(cc * l, N);  // X = zeta^{-e}
            S += Cyclotomic::zeta_pow(Ni, mm * l) * inv_one_minus(N, -other * l) *
                 (one - Cyclotomic::zeta_pow(Ni, -n1 * e)) * inv_one_minus(N, -e);
        }
        return rational_part(S) / Rat(N);
    };
    total += sigma(b, a, mod_floor(P.s * a, b), P.p);
    total += sigma(a, b, mod_floor(P.t * b, a), P.q);
    total.canonicalize();
    if (!is_integer(total))
        throw DomainError("euler characteristic not integral: " + to_string(total));
    return total;
}

const ChiEvaluator& chi_evaluator(const HirzebruchParams& P) {
    static std::mutex mu;
    static std::map<std::array<long, 3>, std::unique_ptr<ChiEvaluator>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{P.a, P.b, P.r}];
    if (!slot) slot = std::make_unique<ChiEvaluator>(P);
    return *slot;
}

Rat euler_characteristic(const HirzebruchParams& P, PicClass cls) { return chi_evaluator(P)(cls.m, cls.n); }

long euler_characteristic_by_sections(const HirzebruchParams& P, PicClass cls) {
    // monomial x^A1 y^A2 z^A3 w^A4 has character (a A1 + b A3 + r A4, A2 + A4);
    // its contribution is minus the reduced Euler characteristic of the set of
    // rays with negative exponent: none -> +1, opposite pair -> -1, all -> +1.
    long a = P.a, b = P.b, r = P.r, m = cls.m, n = cls.n;
    auto count_xz = [&](long M, bool nonneg) {
        // solutions of a A1 + b A3 = M with A1, A3 both >= 0 or both <= -1
        long c = 0;
        if (nonneg) {
            for (long A3 = 0; b * A3 <= M; ++A3)
                if ((M - b * A3) % a == 0) ++c;
        } else {
            // A3 <= -1 and A1 = (M - b A3)/a <= -1  <=>  b A3 >= M + a
            long lo = floor_div(Int(M + a + b - 1), Int(b)).get_si();
            for (long A3 = lo; A3 <= -1; ++A3)
                if ((M - b * A3) % a == 0) ++c;
        }
        return c;
    };
    long chi = 0;
    for (long A4 = 0; A4 <= n; ++A4) {  // y, w >= 0
        long M = m - r * A4;
        chi += count_xz(M, true);
        chi -= count_xz(M, false);
    }
    for (long A4 = n + 1; A4 <= -1; ++A4) {  // y, w <= -1
        long M = m - r * A4;
        chi -= count_xz(M, true);
        chi += count_xz(M, false);
    }
    return chi;
}

PicClass polarization_pullback(const HirzebruchParams& P) {
    long pq = P.p * P.q, ab = P.a * P.b;
    if ((ab * P.r) % pq != 0 || ab % pq != 0) throw DomainError("polarization pullback not integral");
    return {ab + ab * P.r / pq, ab / pq};
}

RatPoly hilbert_polynomial(const HirzebruchParams& P, PicClass cls) {
    const auto& ev = chi_evaluator(P);
    long a = P.a, b = P.b, r = P.r, pq = P.p * P.q;
    Rat t2 = make_rat(Int(b) * a * r, Int(2) * pq * pq) + frac(b * a, pq);
    Rat t1 = make_rat(Int(a + b + 2 * cls.m + r), Int(2 * pq)) + Rat(cls.n + 1) + ev.rho1_sum(cls.m) * frac(a, pq) +
             ev.rho3_sum(cls.m) * frac(b, pq);
    return RatPoly({ev(cls.m, cls.n), t1, t2});
}

RatPoly modified_hilbert_polynomial(const HirzebruchParams& P, PicClass cls) {
    long a = P.a, b = P.b, r = P.r, pq = P.p * P.q, ab = a * b, m = cls.m, n = cls.n;
    Rat t2 = make_rat(Int(ab) * ab * r, Int(2) * pq * pq) + make_rat(Int(ab) * ab, Int(pq));
    Rat t1 = make_rat(Int(ab) * (a + b + r + 2 * m - 1 + ab), Int(2 * pq)) + Rat(ab * (n + 1));
    Rat t0 = make_rat(Int(1 + n) * (a + b + 2 * m + ab - 1 - n * r), Int(2));
    return RatPoly({t0, t1, t2});
}

std::vector<std::pair<int, PicClass>> point_sheaf_kclass(const HirzebruchParams& P, int chart, long i) {
    if (chart < 1 || chart > 4) throw DomainError("chart must be 1..4");
    long A = (chart == 1 || chart == 4) ? P.a : P.b;
    long R = (chart <= 2) ? 0 : P.r;  // second factor (1 - g^R h)
    // g^x h^y is the class (-x, -y)
    return {{+1, {-i, 0}}, {-1, {-(A + i), 0}}, {-1, {-(R + i), -1}}, {+1, {-(A + R + i), -1}}};
}

RatPoly point_sheaf_mhp(const HirzebruchParams& P, int chart, long i) {
    RatPoly out;
    for (const auto& [sgn, cls] : point_sheaf_kclass(P, chart, i)) {
        auto q = modified_hilbert_polynomial(P, cls);
        out = sgn > 0 ? out + q : out - q;
    }
    return out;
}

std::vector<InertiaComponent> inertia_components(const HirzebruchParams& P) {
    std::vector<InertiaComponent> out{{"identity", {}, 2}};
    auto range = [](long lo, long hi, long skip_div) {
        std::vector<long> v;
        for (long l = lo; l <= hi; ++l)
            if (skip_div == 0 || l % skip_div != 0) v.push_back(l);
        return v;
    };
    auto push = [&](const char* name, std::vector<long> ls, int dim) {
        if (!ls.empty()) out.push_back({name, std::move(ls), dim});
    };
    push("rho1", range(1, P.p - 1, 0), 1);
    push("rho3", range(1, P.q - 1, 0), 1);
    push("sigma1", range(1, P.b - 1, P.b / P.p), 0);
    push("sigma2", range(1, P.a - 1, P.a / P.q), 0);
    push("sigma3", range(1, P.a - 1, P.a / P.q), 0);
    push("sigma4", range(1, P.b - 1, P.b / P.p), 0);
    return out;
}

std::size_t inertia_component_count(const std::vector<InertiaComponent>& comps) {
    std::size_t c = 0;
    for (const auto& x : comps) c += x.ls.empty() ? 1 : x.ls.size();
    return c;
}

std::array<std::array<Int, 2>, 4> coarse_rays(const HirzebruchParams& P) {
    return {{{Int(P.b / P.p), Int(P.s / P.p)}, {Int(0), Int(1)}, {Int(-P.a / P.q), Int(P.t / P.q)}, {Int(0), Int(-1)}}};
}

CoarseDivisorCheck coarse_cartier_ample(const HirzebruchParams& P, const std::array<Int, 4>& t) {
    auto rho = coarse_rays(P);
    CoarseDivisorCheck res{true, true};
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        // <m, rho_i> = -t_i, <m, rho_j> = -t_j
        Rat d = Rat(rho[i][0] * rho[j][1] - rho[i][1] * rho[j][0]);
        Rat x = Rat(-t[i] * rho[j][1] + t[j] * rho[i][1]) / d;
        Rat y = Rat(-t[j] * rho[i][0] + t[i] * rho[j][0]) / d;
        x.canonicalize();
        y.canonicalize();
        if (!is_integer(x) || !is_integer(y)) res.is_cartier = false;
        for (int k = 0; k < 4; ++k) {
            if (k == i || k == j) continue;
            if (!(x * rho[k][0] + y * rho[k][1] > Rat(-t[k]))) res.is_ample = false;
        }
    }
    res.is_ample = res.is_ample && res.is_cartier;
    return res;
}

RatPoly rank2_indecomposable_mhp(const HirzebruchParams& P, const std::array<long, 4>& B,
                                 const std::array<long, 4>& L, const std::array<bool, 4>& coincide) {
    for (long x : L)
        if (x < 0) throw DomainError("Lambda entries must be nonnegative");
    if (L[0] % P.a != 0) throw DomainError("a must divide Lambda_1");
    if (L[2] % P.b != 0) throw DomainError("b must divide Lambda_3");
    long r = P.r;
    PicClass c1{-B[0] - B[2] - B[3] * r, -B[1] - B[3]};
    PicClass c2{-B[0] - L[0] - B[2] - L[2] - (B[3] + L[3]) * r, -B[1] - L[1] - B[3] - L[3]};
    RatPoly out = modified_hilbert_polynomial(P, c1) + modified_hilbert_polynomial(P, c2);
    long corr = 0;
    for (int i = 0; i < 4; ++i)
        if (!coincide[i]) corr += L[i] * L[(i + 1) % 4];
    return out - RatPoly({Rat(corr)});
}

}  // namespace hz
