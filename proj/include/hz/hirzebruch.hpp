/**
 * @file hirzebruch.hpp
 * @brief Closed-form geometry of the Hirzebruch orbifold H_r^{ab}.
 */
#pragma once

#include "hz/arith.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hz {

struct HirzebruchParams {
    long a = 1, b = 1, r = 0;
    long s = 0, t = 0;     // r = s a + t b, 0 <= s < b
    long p = 1, q = 1;     // gcd(b,r), gcd(a,r)
    long u = 0, v1 = 0, v2 = 0;  // r = u a b - v1 a - v2 b
    long C = 2;            // a + b + ab - 1
};

HirzebruchParams derive_params(long a, long b, long r);

// Line bundle (m,n): first Chern class m x/a + n y.
struct PicClass {
    long m = 0, n = 0;
    bool operator==(const PicClass&) const = default;
    auto operator<=>(const PicClass&) const = default;
};

using Weight = std::array<long, 2>;

struct ChartRecord {
    int chart;                    // 1..4
    long order;                   // stabilizer order: b, a, a, b
    std::array<long, 2> action;   // exponents of tau on the two coordinates
    std::array<long, 2> action_mod;  // reduced into [0, order)
    std::array<Weight, 2> tweights;
    std::array<Weight, 2> overlap_tweights;  // on U_{i,i+1}
};

std::vector<ChartRecord> chart_weight_tables(const HirzebruchParams& P);

// Riemann-Roch evaluation of chi((m,n)); 1/(1 - zeta^k) tables are built once.
class ChiEvaluator {
public:
    explicit ChiEvaluator(const HirzebruchParams& P);
    Rat operator()(long m, long n) const;  // throws DomainError unless integral
    // sum_{l=1}^{p-1} w_p^{ml} / (1 - w_p^{-al}) and its q-analogue with b
    Rat rho1_sum(long m) const;
    Rat rho3_sum(long m) const;
    const HirzebruchParams& params() const { return P_; }

private:
    const Cyclotomic& inv_one_minus(long order, long k) const;
    HirzebruchParams P_;
    std::map<long, std::vector<Cyclotomic>> inv_;  // order -> k -> 1/(1 - zeta^k), k != 0
};

// shared evaluator per (a,b,r)
const ChiEvaluator& chi_evaluator(const HirzebruchParams& P);
Rat euler_characteristic(const HirzebruchParams& P, PicClass cls);

// chi by counting Cox-ring monomials with toric cohomology signs
long euler_characteristic_by_sections(const HirzebruchParams& P, PicClass cls);

PicClass polarization_pullback(const HirzebruchParams& P);
RatPoly hilbert_polynomial(const HirzebruchParams& P, PicClass cls);
RatPoly modified_hilbert_polynomial(const HirzebruchParams& P, PicClass cls);

// K-class of O_{P_chart} (x) mu^i as signed Pic classes
std::vector<std::pair<int, PicClass>> point_sheaf_kclass(const HirzebruchParams& P, int chart, long i);
RatPoly point_sheaf_mhp(const HirzebruchParams& P, int chart, long i = 0);

struct InertiaComponent {
    std::string source;  // identity, rho1, rho3, sigma1..sigma4
    std::vector<long> ls;
    int dimension;
};

std::vector<InertiaComponent> inertia_components(const HirzebruchParams& P);
std::size_t inertia_component_count(const std::vector<InertiaComponent>& comps);

// Weil divisor t1 D1 + ... + t4 D4 on the coarse space.
struct CoarseDivisorCheck {
    bool is_cartier = false;
    bool is_ample = false;
};

CoarseDivisorCheck coarse_cartier_ample(const HirzebruchParams& P, const std::array<Int, 4>& t);
std::array<std::array<Int, 2>, 4> coarse_rays(const HirzebruchParams& P);

// Rank-2 locally free sheaf with one nonzero box summand per chart.
// coincide[i] means P_{i+1} = P_{i+2 mod 4} (0-based pairs 12, 23, 34, 41).
RatPoly rank2_indecomposable_mhp(const HirzebruchParams& P, const std::array<long, 4>& B,
                                 const std::array<long, 4>& Lambda, const std::array<bool, 4>& coincide);

}  // namespace hz
