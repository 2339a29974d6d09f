#include "hz/sheaf.hpp"

namespace hz {

PicClass underlying_c1(const EquivLineBundle& L, const HirzebruchParams& P) {
    const auto& B = L.B;
    return {-B[0] - B[2] - P.r * B[3], -B[1] - B[3]};
}

std::array<long, 4> fine_gradings(const EquivLineBundle& L, const HirzebruchParams& P) {
    const auto& B = L.B;
    long e12 = B[0] + B[2] - P.r * B[1];
    long e34 = B[0] + B[2] + P.r * B[3];
    return {mod_floor(e12, P.b), mod_floor(e12, P.a), mod_floor(e34, P.a), mod_floor(e34, P.b)};
}

EquivLineBundle gauge_fix(const EquivLineBundle& L, const HirzebruchParams& P) {
    const auto& B = L.B;
    return {{B[0] + B[2] + P.r * B[3], B[1] + B[3], 0, 0}};
}

std::string Incidence::str() const {
    switch (kind) {
        case IncidenceKind::type1: return "type1";
        case IncidenceKind::type2: return "type2(" + std::to_string(i + 1) + ")";
        case IncidenceKind::type3: return "type3(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
    return "?";
}

std::vector<Incidence> all_incidence_types() {
    std::vector<Incidence> out{{IncidenceKind::type1, -1, -1}};
    for (int i = 0; i < 4; ++i) out.push_back({IncidenceKind::type2, i, -1});
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) out.push_back({IncidenceKind::type3, i, j});
    return out;
}

std::vector<std::vector<int>> incidence_blocks(const Incidence& inc) {
    std::vector<std::vector<int>> out;
    for (int k = 0; k < 4; ++k) {
        if (inc.kind == IncidenceKind::type2 && k == inc.i) continue;
        if (inc.kind == IncidenceKind::type3 && k == inc.j) continue;
        if (inc.kind == IncidenceKind::type3 && k == inc.i)
            out.push_back({inc.i, inc.j});
        else
            out.push_back({k});
    }
    return out;
}

void validate_rank2(const Rank2Datum& d, const HirzebruchParams& P) {
    const auto& L = d.Lambda;
    for (long x : L)
        if (x < 0) throw DomainError("Lambda entries must be nonnegative");
    if (L[0] % P.a != 0) throw DomainError("a must divide Lambda_1");
    if (L[2] % P.b != 0) throw DomainError("b must divide Lambda_3");
    const auto& inc = d.incidence;
    switch (inc.kind) {
        case IncidenceKind::type1:
        case IncidenceKind::type3:
            for (long x : L)
                if (x <= 0) throw DomainError("type invariant: all Lambda must be positive");
            if (inc.kind == IncidenceKind::type3 && !(0 <= inc.i && inc.i < inc.j && inc.j < 4))
                throw DomainError("type invariant: bad coincident pair");
            break;
        case IncidenceKind::type2:
            if (inc.i < 0 || inc.i > 3) throw DomainError("type invariant: bad zero index");
            for (int k = 0; k < 4; ++k)
                if ((k == inc.i) != (L[k] == 0))
                    throw DomainError("type invariant: exactly Lambda_i must vanish");
            break;
    }
}

bool stability_check(const Rank2Datum& d, const HirzebruchParams& P) {
    validate_rank2(d, P);
    long pq = P.p * P.q;
    const auto& L = d.Lambda;
    std::array<long, 4> w{L[0], pq * L[1], L[2], (P.r + pq) * L[3]};
    long total = w[0] + w[1] + w[2] + w[3];
    // mu(L_block) < mu(F)  <=>  2 * weight(block) < total
    for (const auto& blk : incidence_blocks(d.incidence)) {
        long s = 0;
        for (int k : blk) s += w[k];
        if (!(2 * s < total)) return false;
    }
    return true;
}

int euler_weight(const Incidence& inc) { return inc.kind == IncidenceKind::type1 ? -1 : 1; }

Rank2Invariants rank2_c1_chi(const Rank2Datum& d, const HirzebruchParams& P) {
    const auto& L = d.Lambda;
    PicClass c1{-(2 * d.B1 + L[0] + L[2] + L[3] * P.r), -(2 * d.B2 + L[1] + L[3])};
    Rat chi = modified_hilbert_polynomial(P, {-d.B1, -d.B2}).coeff(0) +
              modified_hilbert_polynomial(P, {-d.B1 - L[0] - L[2] - L[3] * P.r, -d.B2 - L[1] - L[3]}).coeff(0);
    // corner corrections for adjacent points that are not coincident
    const auto& inc = d.incidence;
    for (int k = 0; k < 4; ++k) {
        int l = (k + 1) % 4;
        bool same = inc.kind == IncidenceKind::type3 &&
                    ((inc.i == k && inc.j == l) || (inc.i == l && inc.j == k));
        if (!same) chi -= Rat(L[k] * L[l]);
    }
    return {c1, chi};
}

Rat rank2_f(const HirzebruchParams& P, long m, long n) {
    long C = P.C, r = P.r;
    return make_rat(Int(C - r) * n, 2) + Rat(C + m) + make_rat(Int(m) * n, 2) - make_rat(Int(n) * n * r, 4);
}

void validate_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && p[i] > p[i - 1]) throw DomainError("partition must be weakly decreasing");
    }
}

long partition_size(const Partition& p) {
    long s = 0;
    for (long x : p) s += x;
    return s;
}

Rat rank1_quotient_chi(PicClass hull, const PartitionQuadruple& quad, const HirzebruchParams& P) {
    for (const auto& p : quad.parts) validate_partition(p);
    Rat chi = modified_hilbert_polynomial(P, hull).coeff(0);
    chi -= Rat(P.a * (partition_size(quad.parts[0]) + partition_size(quad.parts[3])));
    chi -= Rat(P.b * (partition_size(quad.parts[1]) + partition_size(quad.parts[2])));
    return chi;
}

Rat tensor_shift(long i, long j, PicClass cls, const HirzebruchParams& P) {
    long a = P.a, b = P.b, r = P.r, m = cls.m, n = cls.n;
    return Rat(i * (2 + n + 2 * j) + j * (a * b + a + b - 1 - r + m - n * r - r * j));
}

}  // namespace hz
