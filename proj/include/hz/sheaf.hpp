/**
 * @file sheaf.hpp
 * @brief Equivariant line bundles, rank-2 gauge-fixed data and rank-1 quotients.
 */
#pragma once

#include "hz/hirzebruch.hpp"

#include <array>
#include <string>
#include <vector>

namespace hz {

struct EquivLineBundle {
    std::array<long, 4> B{};
    bool operator==(const EquivLineBundle&) const = default;
};

PicClass underlying_c1(const EquivLineBundle& L, const HirzebruchParams& P);
std::array<long, 4> fine_gradings(const EquivLineBundle& L, const HirzebruchParams& P);
EquivLineBundle gauge_fix(const EquivLineBundle& L, const HirzebruchParams& P);

enum class IncidenceKind { type1, type2, type3 };

// type2: index = position with Lambda = 0; type3: P_i = P_j for the pair (i, j), i < j. 0-based.
struct Incidence {
    IncidenceKind kind = IncidenceKind::type1;
    int i = -1, j = -1;
    bool operator==(const Incidence&) const = default;
    std::string str() const;
};

// The 11 incidence types: 1 of type1, 4 of type2, 6 of type3.
std::vector<Incidence> all_incidence_types();

struct Rank2Datum {
    long B1 = 0, B2 = 0;  // gauge fixed: B3 = B4 = 0
    std::array<long, 4> Lambda{};
    Incidence incidence;
};

// throws DomainError when Lambda violates the type invariants or box divisibility
void validate_rank2(const Rank2Datum& d, const HirzebruchParams& P);

// points of P^1 grouped by coincidence, over the indices with Lambda > 0
std::vector<std::vector<int>> incidence_blocks(const Incidence& inc);

bool stability_check(const Rank2Datum& d, const HirzebruchParams& P);
int euler_weight(const Incidence& inc);

struct Rank2Invariants {
    PicClass c1;
    Rat chi;
};

Rank2Invariants rank2_c1_chi(const Rank2Datum& d, const HirzebruchParams& P);

// f(m,n) = (C-r)n/2 + C + m + mn/2 - n^2 r/4
Rat rank2_f(const HirzebruchParams& P, long m, long n);

using Partition = std::vector<long>;

struct PartitionQuadruple {
    std::array<Partition, 4> parts;
};

void validate_partition(const Partition& p);
long partition_size(const Partition& p);
Rat rank1_quotient_chi(PicClass hull, const PartitionQuadruple& quad, const HirzebruchParams& P);

// chi_E shift of rank-2 moduli under c1 -> c1 + 2(i x/a + j y)
Rat tensor_shift(long i, long j, PicClass cls, const HirzebruchParams& P);

}  // namespace hz
