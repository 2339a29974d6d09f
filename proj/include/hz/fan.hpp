/**
 * @file fan.hpp
 * @brief Stacky fans: weighted projective stacks and gerbes, line-bundle and
 * projective-bundle total spaces, Hirzebruch orbifolds, split checks.
 */
#pragma once

#include "hz/lattice.hpp"

#include <vector>

namespace hz {

struct Ray {
    IntVec free;
    IntVec torsion;  // residues, one per torsion factor of the lattice
    bool operator==(const Ray& o) const = default;
};

using Cone = std::vector<int>;  // sorted ray indices

struct StackyFan {
    AbelianGroupStructure lattice;
    std::vector<Ray> rays;
    std::vector<Cone> cones;  // maximal cones

    std::size_t n_rays() const { return rays.size(); }
    IntMatrix free_matrix() const;   // rank x n_rays
    IntMatrix beta_matrix() const;   // free rows stacked over torsion rows
    std::vector<Cone> all_cones() const;  // maximal cones and their faces, sorted
};

// throws DomainError when a cone is not simplicial or beta has infinite cokernel
void validate_fan(const StackyFan& f);

StackyFan wps_fan(const std::vector<Int>& weights);
StackyFan wps_gerbe_fan(const std::vector<Int>& weights);
StackyFan line_bundle_total_space(const StackyFan& base, const std::vector<Int>& coeffs);
StackyFan projective_bundle(const StackyFan& base, const std::vector<std::vector<Int>>& divisors);
StackyFan hirzebruch_fan(long a, long b, long r);

// Same rays (as vectors) and same cones, up to relabeling of rays.
bool fans_equivalent(const StackyFan& x, const StackyFan& y);

enum class SplitMode { global, local };

// whole's first part1.n_rays() rays are the e_i of part1, the rest those of part2.
// global: exactly one matrix; local: one matrix per maximal cone of part2, in order.
bool check_split(const StackyFan& whole, const StackyFan& part1, const StackyFan& part2,
                 const std::vector<IntMatrix>& matrices, SplitMode mode);

// Canonical (s,t) with 0 <= s < b, s*a = r mod b, t = (r - s*a)/b.
void canonical_st(long a, long b, long r, long& s, long& t);

}  // namespace hz
