#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stacky/dimension.hpp"
#include "stacky/rational.hpp"

namespace stacky {

// Partition drawn as a Young diagram: weakly decreasing positive parts.
struct YoungDiagram {
    std::vector<unsigned long> parts;

    unsigned long size() const;
    void validate() const;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    // lexicographic on the part lists
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
        return a.parts < b.parts;
    }
};

// All partitions of n, largest-first within each partition, ordered
// lexicographically descending ([n], [n-1,1], ..., [1,...,1]).
std::vector<YoungDiagram> partitions(unsigned long n);

using YoungPair = std::pair<YoungDiagram, YoungDiagram>;

// All (Y1, Y2) with |Y1| + |Y2| = n, ordered by |Y1| ascending, then the
// partition orders above.
std::vector<YoungPair> young_pairs(unsigned long n);

// Number of pairs of Young diagrams of total size n: the q^n coefficient
// of prod_{k>=1} (1-q^k)^{-2}.
Int count_rank_one(unsigned long n);

// Coefficients 0..max_n of prod_{k>=1} (1-q^k)^{-colors}.
std::vector<Int> colored_partition_series(unsigned long max_n, unsigned long colors);

// T-fixed point: r pairs of Young diagrams plus an integer twist vector.
struct FixedPoint {
    std::vector<YoungPair> pairs;
    std::vector<Int> u_vec;

    std::vector<Int> point_lengths() const; // n_alpha = |Y1|+|Y2| per slot

    // block congruence, sum of twists, and discriminant re-check
    void validate(long p, long r, const Int& u, const Rat& delta, const FramingVector& w) const;

    friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

// output order of the enumeration: twists first, then the pair tuple
bool fixed_point_less(const FixedPoint& a, const FixedPoint& b);

struct FixedPointEnumeration {
    std::vector<FixedPoint> points;
    bool truncated = false;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Residue class of slot alpha (1-based blocks of w): block i covers
// sum_{j<i} w_j < alpha <= sum_{j<=i} w_j and forces u_alpha = i mod p.
std::vector<long> block_residues(const FramingVector& w);

// All (Y, u) with the block congruences, sum u_alpha = u and discriminant
// delta. Deterministic output, sorted lexicographically on u then pairs.
// Errors if u is incompatible with sum i*w_i mod p (no such moduli space).
FixedPointEnumeration enumerate_fixed_points(long p, long r, const Int& u, const Rat& delta,
                                             const FramingVector& w,
                                             std::uint64_t cap = kDefaultEnumerationCap);

// Exact cardinality of the same set, via series coefficients; no cap.
Int count_fixed_points(long p, long r, const Int& u, const Rat& delta, const FramingVector& w);

} // namespace stacky
