#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "stacky/lattice.hpp"

namespace stacky {

// Complete simplicial fan in N = Z^2: primitive rays plus maximal cones
// given as ray-index pairs.
struct Fan2D {
    std::vector<std::array<Int, 2>> rays;
    std::vector<std::array<std::size_t, 2>> max_cones;

    void validate() const;
    bool is_complete() const;
};

// Fan with a positive multiplicity per ray; the marked vector of ray i is
// multiplicities[i] * rays[i], and together they are the columns of beta.
struct StackyFan {
    Fan2D fan;
    std::vector<Int> multiplicities;

    void validate() const;
    IntMatrix beta() const; // 2 x n, columns are the marked vectors
};

// Rays v0=(0,1), v1=(1,0), v2=(p,-1), vinf=(-1,0); cones
// (v0,v1), (v1,v2), (v2,vinf), (vinf,v0).
Fan2D hirzebruch_fan(long p);

// hirzebruch_fan(p) with multiplicities (1,1,1,p): the p-th root taken
// along the ray at infinity.
StackyFan root_stacky_fan(long p);

struct QuotientPresentation {
    // per maximal cone, the coordinate indices that may not vanish on that
    // chart (the rays outside the cone)
    std::vector<std::vector<std::size_t>> nonvanishing_sets;
    FGAbelianGroup group;
    IntMatrix weights;
};

QuotientPresentation quotient_presentation(const StackyFan& sf);

struct RayQuotient {
    FGAbelianGroup lattice;           // N / <multiplicity * ray>
    std::vector<std::size_t> adjacent_rays;
    IntMatrix images;                 // classes of the adjacent marked vectors
};

RayQuotient quotient_stacky_fan_along_ray(const StackyFan& sf, std::size_t ray_index);

} // namespace stacky
