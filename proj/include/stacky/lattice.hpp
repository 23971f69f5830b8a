#pragma once

#include <vector>

#include "stacky/int_matrix.hpp"

namespace stacky {

// U * M * V = D with U, V unimodular and D diagonal, invariant factors
// d_1 | d_2 | ... , all nonnegative.
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    std::vector<Int> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Z^free_rank (+) Z/d_1 (+) ... (+) Z/d_s  with d_1 | d_2 | ..., d_i >= 2.
// `projection` maps the ambient free lattice onto canonical coordinates:
// free rows first (in row Hermite form), then one row per torsion order,
// entries of the torsion rows reduced into [0, d_i).
struct FGAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion_orders;
    IntMatrix projection;

    std::size_t ambient_rank() const { return projection.cols(); }
    std::size_t coord_count() const { return free_rank + torsion_orders.size(); }
    bool is_trivial() const { return free_rank == 0 && torsion_orders.empty(); }

    static FGAbelianGroup free_group(std::size_t rank);

    // Structural group equality (invariants only; projections are
    // presentation-dependent).
    bool same_isomorphism_class(const FGAbelianGroup& other) const {
        return free_rank == other.free_rank && torsion_orders == other.torsion_orders;
    }

    // Image of an ambient vector given as a column matrix; torsion
    // coordinates reduced mod d_i.
    IntMatrix apply(const IntMatrix& columns) const;

    void validate() const;
};

// Cokernel of M : Z^cols -> Z^rows in canonical form.
FGAbelianGroup cokernel(const IntMatrix& m);

struct GaleDual {
    FGAbelianGroup group;
    IntMatrix weights; // coord_count x n, images of the n generators
};

// Gale dual of beta : Z^n -> target, beta given in the canonical
// coordinates of the target (free rows first, then torsion rows).
// Free targets reduce to coker(beta^T); torsion targets go through the
// free resolution [beta | diag(d_i)] and dualize (Borisov-Chen-Smith).
GaleDual gale_dual(const IntMatrix& beta, const FGAbelianGroup& target);

// Row Hermite normal form (row span preserved, pivots positive, entries
// above each pivot reduced); zero rows dropped.
IntMatrix hermite_row_form(const IntMatrix& m);

} // namespace stacky
