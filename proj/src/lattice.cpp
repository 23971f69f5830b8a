#include "stacky/lattice.hpp"

#include <algorithm>
#include <optional>

namespace stacky {

std::vector<Int> SmithForm::invariant_factors() const {
    std::vector<Int> out;
    std::size_t k = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < k; ++i)
        if (d.at(i, i) != 0) out.push_back(d.at(i, i));
    return out;
}

namespace {

// Smallest nonzero |entry| in the trailing block, row-major scan, first hit
// wins ties. Deterministic by construction.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& d, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& v = d.at(i, j);
            if (v == 0) continue;
            Int a = abs(v);
            if (!best || a < best_abs) {
                best = {{i, j}};
                best_abs = a;
            }
        }
    return best;
}

SmithForm finish_signs(SmithForm f, std::size_t upto) {
    for (std::size_t t = 0; t < upto; ++t)
        if (f.d.at(t, t) < 0) {
            f.d.negate_row(t);
            f.u.negate_row(t);
        }
    return f;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& d = f.d;
    std::size_t steps = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            auto piv = find_pivot(d, t);
            if (!piv) return finish_signs(f, t);
            d.swap_rows(t, piv->first);
            f.u.swap_rows(t, piv->first);
            d.swap_cols(t, piv->second);
            f.v.swap_cols(t, piv->second);

            // One reduction sweep. Truncated division keeps every remainder
            // strictly smaller than the pivot, so re-entering the loop
            // shrinks the pivot until the cross is clear.
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                Int q = d.at(i, t) / d.at(t, t);
                d.add_row_multiple(i, t, -q);
                f.u.add_row_multiple(i, t, -q);
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                Int q = d.at(t, j) / d.at(t, t);
                d.add_col_multiple(j, t, -q);
                f.v.add_col_multiple(j, t, -q);
            }

            bool clear = true;
            for (std::size_t i = t + 1; i < d.rows() && clear; ++i)
                if (d.at(i, t) != 0) clear = false;
            for (std::size_t j = t + 1; j < d.cols() && clear; ++j)
                if (d.at(t, j) != 0) clear = false;
            if (!clear) continue;

            // Divisor-chain fixup: fold a non-divisible row into row t and
            // re-reduce; the pivot strictly shrinks each time this fires.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < d.cols() && divides_all; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, i, Int(1));
                        f.u.add_row_multiple(t, i, Int(1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
    }
    return finish_signs(f, steps);
}

IntMatrix hermite_row_form(const IntMatrix& m) {
    IntMatrix h = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
        // Euclid down the column until a single nonzero entry sits at row r.
        for (;;) {
            std::optional<std::size_t> best;
            Int best_abs;
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int a = abs(h.at(i, col));
                if (!best || a < best_abs) {
                    best = i;
                    best_abs = a;
                }
            }
            if (!best) break;
            h.swap_rows(r, *best);
            bool clear = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = h.at(i, col) / h.at(r, col);
                h.add_row_multiple(i, r, -q);
                if (h.at(i, col) != 0) clear = false;
            }
            if (clear) break;
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0) h.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            // floor division puts entries above the pivot into [0, pivot)
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
            h.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    // drop all-zero rows
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r; ++i) keep.push_back(i);
    return h.submatrix_rows(keep);
}

FGAbelianGroup FGAbelianGroup::free_group(std::size_t rank) {
    FGAbelianGroup g;
    g.free_rank = rank;
    g.projection = IntMatrix::identity(rank);
    return g;
}

IntMatrix FGAbelianGroup::apply(const IntMatrix& columns) const {
    IntMatrix out = projection.mul(columns);
    for (std::size_t i = 0; i < torsion_orders.size(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            out.at(free_rank + i, j) = mod_floor(out.at(free_rank + i, j), torsion_orders[i]);
    return out;
}

void FGAbelianGroup::validate() const {
    require(projection.rows() == coord_count(), "bad_presentation",
            "projection row count does not match free rank plus torsion count");
    for (std::size_t i = 0; i < torsion_orders.size(); ++i) {
        require(torsion_orders[i] >= 2, "bad_presentation", "torsion order below 2");
        if (i + 1 < torsion_orders.size())
            require(torsion_orders[i + 1] % torsion_orders[i] == 0, "bad_presentation",
                    "torsion orders are not a divisor chain");
    }
}

FGAbelianGroup cokernel(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    std::size_t k = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (f.d.at(i, i) != 0) ++rank;

    FGAbelianGroup g;
    std::vector<std::size_t> free_rows;
    for (std::size_t i = rank; i < m.rows(); ++i) free_rows.push_back(i);
    IntMatrix free_block = hermite_row_form(f.u.submatrix_rows(free_rows));
    g.free_rank = free_block.rows();

    std::vector<std::size_t> torsion_rows;
    for (std::size_t i = 0; i < rank; ++i)
        if (f.d.at(i, i) >= 2) {
            torsion_rows.push_back(i);
            g.torsion_orders.push_back(f.d.at(i, i));
        }

    g.projection = IntMatrix(g.free_rank + torsion_rows.size(), m.rows());
    for (std::size_t i = 0; i < g.free_rank; ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) g.projection.at(i, j) = free_block.at(i, j);
    for (std::size_t i = 0; i < torsion_rows.size(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j)
            g.projection.at(g.free_rank + i, j) =
                mod_floor(f.u.at(torsion_rows[i], j), g.torsion_orders[i]);
    return g;
}

GaleDual gale_dual(const IntMatrix& beta, const FGAbelianGroup& target) {
    target.validate();
    require(beta.rows() == target.coord_count(), "bad_presentation",
            "map does not match target coordinate count");

    std::size_t d = target.free_rank;
    std::size_t ell = target.torsion_orders.size();
    std::size_t n = beta.cols();

    // canonical lift: torsion rows reduced into [0, d_i)
    IntMatrix combined(d + ell, n + ell);
    for (std::size_t i = 0; i < d + ell; ++i)
        for (std::size_t j = 0; j < n; ++j)
            combined.at(i, j) =
                i < d ? beta.at(i, j) : mod_floor(beta.at(i, j), target.torsion_orders[i - d]);
    for (std::size_t i = 0; i < ell; ++i) combined.at(d + i, n + i) = target.torsion_orders[i];

    FGAbelianGroup dg = cokernel(combined.transpose());
    IntMatrix weights = dg.projection.submatrix_cols(0, n);
    return GaleDual{std::move(dg), std::move(weights)};
}

} // namespace stacky
