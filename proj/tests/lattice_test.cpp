#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stacky/lattice.hpp"

using namespace stacky;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, long max_entry) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-max_entry, max_entry);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    return m;
}

IntMatrix hirzebruch_beta(long p) {
    IntMatrix b(2, 4);
    long vals[2][4] = {{0, 1, p, -p}, {1, 0, -1, 0}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) b.at(i, j) = vals[i][j];
    return b;
}

bool is_diagonal_divisor_chain(const IntMatrix& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0) return false;
    Int prev(0);
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
        const Int& v = d.at(i, i);
        if (v < 0) return false;
        if (prev != 0 && v != 0 && v % prev != 0) return false;
        if (prev == 0 && i > 0 && v != 0) return false; // zeros must come last
        prev = v;
    }
    return true;
}

} // namespace

TEST_SUITE("smith_normal_form") {
    TEST_CASE("identity is its own form") {
        IntMatrix m = IntMatrix::identity(2);
        SmithForm f = smith_normal_form(m);
        CHECK(f.d == IntMatrix::identity(2));
        CHECK(f.u == IntMatrix::identity(2));
        CHECK(f.v == IntMatrix::identity(2));
    }

    TEST_CASE("frozen example {{2,4},{6,8}}") {
        IntMatrix m{{2, 4}, {6, 8}};
        // minor-gcd oracle: gcd of entries 2, |det| = 8, so factors (2, 4)
        CHECK(oracles::minor_gcd_invariant_factors(m) == std::vector<Int>{Int(2), Int(4)});
        SmithForm f = smith_normal_form(m);
        CHECK(f.invariant_factors() == std::vector<Int>{Int(2), Int(4)});
        CHECK(f.u.mul(m).mul(f.v) == f.d);
    }

    TEST_CASE("beta transpose of the p=2 fan has unit factors") {
        IntMatrix bt = hirzebruch_beta(2).transpose();
        CHECK(smith_normal_form(bt).invariant_factors() == std::vector<Int>{Int(1), Int(1)});
        CHECK(oracles::minor_gcd_invariant_factors(bt) == std::vector<Int>{Int(1), Int(1)});
    }

    TEST_CASE("empty matrix") {
        IntMatrix m(0, 3);
        SmithForm f = smith_normal_form(m);
        CHECK(f.d.rows() == 0);
        CHECK(f.invariant_factors().empty());
    }

    TEST_CASE("degenerate shapes") {
        CHECK(smith_normal_form(IntMatrix(3, 3)).invariant_factors().empty()); // zero matrix
        IntMatrix row{{6, 10, 15}};
        CHECK(smith_normal_form(row).invariant_factors() == std::vector<Int>{Int(1)});
        IntMatrix col{{4}, {6}};
        CHECK(smith_normal_form(col).invariant_factors() == std::vector<Int>{Int(2)});
        IntMatrix same{{7, 7}, {7, 7}};
        SmithForm f = smith_normal_form(same);
        CHECK(f.invariant_factors() == std::vector<Int>{Int(7)});
        CHECK(f.u.mul(same).mul(f.v) == f.d);
    }

    TEST_CASE("random matrices: exactness, unimodularity, divisor chain, oracle factors") {
        std::mt19937 rng(20240811);
        for (int trial = 0; trial < 120; ++trial) {
            IntMatrix m = random_matrix(rng, 5, 20);
            SmithForm f = smith_normal_form(m);
            CHECK(f.u.mul(m).mul(f.v) == f.d);
            CHECK(abs(oracles::determinant(f.u)) == 1);
            CHECK(abs(oracles::determinant(f.v)) == 1);
            CHECK(is_diagonal_divisor_chain(f.d));
            CHECK(f.invariant_factors() == oracles::minor_gcd_invariant_factors(m));
            // re-running on D is a fixed point
            CHECK(smith_normal_form(f.d).d == f.d);
        }
    }
}

TEST_SUITE("cokernel") {
    TEST_CASE("identity gives the trivial group") {
        FGAbelianGroup g = cokernel(IntMatrix::identity(2));
        CHECK(g.is_trivial());
    }

    TEST_CASE("beta transpose of the p=3 fan gives Z^2") {
        FGAbelianGroup g = cokernel(hirzebruch_beta(3).transpose());
        CHECK(g.free_rank == 2);
        CHECK(g.torsion_orders.empty());
    }

    TEST_CASE("Z^2 modulo (-p, 0) for p=3") {
        IntMatrix m(2, 1);
        m.at(0, 0) = -3;
        m.at(1, 0) = 0;
        FGAbelianGroup g = cokernel(m);
        CHECK(g.free_rank == 1);
        CHECK(g.torsion_orders == std::vector<Int>{Int(3)});
    }

    TEST_CASE("projection annihilates the image") {
        std::mt19937 rng(77);
        for (int trial = 0; trial < 80; ++trial) {
            IntMatrix m = random_matrix(rng, 4, 12);
            FGAbelianGroup g = cokernel(m);
            g.validate();
            IntMatrix composed = g.projection.mul(m);
            for (std::size_t i = 0; i < g.free_rank; ++i)
                for (std::size_t j = 0; j < composed.cols(); ++j)
                    CHECK(composed.at(i, j) == 0);
            for (std::size_t t = 0; t < g.torsion_orders.size(); ++t)
                for (std::size_t j = 0; j < composed.cols(); ++j)
                    CHECK(composed.at(g.free_rank + t, j) % g.torsion_orders[t] == 0);
        }
    }

    TEST_CASE("row operations preserve the canonical invariants") {
        std::mt19937 rng(78);
        for (int trial = 0; trial < 40; ++trial) {
            IntMatrix m = random_matrix(rng, 4, 9);
            FGAbelianGroup g = cokernel(m);

            IntMatrix um = m;
            std::uniform_int_distribution<long> coef(-3, 3);
            std::uniform_int_distribution<std::size_t> row(0, m.rows() - 1);
            for (int k = 0; k < 6; ++k) {
                std::size_t a = row(rng), b = row(rng);
                if (a != b) um.add_row_multiple(a, b, Int(coef(rng)));
            }
            FGAbelianGroup gu = cokernel(um);
            CHECK(g.same_isomorphism_class(gu));
        }
    }

    TEST_CASE("column operations leave the quotient pointwise fixed") {
        std::mt19937 rng(79);
        for (int trial = 0; trial < 40; ++trial) {
            IntMatrix m = random_matrix(rng, 4, 9);
            IntMatrix mv = m;
            std::uniform_int_distribution<long> coef(-3, 3);
            std::uniform_int_distribution<std::size_t> col(0, m.cols() - 1);
            for (int k = 0; k < 6; ++k) {
                std::size_t a = col(rng), b = col(rng);
                if (a != b) mv.add_col_multiple(a, b, Int(coef(rng)));
            }
            FGAbelianGroup g = cokernel(m), gv = cokernel(mv);
            // same sublattice, so identical canonical data, not just isomorphic
            CHECK(g.same_isomorphism_class(gv));
            CHECK(g.projection.submatrix_rows([&] {
                       std::vector<std::size_t> idx(g.free_rank);
                       for (std::size_t i = 0; i < g.free_rank; ++i) idx[i] = i;
                       return idx;
                   }()) ==
                  gv.projection.submatrix_rows([&] {
                      std::vector<std::size_t> idx(gv.free_rank);
                      for (std::size_t i = 0; i < gv.free_rank; ++i) idx[i] = i;
                      return idx;
                  }()));
        }
    }
}

TEST_SUITE("gale_dual") {
    TEST_CASE("free target: the p=2 stacky Hirzebruch fan") {
        IntMatrix beta = hirzebruch_beta(2);
        GaleDual gd = gale_dual(beta, FGAbelianGroup::free_group(2));
        CHECK(gd.group.free_rank == 2);
        CHECK(gd.group.torsion_orders.empty());
        CHECK(gd.weights.mul(beta.transpose()).is_zero());
        CHECK(oracles::weights_exact_for(gd.weights, beta));
    }

    TEST_CASE("torsion target: the gerbe divisor map") {
        for (long p : {2L, 3L, 5L}) {
            FGAbelianGroup target;
            target.free_rank = 1;
            target.torsion_orders = {Int(p)};
            target.projection = IntMatrix::identity(2);
            IntMatrix beta{{1, -1}, {0, 0}};
            GaleDual gd = gale_dual(beta, target);
            CHECK(gd.group.free_rank == 1);
            CHECK(gd.group.torsion_orders == std::vector<Int>{Int(p)});
            // quotient action (t, w) . (z1, z2) = (t z1, t z2): both weights
            // have free part 1 and trivial torsion part
            CHECK(gd.weights.at(0, 0) == 1);
            CHECK(gd.weights.at(0, 1) == 1);
            CHECK(gd.weights.at(1, 0) == 0);
            CHECK(gd.weights.at(1, 1) == 0);
        }
    }

    TEST_CASE("identity into Z is trivial") {
        GaleDual gd = gale_dual(IntMatrix::identity(1), FGAbelianGroup::free_group(1));
        CHECK(gd.group.is_trivial());
        CHECK(gd.weights.rows() == 0);
    }

    TEST_CASE("inconsistent target presentations are rejected") {
        FGAbelianGroup bad;
        bad.free_rank = 1;
        bad.torsion_orders = {Int(4), Int(6)}; // not a divisor chain
        bad.projection = IntMatrix::identity(3);
        CHECK_THROWS_AS(gale_dual(IntMatrix(3, 2), bad), precondition_error);
        CHECK_THROWS_AS(gale_dual(IntMatrix(1, 2), FGAbelianGroup::free_group(2)),
                        precondition_error);
    }

    TEST_CASE("gale exactness across p") {
        for (long p = 1; p <= 12; ++p) {
            IntMatrix beta = hirzebruch_beta(p);
            GaleDual gd = gale_dual(beta, FGAbelianGroup::free_group(2));
            CHECK(gd.group.free_rank == 2);
            CHECK(gd.group.torsion_orders.empty());
            CHECK(oracles::weights_exact_for(gd.weights, beta));
            // surjectivity: unit invariant factors
            CHECK(smith_normal_form(gd.weights).invariant_factors() ==
                  std::vector<Int>{Int(1), Int(1)});
        }
    }
}

TEST_SUITE("hermite_row_form") {
    TEST_CASE("canonical for the p=2 annihilator lattice") {
        IntMatrix m{{1, -2, 1, 0}, {0, 2, 0, 1}};
        IntMatrix h = hermite_row_form(m);
        CHECK(h == IntMatrix{{1, 0, 1, 1}, {0, 2, 0, 1}});
        // unimodular row mixes land on the same form
        IntMatrix mixed{{1, 0, 1, 1}, {1, -2, 1, 0}};
        CHECK(hermite_row_form(mixed) == h);
    }
}
