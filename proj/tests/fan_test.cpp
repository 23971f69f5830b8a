#include <doctest.h>

#include "oracles.hpp"
#include "stacky/fan.hpp"

using namespace stacky;

TEST_SUITE("hirzebruch_fan") {
    TEST_CASE("ray data") {
        Fan2D f1 = hirzebruch_fan(1);
        CHECK(f1.rays[2] == std::array<Int, 2>{Int(1), Int(-1)});
        Fan2D f2 = hirzebruch_fan(2);
        CHECK(f2.rays[2] == std::array<Int, 2>{Int(2), Int(-1)});
        CHECK(f2.rays.size() == 4);
        CHECK(f2.max_cones.size() == 4);
    }

    TEST_CASE("four rays for every p, hence Euler number four") {
        for (long p = 1; p <= 12; ++p) {
            Fan2D f = hirzebruch_fan(p);
            CHECK(f.rays.size() == 4);
            CHECK(f.is_complete());
        }
    }

    TEST_CASE("rejects p <= 0") {
        CHECK_THROWS_AS(hirzebruch_fan(0), precondition_error);
        CHECK_THROWS_AS(hirzebruch_fan(-3), precondition_error);
    }
}

TEST_SUITE("root_stacky_fan") {
    TEST_CASE("p=1 takes no root") {
        StackyFan sf = root_stacky_fan(1);
        CHECK(sf.multiplicities == std::vector<Int>{Int(1), Int(1), Int(1), Int(1)});
    }

    TEST_CASE("marked vector at infinity") {
        StackyFan sf = root_stacky_fan(3);
        IntMatrix b = sf.beta();
        CHECK(b.at(0, 3) == -3);
        CHECK(b.at(1, 3) == 0);
    }

    TEST_CASE("beta columns for p=2") {
        IntMatrix b = root_stacky_fan(2).beta();
        CHECK(b == IntMatrix{{0, 1, 2, -2}, {1, 0, -1, 0}});
    }
}

TEST_SUITE("quotient_presentation") {
    TEST_CASE("p=2: rank-two group, four weight columns, exactness") {
        QuotientPresentation qp = quotient_presentation(root_stacky_fan(2));
        CHECK(qp.group.free_rank == 2);
        CHECK(qp.group.torsion_orders.empty());
        CHECK(qp.weights.cols() == 4);
        CHECK(qp.weights.mul(root_stacky_fan(2).beta().transpose()).is_zero());
        CHECK(oracles::weights_exact_for(qp.weights, root_stacky_fan(2).beta()));
    }

    TEST_CASE("p=1 agrees with the classical Cox presentation up to basis") {
        QuotientPresentation qp = quotient_presentation(root_stacky_fan(1));
        CHECK(qp.group.free_rank == 2);
        CHECK(oracles::weights_exact_for(qp.weights, root_stacky_fan(1).beta()));
        CHECK(smith_normal_form(qp.weights).invariant_factors() ==
              std::vector<Int>{Int(1), Int(1)});
    }

    TEST_CASE("chart nonvanishing sets complement the cones") {
        QuotientPresentation qp = quotient_presentation(root_stacky_fan(2));
        REQUIRE(qp.nonvanishing_sets.size() == 4);
        CHECK(qp.nonvanishing_sets[0] == std::vector<std::size_t>{2, 3});
        CHECK(qp.nonvanishing_sets[1] == std::vector<std::size_t>{0, 3});
        CHECK(qp.nonvanishing_sets[2] == std::vector<std::size_t>{0, 1});
        CHECK(qp.nonvanishing_sets[3] == std::vector<std::size_t>{1, 2});
    }

    TEST_CASE("incomplete fans are rejected") {
        StackyFan degenerate;
        degenerate.fan.rays = {{Int(0), Int(1)}, {Int(1), Int(0)}};
        degenerate.fan.max_cones = {{0, 1}};
        degenerate.multiplicities = {Int(1), Int(1)};
        CHECK_THROWS_AS(quotient_presentation(degenerate), precondition_error);
    }

    TEST_CASE("weights kill the marked vectors and are surjective, p = 1..12") {
        for (long p = 1; p <= 12; ++p) {
            StackyFan sf = root_stacky_fan(p);
            QuotientPresentation qp = quotient_presentation(sf);
            CHECK(qp.weights.mul(sf.beta().transpose()).is_zero());
            CHECK(smith_normal_form(qp.weights).invariant_factors() ==
                  std::vector<Int>{Int(1), Int(1)});
        }
    }
}

TEST_SUITE("quotient_stacky_fan_along_ray") {
    TEST_CASE("gerbe divisor for p=2") {
        RayQuotient rq = quotient_stacky_fan_along_ray(root_stacky_fan(2), 3);
        CHECK(rq.lattice.free_rank == 1);
        CHECK(rq.lattice.torsion_orders == std::vector<Int>{Int(2)});
        CHECK(rq.adjacent_rays == std::vector<std::size_t>{0, 2});
        // images of v0, v2: free parts (1, -1), torsion parts (0, 0)
        CHECK(rq.images == IntMatrix{{1, -1}, {0, 0}});
    }

    TEST_CASE("p=1 leaves a free quotient") {
        RayQuotient rq = quotient_stacky_fan_along_ray(root_stacky_fan(1), 3);
        CHECK(rq.lattice.free_rank == 1);
        CHECK(rq.lattice.torsion_orders.empty());
    }

    TEST_CASE("gale dual of the quotient map recovers Z + Z_p") {
        for (long p : {2L, 3L, 7L, 12L}) {
            RayQuotient rq = quotient_stacky_fan_along_ray(root_stacky_fan(p), 3);
            GaleDual gd = gale_dual(rq.images, rq.lattice);
            CHECK(gd.group.free_rank == 1);
            CHECK(gd.group.torsion_orders == std::vector<Int>{Int(p)});
        }
    }

    TEST_CASE("quotient torsion order equals p") {
        for (long p = 2; p <= 12; ++p) {
            RayQuotient rq = quotient_stacky_fan_along_ray(root_stacky_fan(p), 3);
            CHECK(rq.lattice.torsion_orders == std::vector<Int>{Int(p)});
        }
    }

    TEST_CASE("invalid ray index") {
        CHECK_THROWS_AS(quotient_stacky_fan_along_ray(root_stacky_fan(2), 4), precondition_error);
    }
}
