#include <doctest.h>

#include <random>

#include "stacky/json_io.hpp"

using namespace stacky;

TEST_SUITE("json serialization") {
    TEST_CASE("rationals: reduced, positive denominator, no /1 suffix") {
        CHECK(rat_to_string(rat(12)) == "12");
        CHECK(rat_to_string(rat(1, 4)) == "1/4");
        CHECK(rat_to_string(rat(2, -4)) == "-1/2");
        CHECK(rat_to_string(rat(0, 7)) == "0");
        CHECK(parse_rat("12") == rat(12));
        CHECK(parse_rat("-3/9") == rat(-1, 3));
        CHECK_THROWS_AS(parse_rat("a/b"), precondition_error);
        CHECK_THROWS_AS(parse_rat("1/0"), precondition_error);
    }

    TEST_CASE("rational strings round-trip") {
        std::mt19937 rng(31);
        std::uniform_int_distribution<long> num(-4000, 4000);
        std::uniform_int_distribution<long> den(1, 4000);
        for (int trial = 0; trial < 500; ++trial) {
            Rat q = rat(num(rng), den(rng));
            CHECK(parse_rat(rat_to_string(q)) == q);
        }
    }

    TEST_CASE("matrices round-trip as arrays of decimal strings") {
        std::mt19937 rng(32);
        std::uniform_int_distribution<long> entry(-1000000, 1000000);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        for (int trial = 0; trial < 100; ++trial) {
            IntMatrix m(dim(rng), dim(rng));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
            json j = to_json(m);
            CHECK(int_matrix_from_json(j) == m);
            CHECK(j[0][0].is_string());
        }
    }

    TEST_CASE("group presentations round-trip") {
        IntMatrix m{{2, 0}, {0, 0}};
        FGAbelianGroup g = cokernel(m);
        FGAbelianGroup back = fg_group_from_json(to_json(g));
        CHECK(back.free_rank == g.free_rank);
        CHECK(back.torsion_orders == g.torsion_orders);
        CHECK(back.projection == g.projection);
    }
}
