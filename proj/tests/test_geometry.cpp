#include <doctest.h>

#include "oracles.hpp"

#include <boxlb/geometry.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

using namespace boxlb;

TEST_CASE("make_box_array chops 256^3 into 8 boxes of 128^3")
{
    const BoxArray ba = make_box_array({256, 256, 256}, 8);
    REQUIRE(ba.size() == 8);
    for (const auto& b : ba.boxes) {
        CHECK(b.length(0) == 128);
        CHECK(b.length(1) == 128);
        CHECK(b.length(2) == 128);
    }
    CHECK(tiles_domain(ba));
}

TEST_CASE("make_box_array with one box returns the domain")
{
    const BoxArray ba = make_box_array({256, 256, 256}, 1);
    REQUIRE(ba.size() == 1);
    CHECK(ba[0] == ba.domain);
    CHECK(ba.domain == IndexBox{{0, 0, 0}, {255, 255, 255}});
}

TEST_CASE("16 boxes split (4,2,2) into 64x128x128")
{
    CHECK(factor_box_count({256, 256, 256}, 16) == IntVect{4, 2, 2});
    const BoxArray ba = make_box_array({256, 256, 256}, 16);
    REQUIRE(ba.size() == 16);
    std::int64_t cells = 0;
    for (const auto& b : ba.boxes) {
        CHECK(b.length(0) == 64);
        CHECK(b.length(1) == 128);
        CHECK(b.length(2) == 128);
        cells += b.numPts();
    }
    CHECK(cells == std::int64_t(256) * 256 * 256);
    CHECK(tiles_domain(ba));
}

TEST_CASE("factor_box_count prefers cube-like triples")
{
    CHECK(factor_box_count({256, 256, 256}, 64) == IntVect{4, 4, 4});
    CHECK(factor_box_count({256, 256, 256}, 32) == IntVect{4, 4, 2});
    CHECK(factor_box_count({256, 256, 256}, 7) == IntVect{7, 1, 1});
    // Only the x axis is long enough.
    CHECK(factor_box_count({8, 1, 1}, 8) == IntVect{8, 1, 1});
}

TEST_CASE("uneven splits put longer intervals first")
{
    const BoxArray ba = make_box_array({10, 1, 1}, 3);
    REQUIRE(ba.size() == 3);
    CHECK(ba[0].length(0) == 4);
    CHECK(ba[1].length(0) == 3);
    CHECK(ba[2].length(0) == 3);
    CHECK(ba[1].lo[0] == 4);
    CHECK(tiles_domain(ba));
}

TEST_CASE("make_box_array rejects bad counts")
{
    CHECK_THROWS_AS(make_box_array({2, 2, 2}, 9), std::invalid_argument);
    CHECK_THROWS_AS(make_box_array({2, 2, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_box_array({0, 2, 2}, 1), std::invalid_argument);
    // 7 is prime and no axis has 7 cells.
    CHECK_THROWS_AS(make_box_array({4, 4, 4}, 7), std::invalid_argument);
}

TEST_CASE("tiling and cell conservation across box counts")
{
    for (int n = 1; n <= 96; ++n) {
        CAPTURE(n);
        const BoxArray ba = make_box_array({256, 256, 256}, n);
        REQUIRE(ba.size() == std::size_t(n));
        CHECK(tiles_domain(ba));
    }
    // Odd extents exercise the uneven chop.
    for (int n : {2, 3, 5, 6, 12, 30}) {
        CAPTURE(n);
        CHECK(tiles_domain(make_box_array({37, 19, 23}, n)));
    }
}

TEST_CASE("morton_key single bits")
{
    CHECK(morton_key(IndexBox{{0, 0, 0}, {1, 1, 1}}).key == 0);
    CHECK(morton_key(IndexBox{{1, 1, 1}, {1, 1, 1}}).key == 7);
    CHECK(morton_key(IndexBox{{1, 0, 0}, {1, 0, 0}}).key == 1);
    CHECK(morton_key(IndexBox{{0, 1, 0}, {0, 1, 0}}).key == 2);
    CHECK(morton_key(IndexBox{{0, 0, 1}, {0, 0, 1}}).key == 4);
    CHECK(morton_key(IndexBox{{0, 0, 0}, {0, 0, 0}}, 5).box_index == 5);
}

TEST_CASE("morton_key rejects anchors beyond 21 bits")
{
    const int big = morton_coord_limit;
    CHECK_THROWS_AS(morton_key(IndexBox{{big, 0, 0}, {big, 0, 0}}), std::out_of_range);
    CHECK_THROWS_AS(morton_key(IndexBox{{0, 0, big}, {0, 0, big + 3}}), std::out_of_range);
    CHECK_NOTHROW(morton_key(IndexBox{{big - 1, big - 1, big - 1}, {big - 1, big - 1, big - 1}}));
}

TEST_CASE("morton_interleave matches a bitwise reference")
{
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<std::uint32_t> coord(0, morton_coord_limit - 1);
    for (int i = 0; i < 20000; ++i) {
        const auto x = coord(gen), y = coord(gen), z = coord(gen);
        REQUIRE(morton_interleave(x, y, z) == oracle_ref::naive_morton(x, y, z));
    }
    const std::uint32_t m = morton_coord_limit - 1;
    CHECK(morton_interleave(m, m, m) == (std::uint64_t(1) << 63) - 1);
}

TEST_CASE("sfc_order of the 2x2x2 decomposition follows the Z pattern")
{
    const BoxArray ba = make_box_array({256, 256, 256}, 8);
    const auto order = sfc_order(ba);
    const std::vector<IntVect> expected{
        {0, 0, 0}, {128, 0, 0}, {0, 128, 0}, {128, 128, 0},
        {0, 0, 128}, {128, 0, 128}, {0, 128, 128}, {128, 128, 128}};
    REQUIRE(order.size() == 8);
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(ba[order[k]].lo == expected[k]);
    }
}

TEST_CASE("sfc_order trivial cases")
{
    CHECK(sfc_order(make_box_array({256, 256, 256}, 1)) == std::vector<std::size_t>{0});

    // Boxes already listed in Morton order come back unchanged.
    BoxArray ba;
    ba.domain = IndexBox{{0, 0, 0}, {3, 3, 3}};
    for (int z = 0; z < 4; z += 2) {
        for (int y = 0; y < 4; y += 2) {
            for (int x = 0; x < 4; x += 2) {
                ba.boxes.push_back(IndexBox{{x, y, z}, {x + 1, y + 1, z + 1}});
            }
        }
    }
    std::vector<std::size_t> identity(ba.size());
    std::iota(identity.begin(), identity.end(), std::size_t(0));
    CHECK(sfc_order(ba) == identity);
}

TEST_CASE("sfc_order breaks key ties by index")
{
    BoxArray ba;
    ba.domain = IndexBox{{0, 0, 0}, {3, 3, 3}};
    ba.boxes = {IndexBox{{2, 0, 0}, {2, 0, 0}}, IndexBox{{0, 0, 0}, {0, 0, 0}},
                IndexBox{{2, 0, 0}, {3, 0, 0}}, IndexBox{{0, 0, 0}, {1, 1, 1}}};
    CHECK(sfc_order(ba) == std::vector<std::size_t>{1, 3, 0, 2});
}

TEST_CASE("sfc_order is a permutation and keys are distinct on tilings")
{
    for (int n : {4, 16, 48, 64, 128, 1024}) {
        CAPTURE(n);
        const BoxArray ba = make_box_array({256, 256, 256}, n);
        auto order = sfc_order(ba);
        std::vector<std::uint64_t> keys;
        for (std::size_t k = 0; k < order.size(); ++k) {
            keys.push_back(morton_key(ba[order[k]]).key);
        }
        CHECK(std::is_sorted(keys.begin(), keys.end()));
        CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
        std::sort(order.begin(), order.end());
        for (std::size_t k = 0; k < order.size(); ++k) { REQUIRE(order[k] == k); }
    }
}
