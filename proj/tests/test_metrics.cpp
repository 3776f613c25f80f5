#include <doctest.h>

#include <boxlb/metrics.hpp>

#include <random>
#include <stdexcept>

using namespace boxlb;

namespace {
const WeightVector worked{91, 100, 94, 86, 96, 83, 97, 93};
}

TEST_CASE("compute_loads sums per rank")
{
    const auto p = compute_loads(DistributionMap{{0, 1, 0, 1}}, WeightVector{4, 3, 2, 1}, 2);
    CHECK(p.loads == std::vector<Weight>{6, 4});
    CHECK(p.max_load == 6);
    CHECK(p.total_weight == 10);

    const auto one = compute_loads(DistributionMap{{0, 0, 0}}, WeightVector{5, 6, 7}, 1);
    CHECK(one.loads == std::vector<Weight>{18});
    CHECK(one.max_load == 18);

    const auto painters = compute_loads(DistributionMap{{0, 0, 0, 0, 1, 1, 1, 1}}, worked, 2);
    CHECK(painters.loads == std::vector<Weight>{371, 369});
}

TEST_CASE("compute_loads rejects malformed maps")
{
    CHECK_THROWS_AS(compute_loads(DistributionMap{{0, 2}}, WeightVector{1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(compute_loads(DistributionMap{{0, -1}}, WeightVector{1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(compute_loads(DistributionMap{{0}}, WeightVector{1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(compute_loads(DistributionMap{{0}}, WeightVector{1}, 0), std::invalid_argument);
}

TEST_CASE("efficiency values from the worked example")
{
    LoadProfile a{{371, 369}, 371, 740};
    CHECK(efficiency(a) == 370.0 / 371.0);
    LoadProfile b{{285, 455}, 455, 740};
    CHECK(efficiency(b) == 370.0 / 455.0);
    LoadProfile c{{7, 7, 7}, 7, 21};
    CHECK(efficiency(c) == 1.0);
    LoadProfile z{{0, 0}, 0, 0};
    CHECK_THROWS_AS(efficiency(z), std::invalid_argument);
}

TEST_CASE("efficiency is at most 1 and equals 1 only for equal loads")
{
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<Weight> wd(1, 50);
    for (int it = 0; it < 2000; ++it) {
        const int P = 1 + int(gen() % 6);
        const std::size_t n = 1 + gen() % 20;
        WeightVector w(n);
        DistributionMap dm;
        for (auto& x : w) { x = wd(gen); dm.ranks.push_back(int(gen() % std::uint64_t(P))); }
        const auto prof = compute_loads(dm, w, P);
        const double e = efficiency(prof);
        const bool all_equal = std::all_of(prof.loads.begin(), prof.loads.end(),
                                           [&] (Weight l) { return l == prof.loads[0]; });
        REQUIRE(e <= 1.0);
        REQUIRE(e > 0.0);
        REQUIRE((e == 1.0) == all_equal);
    }
}

TEST_CASE("is_valid checks length, range and empty ranks")
{
    CHECK(is_valid(DistributionMap{{0, 1, 1}}, 3, 2));
    CHECK_FALSE(is_valid(DistributionMap{{0, 0, 0}}, 3, 2));
    CHECK(is_valid(DistributionMap{{0, 0, 0}}, 3, 2, false));
    CHECK_FALSE(is_valid(DistributionMap{{0, 2}}, 2, 2));
    CHECK_FALSE(is_valid(DistributionMap{{0, 1}}, 3, 2));
}
