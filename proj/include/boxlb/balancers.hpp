#pragma once

#include <boxlb/metrics.hpp>
#include <boxlb/weights.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace boxlb {

struct PartitionProblem
{
    std::span<const Weight> weights{};
    int rank_count = 1;
    // Permutation of box indices along the space-filling curve. Required by
    // the SFC-family partitioners, ignored by knapsack.
    std::span<const std::size_t> sfc_order{};

    [[nodiscard]] std::size_t nboxes () const noexcept { return weights.size(); }
};

struct Topology
{
    int node_count = 1;
    int ranks_per_node = 1;

    [[nodiscard]] int rank_count () const noexcept { return node_count * ranks_per_node; }
};

enum class Algorithm { knapsack, sfc, painters, combined_sfc, combined_painters };

enum class SfcVariant { percentage, painters };

inline constexpr Algorithm all_algorithms[] = {
    Algorithm::knapsack, Algorithm::sfc, Algorithm::painters,
    Algorithm::combined_sfc, Algorithm::combined_painters};

std::string_view to_string (Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm (std::string_view name) noexcept;

/**
 * Greedy heaviest-box-to-lightest-rank assignment followed by a refinement
 * loop: the box on the heaviest rank whose move to the lightest rank gives
 * the smallest max(heaviest', lightest') is moved while that value is below
 * the current heaviest load. Ties go to the lowest rank / box index.
 */
DistributionMap knapsack_partition (const PartitionProblem& problem);

/**
 * Percentage-tracking bisection along the SFC: rank i admits the next box
 * while (assigned_so_far + w) * P <= total * (i+1). Every rank gets at least
 * one box and the last rank takes the remainder.
 */
DistributionMap sfc_percentage_partition (const PartitionProblem& problem);

//! Greedy contiguous scan with capacity `target`; true if it needs at most
//! `nparts` segments. A weight above `target` makes the answer false.
bool is_partition_possible (std::span<const Weight> ordered_weights, int nparts, Weight target);

//! Smallest segment capacity for which is_partition_possible holds, found by
//! binary search over [max(w), sum(w)].
Weight painters_search (std::span<const Weight> ordered_weights, int nparts);

//! Optimal contiguous split of the SFC-ordered weights into P runs.
DistributionMap painters_partition (const PartitionProblem& problem);

/**
 * Two-stage hybrid. Stage 1 splits the SFC-ordered boxes into node_count
 * contiguous groups with the chosen variant; stage 2 runs knapsack_partition
 * over ranks_per_node ranks inside each group. Global ranks are node-major.
 */
DistributionMap combined_partition (const PartitionProblem& problem, const Topology& topo, SfcVariant variant);

//! Dispatch by identifier; `topo` is used only by the combined variants and
//! must agree with problem.rank_count.
DistributionMap run_algorithm (Algorithm algo, const PartitionProblem& problem, const Topology& topo);

namespace detail {

// Contiguous splitters over already-ordered weights. Entry k of the result is
// the part owning position k. Each part receives at least `min_per_part`
// positions.
std::vector<int> percentage_split (std::span<const Weight> ordered, int nparts, int min_per_part);
std::vector<int> painters_split (std::span<const Weight> ordered, int nparts, int min_per_part);

}

}
