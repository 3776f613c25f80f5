#pragma once

#include <boxlb/metrics.hpp>
#include <boxlb/weights.hpp>

#include <cstdint>
#include <span>

namespace boxlb {

struct BruteForceOptions
{
    int threads = 1;
    // Sweep only floor(P^N/2)+1 counters; the digit complement d -> P-1-d
    // maps the rest onto relabelings of the first half.
    bool use_symmetry = true;
    // Skip assignments that leave a rank without boxes.
    bool require_every_rank = false;
    // Stop after this many counters (0 = no cap). A capped sweep need not
    // reach the optimum; it exists for timing studies at fixed N.
    std::uint64_t counter_limit = 0;
};

struct BruteForceResult
{
    DistributionMap best_map;
    Weight best_max_load = 0;
    std::uint64_t combinations_checked = 0;
};

// Largest P^N the counter sweep accepts.
inline constexpr std::uint64_t max_assignment_space = std::uint64_t(1) << 62;

//! Number of counters the sweep visits. Throws std::overflow_error if
//! P^N exceeds 2^62.
std::uint64_t combination_count (std::size_t nboxes, int nranks, bool use_symmetry);

/**
 * Exhaustive search over distribution maps encoded as base-P counters, box 0
 * in the least significant digit. The counter range is cut into one
 * contiguous chunk per thread; each chunk seeds its loads from its first
 * counter and then updates them incrementally. The winner is the smallest
 * (max load, counter) pair, so the answer does not depend on `threads`.
 */
BruteForceResult brute_force_solve (std::span<const Weight> wgts, int nranks, const BruteForceOptions& opts = {});

}
