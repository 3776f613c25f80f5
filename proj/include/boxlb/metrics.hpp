#pragma once

#include <boxlb/weights.hpp>

#include <span>
#include <string>
#include <vector>

namespace boxlb {

// Entry j is the rank owning box j.
struct DistributionMap
{
    std::vector<int> ranks;

    [[nodiscard]] std::size_t size () const noexcept { return ranks.size(); }
    [[nodiscard]] int operator[] (std::size_t i) const { return ranks[i]; }

    friend bool operator== (const DistributionMap&, const DistributionMap&) = default;
};

struct LoadProfile
{
    std::vector<Weight> loads;
    Weight max_load = 0;
    Weight total_weight = 0;
};

struct EfficiencyReport
{
    std::string algorithm;
    double efficiency = 0.0;
    LoadProfile load_profile;
    double wall_time = 0.0;   // seconds
};

//! Sum of box weights per rank. Throws std::invalid_argument on a length
//! mismatch or a rank outside [0, nranks).
LoadProfile compute_loads (const DistributionMap& dm, std::span<const Weight> wgts, int nranks);

//! Average load over maximum load. Throws std::invalid_argument if max load is 0.
double efficiency (const LoadProfile& profile);

//! Length, rank range and (optionally) no-empty-rank checks.
bool is_valid (const DistributionMap& dm, std::size_t nboxes, int nranks, bool require_every_rank = true);

}
