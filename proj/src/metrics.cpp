#include <boxlb/metrics.hpp>

#include <algorithm>
#include <stdexcept>

namespace boxlb {

LoadProfile compute_loads (const DistributionMap& dm, std::span<const Weight> wgts, int nranks)
{
    if (nranks < 1) {
        throw std::invalid_argument("rank count must be positive");
    }
    if (dm.size() != wgts.size()) {
        throw std::invalid_argument("distribution map length " + std::to_string(dm.size())
                                    + " does not match weight count " + std::to_string(wgts.size()));
    }
    LoadProfile p;
    p.loads.assign(static_cast<std::size_t>(nranks), 0);
    for (std::size_t j = 0; j < dm.size(); ++j) {
        const int r = dm[j];
        if (r < 0 || r >= nranks) {
            throw std::invalid_argument("box " + std::to_string(j) + " assigned to rank "
                                        + std::to_string(r) + " outside [0, " + std::to_string(nranks) + ")");
        }
        p.loads[static_cast<std::size_t>(r)] += wgts[j];
        p.total_weight += wgts[j];
    }
    p.max_load = *std::max_element(p.loads.begin(), p.loads.end());
    return p;
}

double efficiency (const LoadProfile& profile)
{
    if (profile.max_load <= 0 || profile.loads.empty()) {
        throw std::invalid_argument("efficiency undefined for zero maximum load");
    }
    const double avg = static_cast<double>(profile.total_weight) / static_cast<double>(profile.loads.size());
    return avg / static_cast<double>(profile.max_load);
}

bool is_valid (const DistributionMap& dm, std::size_t nboxes, int nranks, bool require_every_rank)
{
    if (nranks < 1 || dm.size() != nboxes) { return false; }
    std::vector<char> used(static_cast<std::size_t>(nranks), 0);
    for (int r : dm.ranks) {
        if (r < 0 || r >= nranks) { return false; }
        used[static_cast<std::size_t>(r)] = 1;
    }
    return !require_every_rank || std::all_of(used.begin(), used.end(), [] (char c) { return c != 0; });
}

}
