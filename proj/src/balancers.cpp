#include <boxlb/balancers.hpp>

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace boxlb {

std::string_view to_string (Algorithm a) noexcept
{
    switch (a) {
    case Algorithm::knapsack:          return "knapsack";
    case Algorithm::sfc:               return "sfc";
    case Algorithm::painters:          return "painters";
    case Algorithm::combined_sfc:      return "combined-sfc";
    case Algorithm::combined_painters: return "combined-painters";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm (std::string_view name) noexcept
{
    for (Algorithm a : all_algorithms) {
        if (to_string(a) == name) { return a; }
    }
    return std::nullopt;
}

namespace {

using Wide = __int128;

void check_problem (const PartitionProblem& problem, bool need_order)
{
    if (problem.rank_count < 1) {
        throw std::invalid_argument("rank count must be positive");
    }
    const std::size_t n = problem.nboxes();
    if (n < static_cast<std::size_t>(problem.rank_count)) {
        throw std::invalid_argument("cannot give each of " + std::to_string(problem.rank_count)
                                    + " ranks a box with only " + std::to_string(n) + " boxes");
    }
    if (need_order && problem.sfc_order.size() != n) {
        throw std::invalid_argument("SFC partitioners need an sfc_order of length " + std::to_string(n));
    }
}

WeightVector ordered_weights (const PartitionProblem& problem)
{
    WeightVector w;
    w.reserve(problem.nboxes());
    for (std::size_t idx : problem.sfc_order) {
        if (idx >= problem.nboxes()) {
            throw std::invalid_argument("sfc_order entry " + std::to_string(idx) + " out of range");
        }
        w.push_back(problem.weights[idx]);
    }
    return w;
}

DistributionMap scatter (const PartitionProblem& problem, const std::vector<int>& part_of_position)
{
    DistributionMap dm;
    dm.ranks.assign(problem.nboxes(), -1);
    for (std::size_t k = 0; k < part_of_position.size(); ++k) {
        dm.ranks[problem.sfc_order[k]] = part_of_position[k];
    }
    return dm;
}

void check_split (std::span<const Weight> ordered, int nparts, int min_per_part)
{
    if (nparts < 1 || min_per_part < 1) {
        throw std::invalid_argument("part count and minimum part size must be positive");
    }
    if (ordered.size() < std::size_t(nparts) * std::size_t(min_per_part)) {
        throw std::invalid_argument("only " + std::to_string(ordered.size()) + " boxes for "
                                    + std::to_string(nparts) + " parts of at least "
                                    + std::to_string(min_per_part));
    }
}

}

DistributionMap knapsack_partition (const PartitionProblem& problem)
{
    check_problem(problem, false);
    const std::size_t n = problem.nboxes();
    const int nranks = problem.rank_count;
    const auto wgts = problem.weights;

    std::vector<std::size_t> by_weight(n);
    std::iota(by_weight.begin(), by_weight.end(), std::size_t(0));
    std::stable_sort(by_weight.begin(), by_weight.end(),
                     [&] (std::size_t a, std::size_t b) { return wgts[a] > wgts[b]; });

    // (load, rank), lightest first.
    std::set<std::pair<Weight,int>> bins;
    std::vector<Weight> load(static_cast<std::size_t>(nranks), 0);
    std::vector<std::vector<std::size_t>> owned(static_cast<std::size_t>(nranks));
    for (int r = 0; r < nranks; ++r) { bins.emplace(0, r); }

    for (std::size_t b : by_weight) {
        auto [l, r] = *bins.begin();
        bins.erase(bins.begin());
        load[r] = l + wgts[b];
        owned[r].push_back(b);
        bins.emplace(load[r], r);
    }

    // Refinement: single-box moves from the heaviest to the lightest rank.
    // Each accepted move strictly lowers the sum of squared loads, so the
    // loop terminates.
    while (nranks > 1) {
        const Weight hmax = bins.rbegin()->first;
        const int heavy = bins.lower_bound({hmax, INT_MIN})->second;
        const int light = bins.begin()->second;
        if (heavy == light || owned[heavy].size() < 2) { break; }
        const Weight lmin = load[light];

        std::size_t best_pos = owned[heavy].size();
        Weight best_peak = hmax;
        for (std::size_t k = 0; k < owned[heavy].size(); ++k) {
            const std::size_t b = owned[heavy][k];
            const Weight peak = std::max(hmax - wgts[b], lmin + wgts[b]);
            if (peak < best_peak ||
                (peak == best_peak && best_pos < owned[heavy].size() && b < owned[heavy][best_pos])) {
                best_peak = peak;
                best_pos = k;
            }
        }
        if (best_pos == owned[heavy].size() || best_peak >= hmax) { break; }

        const std::size_t b = owned[heavy][best_pos];
        bins.erase({load[heavy], heavy});
        bins.erase({load[light], light});
        load[heavy] -= wgts[b];
        load[light] += wgts[b];
        owned[heavy].erase(owned[heavy].begin() + static_cast<std::ptrdiff_t>(best_pos));
        owned[light].push_back(b);
        bins.emplace(load[heavy], heavy);
        bins.emplace(load[light], light);
    }

    DistributionMap dm;
    dm.ranks.assign(n, -1);
    for (int r = 0; r < nranks; ++r) {
        for (std::size_t b : owned[r]) { dm.ranks[b] = r; }
    }
    return dm;
}

namespace detail {

std::vector<int> percentage_split (std::span<const Weight> ordered, int nparts, int min_per_part)
{
    check_split(ordered, nparts, min_per_part);
    const std::size_t n = ordered.size();
    const Wide total = std::accumulate(ordered.begin(), ordered.end(), Wide(0));

    std::vector<int> part(n, nparts - 1);
    std::size_t pos = 0;
    Wide cum = 0;
    for (int i = 0; i < nparts - 1; ++i) {
        const std::size_t reserve = std::size_t(min_per_part) * std::size_t(nparts - 1 - i);
        int count = 0;
        while (pos < n && n - pos > reserve) {
            const Weight w = ordered[pos];
            if (count >= min_per_part && (cum + w) * nparts > total * (i + 1)) { break; }
            cum += w;
            part[pos++] = i;
            ++count;
        }
    }
    return part;
}

std::vector<int> painters_split (std::span<const Weight> ordered, int nparts, int min_per_part)
{
    check_split(ordered, nparts, min_per_part);
    const std::size_t n = ordered.size();
    const Weight res = painters_search(ordered, nparts);

    std::vector<int> part(n, nparts - 1);
    std::size_t pos = 0;
    for (int i = 0; i < nparts - 1; ++i) {
        const std::size_t reserve = std::size_t(min_per_part) * std::size_t(nparts - 1 - i);
        int count = 0;
        Weight load = 0;
        while (pos < n && n - pos > reserve) {
            const Weight w = ordered[pos];
            if (count >= min_per_part && load + w > res) { break; }
            load += w;
            part[pos++] = i;
            ++count;
        }
    }
    return part;
}

}

DistributionMap sfc_percentage_partition (const PartitionProblem& problem)
{
    check_problem(problem, true);
    const WeightVector w = ordered_weights(problem);
    return scatter(problem, detail::percentage_split(w, problem.rank_count, 1));
}

bool is_partition_possible (std::span<const Weight> ordered_weights, int nparts, Weight target)
{
    int used = 1;
    Weight cur = 0;
    for (Weight w : ordered_weights) {
        if (w > target) { return false; }
        if (cur + w > target) {
            if (++used > nparts) { return false; }
            cur = w;
        } else {
            cur += w;
        }
    }
    return used <= nparts;
}

Weight painters_search (std::span<const Weight> ordered_weights, int nparts)
{
    if (ordered_weights.empty()) {
        throw std::invalid_argument("painters_search needs at least one weight");
    }
    if (nparts < 1) {
        throw std::invalid_argument("painters_search needs at least one partition");
    }
    Weight h = std::accumulate(ordered_weights.begin(), ordered_weights.end(), Weight(0));
    Weight l = *std::max_element(ordered_weights.begin(), ordered_weights.end());
    Weight res = h;
    while (l < h) {
        const Weight mid = l + (h - l) / 2;
        if (is_partition_possible(ordered_weights, nparts, mid)) {
            res = mid;
            h = mid - 1;
        } else {
            l = mid + 1;
        }
    }
    // h = mid - 1 can step over the answer; l is the only candidate left.
    if (l < res && is_partition_possible(ordered_weights, nparts, l)) {
        res = l;
    }
    return res;
}

DistributionMap painters_partition (const PartitionProblem& problem)
{
    check_problem(problem, true);
    const WeightVector w = ordered_weights(problem);
    return scatter(problem, detail::painters_split(w, problem.rank_count, 1));
}

DistributionMap combined_partition (const PartitionProblem& problem, const Topology& topo, SfcVariant variant)
{
    if (topo.node_count < 1 || topo.ranks_per_node < 1) {
        throw std::invalid_argument("topology needs at least one node and one rank per node");
    }
    if (problem.rank_count != topo.rank_count()) {
        throw std::invalid_argument("rank count " + std::to_string(problem.rank_count)
                                    + " does not match topology " + std::to_string(topo.node_count)
                                    + "x" + std::to_string(topo.ranks_per_node));
    }
    check_problem(problem, true);

    const WeightVector w = ordered_weights(problem);
    // Each node group must be able to feed all of its ranks.
    const std::vector<int> node_of = (variant == SfcVariant::percentage)
        ? detail::percentage_split(w, topo.node_count, topo.ranks_per_node)
        : detail::painters_split(w, topo.node_count, topo.ranks_per_node);

    DistributionMap dm;
    dm.ranks.assign(problem.nboxes(), -1);
    std::size_t pos = 0;
    for (int node = 0; node < topo.node_count; ++node) {
        std::vector<std::size_t> local_boxes;
        WeightVector local_wgts;
        while (pos < w.size() && node_of[pos] == node) {
            local_boxes.push_back(problem.sfc_order[pos]);
            local_wgts.push_back(w[pos]);
            ++pos;
        }
        PartitionProblem local;
        local.weights = local_wgts;
        local.rank_count = topo.ranks_per_node;
        const DistributionMap local_dm = knapsack_partition(local);
        for (std::size_t k = 0; k < local_boxes.size(); ++k) {
            dm.ranks[local_boxes[k]] = node * topo.ranks_per_node + local_dm[k];
        }
    }
    return dm;
}

DistributionMap run_algorithm (Algorithm algo, const PartitionProblem& problem, const Topology& topo)
{
    switch (algo) {
    case Algorithm::knapsack:          return knapsack_partition(problem);
    case Algorithm::sfc:               return sfc_percentage_partition(problem);
    case Algorithm::painters:          return painters_partition(problem);
    case Algorithm::combined_sfc:      return combined_partition(problem, topo, SfcVariant::percentage);
    case Algorithm::combined_painters: return combined_partition(problem, topo, SfcVariant::painters);
    }
    throw std::invalid_argument("unknown algorithm");
}

}
