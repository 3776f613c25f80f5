#include <boxlb/oracle.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace boxlb {

std::uint64_t combination_count (std::size_t nboxes, int nranks, bool use_symmetry)
{
    if (nranks < 1 || nboxes < 1) {
        throw std::invalid_argument("brute force needs at least one box and one rank");
    }
    std::uint64_t space = 1;
    for (std::size_t j = 0; j < nboxes; ++j) {
        if (space > max_assignment_space / std::uint64_t(nranks)) {
            throw std::overflow_error(std::to_string(nranks) + "^" + std::to_string(nboxes)
                                      + " assignments exceed 2^62; shrink the instance");
        }
        space *= std::uint64_t(nranks);
    }
    return use_symmetry ? space / 2 + 1 : space;
}

namespace {

struct ChunkBest
{
    Weight max_load = std::numeric_limits<Weight>::max();
    std::uint64_t counter = std::numeric_limits<std::uint64_t>::max();
};

ChunkBest sweep (std::span<const Weight> wgts, int nranks, bool require_every_rank,
                 std::uint64_t begin, std::uint64_t end)
{
    const std::size_t n = wgts.size();
    const auto P = static_cast<std::size_t>(nranks);
    std::vector<int> digit(n);
    std::vector<Weight> load(P, 0);
    std::vector<std::size_t> count(P, 0);

    std::uint64_t k = begin;
    for (std::size_t j = 0; j < n; ++j) {
        digit[j] = static_cast<int>(k % P);
        k /= P;
        load[digit[j]] += wgts[j];
        ++count[digit[j]];
    }
    std::size_t empty = static_cast<std::size_t>(std::count(count.begin(), count.end(), std::size_t(0)));

    ChunkBest best;
    for (std::uint64_t c = begin; c < end; ++c) {
        if (!require_every_rank || empty == 0) {
            Weight m = load[0];
            for (std::size_t r = 1; r < P; ++r) { m = std::max(m, load[r]); }
            if (m < best.max_load) {
                best.max_load = m;
                best.counter = c;
            }
        }
        // base-P increment
        for (std::size_t j = 0; j < n; ++j) {
            const int d = digit[j];
            load[d] -= wgts[j];
            if (--count[d] == 0) { ++empty; }
            const int nd = (d + 1 == nranks) ? 0 : d + 1;
            digit[j] = nd;
            load[nd] += wgts[j];
            if (count[nd]++ == 0) { --empty; }
            if (nd != 0) { break; }
        }
    }
    return best;
}

}

BruteForceResult brute_force_solve (std::span<const Weight> wgts, int nranks, const BruteForceOptions& opts)
{
    std::uint64_t limit = combination_count(wgts.size(), nranks, opts.use_symmetry);
    if (opts.counter_limit > 0) { limit = std::min(limit, opts.counter_limit); }
    if (opts.threads < 1) {
        throw std::invalid_argument("thread count must be positive");
    }
    const auto nthreads = static_cast<std::uint64_t>(std::min<std::uint64_t>(std::uint64_t(opts.threads), limit));

    std::vector<ChunkBest> partial(nthreads);
    {
        std::vector<std::jthread> workers;
        workers.reserve(nthreads);
        for (std::uint64_t t = 0; t < nthreads; ++t) {
            const std::uint64_t b = limit / nthreads * t + std::min(t, limit % nthreads);
            const std::uint64_t e = b + limit / nthreads + (t < limit % nthreads ? 1 : 0);
            workers.emplace_back([&, t, b, e] {
                partial[t] = sweep(wgts, nranks, opts.require_every_rank, b, e);
            });
        }
    }

    ChunkBest best;
    for (const auto& p : partial) {
        if (p.max_load < best.max_load || (p.max_load == best.max_load && p.counter < best.counter)) {
            best = p;
        }
    }
    if (best.counter == std::numeric_limits<std::uint64_t>::max()) {
        throw std::invalid_argument("no assignment gives every rank a box; need at least as many boxes as ranks");
    }

    BruteForceResult res;
    res.best_max_load = best.max_load;
    res.combinations_checked = limit;
    res.best_map.ranks.resize(wgts.size());
    std::uint64_t k = best.counter;
    for (auto& r : res.best_map.ranks) {
        r = static_cast<int>(k % std::uint64_t(nranks));
        k /= std::uint64_t(nranks);
    }
    return res;
}

}
