#pragma once

// Test-only reference solvers. These are deliberately naive and share no code
// with the library so they can check it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace oracle_ref {

using W = std::int64_t;

// Bit-by-bit Morton interleave.
inline std::uint64_t naive_morton (std::uint32_t x, std::uint32_t y, std::uint32_t z)
{
    std::uint64_t key = 0;
    for (int b = 0; b < 21; ++b) {
        key |= std::uint64_t((x >> b) & 1U) << (3 * b);
        key |= std::uint64_t((y >> b) & 1U) << (3 * b + 1);
        key |= std::uint64_t((z >> b) & 1U) << (3 * b + 2);
    }
    return key;
}

// Minimum over all P^N assignments of the maximum rank load, by recursion.
// With `nonempty`, only assignments that use every rank count.
inline W min_max_load (const std::vector<W>& w, int P, bool nonempty = false)
{
    std::vector<W> load(std::size_t(P), 0);
    std::vector<int> cnt(std::size_t(P), 0);
    W best = std::numeric_limits<W>::max();
    std::function<void(std::size_t)> rec = [&] (std::size_t j) {
        if (j == w.size()) {
            if (nonempty && std::count(cnt.begin(), cnt.end(), 0) > 0) { return; }
            best = std::min(best, *std::max_element(load.begin(), load.end()));
            return;
        }
        for (int r = 0; r < P; ++r) {
            load[r] += w[j]; ++cnt[r];
            rec(j + 1);
            load[r] -= w[j]; --cnt[r];
        }
    };
    rec(0);
    return best;
}

// Minimum over all placements of P-1 cuts (C(N-1, P-1) of them) of the
// largest contiguous segment sum. Segments are nonempty.
inline W best_contiguous (const std::vector<W>& w, int P)
{
    const int n = static_cast<int>(w.size());
    W best = std::numeric_limits<W>::max();
    std::function<void(int, int, W)> rec = [&] (int start, int parts_left, W worst) {
        if (parts_left == 1) {
            W s = 0;
            for (int k = start; k < n; ++k) { s += w[k]; }
            best = std::min(best, std::max(worst, s));
            return;
        }
        W s = 0;
        for (int end = start; end <= n - parts_left; ++end) {
            s += w[end];
            rec(end + 1, parts_left - 1, std::max(worst, s));
        }
    };
    rec(0, P, 0);
    return best;
}

// Smallest target in [max, sum] for which a greedy scan fits in P segments,
// by linear scan.
inline W linear_painters (const std::vector<W>& w, int P)
{
    const W hi = std::accumulate(w.begin(), w.end(), W(0));
    for (W t = *std::max_element(w.begin(), w.end()); t <= hi; ++t) {
        int used = 1;
        W cur = 0;
        for (W x : w) {
            if (cur + x > t) { ++used; cur = x; } else { cur += x; }
        }
        if (used <= P) { return t; }
    }
    return hi;
}

inline std::vector<W> normal_weights (std::mt19937_64& gen, std::size_t n, double mean, double sd)
{
    std::normal_distribution<double> d(mean, sd);
    std::vector<W> w(n);
    for (auto& x : w) { x = std::max<W>(1, static_cast<W>(std::llround(d(gen)))); }
    return w;
}

}
