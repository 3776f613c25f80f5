#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace boxlb {

using Weight = std::int64_t;
using WeightVector = std::vector<Weight>;

struct WeightDistribution
{
    double mean = 100000.0;
    double std_dev = 0.0;
    std::uint64_t seed = 0;
};

// Standard-deviation presets of the study, all with mean 100000.
inline constexpr double default_mean = 100000.0;
inline constexpr double small_std_dev = 250.0;
inline constexpr double medium_std_dev = 4523.0;
inline constexpr double large_std_dev = 25231.0;

// Identifier written to config.json so results can be tied to the sampler.
inline constexpr std::string_view weight_generator_id = "mt19937_64/box-muller/round-half-away/clamp-1";

//! Resolve "small", "medium", "large" or a non-negative number to a std dev.
std::optional<double> parse_std_dev (std::string_view text);

/**
 * Draw `count` weights from Normal(mean, std_dev).
 *
 * The stream is std::mt19937_64 seeded with `dist.seed`. Each pair of 64-bit
 * draws becomes two uniforms u1 in (0,1] and u2 in [0,1) with 53-bit
 * resolution, which Box-Muller turns into two normal deviates (cos branch
 * first). Samples are rounded half away from zero and clamped to >= 1.
 */
WeightVector generate_weights (const WeightDistribution& dist, std::size_t count);

//! FNV-1a over the little-endian bytes of the weights.
std::uint64_t hash_weights (const WeightVector& w);

}
