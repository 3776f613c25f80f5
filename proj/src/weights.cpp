#include <boxlb/weights.hpp>

#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace boxlb {

std::optional<double> parse_std_dev (std::string_view text)
{
    if (text == "small")  { return small_std_dev; }
    if (text == "medium") { return medium_std_dev; }
    if (text == "large")  { return large_std_dev; }
    try {
        std::size_t pos = 0;
        const std::string s(text);
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v) || v < 0.0) { return std::nullopt; }
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

WeightVector generate_weights (const WeightDistribution& dist, std::size_t count)
{
    if (!(dist.mean > 0.0)) {
        throw std::invalid_argument("weight distribution mean must be positive");
    }
    if (!(dist.std_dev >= 0.0)) {
        throw std::invalid_argument("weight distribution std dev must be non-negative");
    }

    constexpr double two_pow_m53 = 1.0 / 9007199254740992.0;
    std::mt19937_64 gen(dist.seed);

    WeightVector w;
    w.reserve(count);
    auto push = [&] (double z) {
        const double x = std::round(dist.mean + dist.std_dev * z);
        w.push_back(x < 1.0 ? Weight(1) : static_cast<Weight>(x));
    };

    while (w.size() < count) {
        const double u1 = double((gen() >> 11) + 1) * two_pow_m53;
        const double u2 = double(gen() >> 11) * two_pow_m53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        push(r * std::cos(theta));
        if (w.size() < count) { push(r * std::sin(theta)); }
    }
    return w;
}

std::uint64_t hash_weights (const WeightVector& w)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Weight v : w) {
        auto u = static_cast<std::uint64_t>(v);
        for (int b = 0; b < 8; ++b) {
            h ^= (u >> (8 * b)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

}
