#include <boxlb/geometry.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace boxlb {

bool IndexBox::ok () const noexcept
{
    for (int d = 0; d < 3; ++d) {
        if (lo[d] < 0 || lo[d] > hi[d]) { return false; }
    }
    return true;
}

std::int64_t IndexBox::numPts () const noexcept
{
    return std::int64_t(length(0)) * length(1) * length(2);
}

bool IndexBox::intersects (const IndexBox& rhs) const noexcept
{
    for (int d = 0; d < 3; ++d) {
        if (hi[d] < rhs.lo[d] || rhs.hi[d] < lo[d]) { return false; }
    }
    return true;
}

namespace {

// Compare aspect ratios max/min of two triples without division.
// Returns true if a is strictly more cube-like than b.
bool more_cubic (const IntVect& a, const IntVect& b)
{
    auto [amin, amax] = std::minmax_element(a.begin(), a.end());
    auto [bmin, bmax] = std::minmax_element(b.begin(), b.end());
    return std::int64_t(*amax) * (*bmin) < std::int64_t(*bmax) * (*amin);
}

// Interval i of n near-even pieces of [0, len), longer pieces first.
std::pair<int,int> chop (int len, int n, int i)
{
    const int base = len / n;
    const int extra = len % n;
    const int lo = i * base + std::min(i, extra);
    const int sz = base + (i < extra ? 1 : 0);
    return {lo, lo + sz - 1};
}

}

IntVect factor_box_count (const IntVect& domain_extent, int target)
{
    if (target < 1) {
        throw std::invalid_argument("target box count must be positive, got " + std::to_string(target));
    }
    bool found = false;
    IntVect best{};
    for (int bx = 1; bx <= target; ++bx) {
        if (target % bx != 0) { continue; }
        const int rest = target / bx;
        for (int by = 1; by <= rest; ++by) {
            if (rest % by != 0) { continue; }
            const IntVect cand{bx, by, rest / by};
            bool fits = true;
            for (int d = 0; d < 3; ++d) { fits = fits && cand[d] <= domain_extent[d]; }
            if (!fits) { continue; }
            if (!found || more_cubic(cand, best) ||
                (!more_cubic(best, cand) && cand > best)) {
                best = cand;
                found = true;
            }
        }
    }
    if (!found) {
        throw std::invalid_argument("cannot chop domain into " + std::to_string(target) + " boxes");
    }
    return best;
}

BoxArray make_box_array (const IntVect& domain_extent, int target_box_count)
{
    for (int d = 0; d < 3; ++d) {
        if (domain_extent[d] < 1) {
            throw std::invalid_argument("domain extent must be positive in every direction");
        }
    }
    const std::int64_t ncells = std::int64_t(domain_extent[0]) * domain_extent[1] * domain_extent[2];
    if (target_box_count < 1 || target_box_count > ncells) {
        throw std::invalid_argument("target box count " + std::to_string(target_box_count)
                                    + " outside [1, " + std::to_string(ncells) + "]");
    }

    const IntVect nb = factor_box_count(domain_extent, target_box_count);

    BoxArray ba;
    ba.domain = IndexBox{{0, 0, 0}, {domain_extent[0] - 1, domain_extent[1] - 1, domain_extent[2] - 1}};
    ba.boxes.reserve(static_cast<std::size_t>(target_box_count));
    for (int k = 0; k < nb[2]; ++k) {
        const auto [zlo, zhi] = chop(domain_extent[2], nb[2], k);
        for (int j = 0; j < nb[1]; ++j) {
            const auto [ylo, yhi] = chop(domain_extent[1], nb[1], j);
            for (int i = 0; i < nb[0]; ++i) {
                const auto [xlo, xhi] = chop(domain_extent[0], nb[0], i);
                ba.boxes.push_back(IndexBox{{xlo, ylo, zlo}, {xhi, yhi, zhi}});
            }
        }
    }
    return ba;
}

namespace {

// Spread the low 21 bits of v so that bit b moves to bit 3b.
constexpr std::uint64_t spread3 (std::uint64_t v)
{
    v &= 0x1fffffULL;
    v = (v | (v << 32)) & 0x001f00000000ffffULL;
    v = (v | (v << 16)) & 0x001f0000ff0000ffULL;
    v = (v | (v << 8))  & 0x100f00f00f00f00fULL;
    v = (v | (v << 4))  & 0x10c30c30c30c30c3ULL;
    v = (v | (v << 2))  & 0x1249249249249249ULL;
    return v;
}

static_assert(spread3(0b111) == 0b001001001);
static_assert(spread3(0x1fffff) == 0x1249249249249249ULL);

}

std::uint64_t morton_interleave (std::uint32_t x, std::uint32_t y, std::uint32_t z)
{
    return spread3(x) | (spread3(y) << 1) | (spread3(z) << 2);
}

MortonKey morton_key (const IndexBox& box, std::size_t box_index)
{
    for (int d = 0; d < 3; ++d) {
        if (box.lo[d] < 0 || box.lo[d] >= morton_coord_limit) {
            throw std::out_of_range("box anchor coordinate " + std::to_string(box.lo[d])
                                    + " outside Morton range [0, 2^21)");
        }
    }
    return MortonKey{morton_interleave(static_cast<std::uint32_t>(box.lo[0]),
                                       static_cast<std::uint32_t>(box.lo[1]),
                                       static_cast<std::uint32_t>(box.lo[2])),
                     box_index};
}

std::vector<std::size_t> sfc_order (const BoxArray& ba)
{
    std::vector<MortonKey> tokens;
    tokens.reserve(ba.size());
    for (std::size_t i = 0; i < ba.size(); ++i) {
        tokens.push_back(morton_key(ba[i], i));
    }
    std::sort(tokens.begin(), tokens.end(), [] (const MortonKey& a, const MortonKey& b) {
        return a.key < b.key || (a.key == b.key && a.box_index < b.box_index);
    });
    std::vector<std::size_t> order;
    order.reserve(tokens.size());
    for (const auto& t : tokens) { order.push_back(t.box_index); }
    return order;
}

bool tiles_domain (const BoxArray& ba)
{
    std::int64_t cells = 0;
    for (const auto& b : ba.boxes) {
        if (!b.ok()) { return false; }
        for (int d = 0; d < 3; ++d) {
            if (b.lo[d] < ba.domain.lo[d] || b.hi[d] > ba.domain.hi[d]) { return false; }
        }
        cells += b.numPts();
    }
    if (cells != ba.domain.numPts()) { return false; }
    for (std::size_t i = 0; i < ba.size(); ++i) {
        for (std::size_t j = i + 1; j < ba.size(); ++j) {
            if (ba[i].intersects(ba[j])) { return false; }
        }
    }
    return true;
}

}
