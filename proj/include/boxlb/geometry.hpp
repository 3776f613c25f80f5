#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace boxlb {

using IntVect = std::array<int, 3>;

// A rectilinear block of cells, lo and hi inclusive.
struct IndexBox
{
    IntVect lo{0, 0, 0};
    IntVect hi{0, 0, 0};

    [[nodiscard]] bool ok () const noexcept;
    [[nodiscard]] std::int64_t numPts () const noexcept;
    [[nodiscard]] int length (int dir) const noexcept { return hi[dir] - lo[dir] + 1; }
    [[nodiscard]] bool intersects (const IndexBox& rhs) const noexcept;

    friend bool operator== (const IndexBox&, const IndexBox&) = default;
};

// Ordered list of boxes tiling `domain`; box j is identified by its index j.
struct BoxArray
{
    IndexBox domain;
    std::vector<IndexBox> boxes;

    [[nodiscard]] std::size_t size () const noexcept { return boxes.size(); }
    [[nodiscard]] const IndexBox& operator[] (std::size_t i) const { return boxes[i]; }
};

struct MortonKey
{
    std::uint64_t key = 0;
    std::size_t box_index = 0;
};

inline constexpr int morton_bits_per_dim = 21;
inline constexpr int morton_coord_limit = 1 << morton_bits_per_dim;

//! Factor `target` into per-axis box counts (bx,by,bz) with bx*by*bz == target
//! and each count no larger than the corresponding axis length. Picks the most
//! cube-like triple; among equally cube-like triples the lexicographically
//! largest wins, so x is split hardest. Throws std::invalid_argument if no
//! triple fits.
IntVect factor_box_count (const IntVect& domain_extent, int target);

//! Chop a domain of `domain_extent` cells, anchored at the origin, into exactly
//! `target_box_count` boxes. Axis intervals are near-even: when the split is
//! uneven, the longer intervals come first. Boxes are created x-fastest.
BoxArray make_box_array (const IntVect& domain_extent, int target_box_count);

//! Interleave the low 21 bits of x, y and z; x lands in bit 0 of each 3-bit group.
std::uint64_t morton_interleave (std::uint32_t x, std::uint32_t y, std::uint32_t z);

//! Morton key of the box's lo corner. Throws std::out_of_range for anchors
//! outside [0, 2^21).
MortonKey morton_key (const IndexBox& box, std::size_t box_index = 0);

//! Box indices sorted by Morton key, ties by original index.
std::vector<std::size_t> sfc_order (const BoxArray& ba);

//! Cell-count and pairwise-overlap check that `ba.boxes` tile `ba.domain`.
//! The pairwise test is quadratic; only use it on small arrays.
bool tiles_domain (const BoxArray& ba);

}
