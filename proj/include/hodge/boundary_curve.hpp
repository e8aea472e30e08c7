#pragma once

#include <array>
#include <vector>

#include "hodge/errors.hpp"

namespace hodge {

// Partition of the marked points {1,...,n} into exactly 4 nonempty unordered
// blocks. Such a partition indexes a one-dimensional boundary stratum of an
// n-pointed space: the blocks record which points collide onto the four legs.
// Each block is stored sorted ascending; the blocks keep the order they were
// given in, so the legs of an induced 4-pointed datum follow the caller's
// order. Equality is order-insensitive, as befits an unordered partition.
// Point indices are 1-based throughout the library.
class BoundaryCurve {
public:
    BoundaryCurve(int n, std::array<std::vector<int>, 4> blocks);

    int n() const { return n_; }
    const std::array<std::vector<int>, 4>& blocks() const { return blocks_; }

    // true iff {j} is one of the blocks
    bool has_singleton(int j) const;

    bool operator==(const BoundaryCurve& other) const;

private:
    int n_;
    std::array<std::vector<int>, 4> blocks_;
};

// All partitions of {1,...,n} into exactly 4 nonempty blocks, in a fixed
// deterministic order. The count is the Stirling number S(n, 4):
// 1, 10, 65, 350, 1701 for n = 4..8.
std::vector<BoundaryCurve> enumerate_boundary_curves(int n);

} // namespace hodge
