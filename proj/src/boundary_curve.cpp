#include "hodge/boundary_curve.hpp"

#include <algorithm>

namespace hodge {

BoundaryCurve::BoundaryCurve(int n, std::array<std::vector<int>, 4> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 4) {
        throw DimensionError("boundary curve: need at least 4 marked points, got " +
                             std::to_string(n_));
    }
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    int covered = 0;
    for (auto& block : blocks_) {
        if (block.empty()) {
            throw ValidationError("boundary curve: blocks must be nonempty");
        }
        std::sort(block.begin(), block.end());
        for (int idx : block) {
            if (idx < 1 || idx > n_ || seen[static_cast<std::size_t>(idx)]) {
                throw ValidationError("boundary curve: blocks must partition {1,...," +
                                      std::to_string(n_) + "}");
            }
            seen[static_cast<std::size_t>(idx)] = 1;
        }
        covered += static_cast<int>(block.size());
    }
    if (covered != n_) {
        throw ValidationError("boundary curve: blocks must cover every marked point");
    }
}

bool BoundaryCurve::operator==(const BoundaryCurve& other) const {
    if (n_ != other.n_) {
        return false;
    }
    auto a = blocks_;
    auto b = other.blocks_;
    const auto by_front = [](const std::vector<int>& x, const std::vector<int>& y) {
        return x.front() < y.front();
    };
    std::sort(a.begin(), a.end(), by_front);
    std::sort(b.begin(), b.end(), by_front);
    return a == b;
}

bool BoundaryCurve::has_singleton(int j) const {
    for (const auto& block : blocks_) {
        if (block.size() == 1 && block.front() == j) {
            return true;
        }
    }
    return false;
}

namespace {

void extend(int n, int next, int used, std::array<std::vector<int>, 4>& blocks,
            std::vector<BoundaryCurve>& out) {
    if (n - next + 1 < 4 - used) {
        return; // not enough points left to fill the remaining blocks
    }
    if (next > n) {
        out.emplace_back(n, blocks);
        return;
    }
    // restricted growth: a point may join an existing block or open the next
    // empty one, so each partition is produced exactly once
    const int limit = std::min(used + 1, 4);
    for (int b = 0; b < limit; ++b) {
        blocks[static_cast<std::size_t>(b)].push_back(next);
        extend(n, next + 1, std::max(used, b + 1), blocks, out);
        blocks[static_cast<std::size_t>(b)].pop_back();
    }
}

} // namespace

std::vector<BoundaryCurve> enumerate_boundary_curves(int n) {
    if (n < 4) {
        throw DimensionError("enumerate_boundary_curves: need n >= 4, got " + std::to_string(n));
    }
    std::vector<BoundaryCurve> out;
    std::array<std::vector<int>, 4> blocks;
    extend(n, 1, 0, blocks, out);
    return out;
}

} // namespace hodge
