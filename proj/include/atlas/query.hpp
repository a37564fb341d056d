#pragma once

#include <cstdint>
#include <vector>

#include "atlas/poset.hpp"
#include "atlas/pst.hpp"
#include "atlas/solvers.hpp"

namespace atlas {

// Atlas-backed successor index: one priority search tree per map plus the
// element-to-map lookup table. Immutable after construction; concurrent
// reads are safe.
class AtlasIndex {
public:
    // Revalidates the atlas: every element must be tight on its assigned map.
    // With prune enabled, the tree for map i keeps only the points of
    // elements reachable from something assigned to map i.
    AtlasIndex(const Poset& P, const Atlas& atlas, bool prune = false);

    // Exactly the closed successor set of x, by one quadrant query on the
    // tree of x's map.
    std::vector<int> successors(int x, int* visits = nullptr) const;

    uint64_t stored_points() const { return stored_points_; }
    int map_count() const { return int(trees_.size()); }
    const PrioritySearchTree& tree(int i) const { return trees_[static_cast<size_t>(i)]; }
    int map_of(int x) const { return assignment_[static_cast<size_t>(x)]; }

private:
    std::vector<PrioritySearchTree> trees_;
    std::vector<int> assignment_;
    std::vector<std::array<int64_t, 2>> coords_; // element -> point on its map
    uint64_t stored_points_ = 0;
};

} // namespace atlas
