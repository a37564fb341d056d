#include "atlas/query.hpp"

#include <algorithm>
#include <stdexcept>

#include "atlas/plane_map.hpp"

namespace atlas {

AtlasIndex::AtlasIndex(const Poset& P, const Atlas& atlas, bool prune) {
    const int n = P.size();
    if (n == 0) return;
    if (int(atlas.assignment.size()) != n)
        throw std::invalid_argument("invalid atlas: assignment size mismatch");

    const int m = int(atlas.maps.size());
    std::vector<Bits> tight;
    tight.reserve(static_cast<size_t>(m));
    for (const auto& mu : atlas.maps) tight.push_back(tight_elements(P, mu).tight);

    assignment_ = atlas.assignment;
    coords_.assign(static_cast<size_t>(n), {0, 0});
    std::vector<Bits> keep(static_cast<size_t>(m), Bits{n});
    for (int x = 0; x < n; ++x) {
        int mi = assignment_[static_cast<size_t>(x)];
        if (mi < 0 || mi >= m)
            throw std::invalid_argument("invalid atlas: assignment out of range");
        if (!tight[static_cast<size_t>(mi)].test(x))
            throw std::invalid_argument("invalid atlas: element " + P.label(x) +
                                        " is not tight on its assigned map");
        coords_[static_cast<size_t>(x)] = atlas.maps[static_cast<size_t>(mi)].pts[static_cast<size_t>(x)];
        if (prune) keep[static_cast<size_t>(mi)] |= P.succ_closed(x);
    }

    for (int i = 0; i < m; ++i) {
        std::vector<PrioritySearchTree::Entry> entries;
        for (int y = 0; y < n; ++y) {
            if (prune && !keep[static_cast<size_t>(i)].test(y)) continue;
            entries.push_back({atlas.maps[static_cast<size_t>(i)].x(y), atlas.maps[static_cast<size_t>(i)].y(y), y});
        }
        stored_points_ += entries.size();
        trees_.emplace_back(std::move(entries));
    }
}

std::vector<int> AtlasIndex::successors(int x, int* visits) const {
    if (x < 0 || x >= int(assignment_.size()))
        throw std::invalid_argument("unknown element id in successor query");
    std::vector<int> out;
    trees_[size_t(assignment_[static_cast<size_t>(x)])].quadrant_query(coords_[static_cast<size_t>(x)][0],
                                                          coords_[static_cast<size_t>(x)][1], out, visits);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace atlas
