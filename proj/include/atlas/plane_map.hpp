#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "atlas/graph.hpp"
#include "atlas/poset.hpp"

namespace atlas {

// Injective placement of the elements into the integer plane, indexed by
// element id. One coordinate may be shared between two points; both may not.
struct PlaneMap {
    std::vector<std::array<int64_t, 2>> pts;

    int64_t x(int e) const { return pts[static_cast<size_t>(e)][0]; }
    int64_t y(int e) const { return pts[static_cast<size_t>(e)][1]; }
};

struct TightnessReport {
    Bits tight;
    struct Violation {
        int x;                        // the non-tight element
        int y;                        // the witness
        bool dominated_not_successor; // true: y dominated but not a successor
    };
    std::vector<Violation> violations; // one per non-tight element, by x
};

// An element is tight when its dominated point set (weak coordinatewise <=)
// equals its closed successor set.
TightnessReport tight_elements(const Poset& P, const PlaneMap& mu);

// Places x at (position in K, position in L); K and L must be linear extensions.
PlaneMap map_from_extensions(const Poset& P, const Extension& K, const Extension& L);

// Rebuilds the map so both coordinate projections are linear extensions of P
// (coordinates become 0..n-1) without losing any tight element.
PlaneMap normalize(const Poset& P, const PlaneMap& mu);

// Map on which every element of the two chains is tight. Chains may overlap
// or coincide; elements may be passed in any order.
PlaneMap two_chain_map(const Poset& P, std::vector<int> C, std::vector<int> D);

// Given an up-module M, a seed map and an element v of M tight on the seed,
// produces a map with all of M tight: normalize, scale by |M|+1, then spread
// M along the slope -1 segment through v's point.
PlaneMap up_module_map(const Poset& P, const std::vector<int>& M,
                       const PlaneMap& seed, int v);

// Map of the incidence poset of G making U and all edges tight; G[U] must be
// a linear forest. Element ids follow incidence_poset(G).
PlaneMap linear_forest_map(const Graph& G, const std::vector<int>& U);

// For maps whose coordinates are the 0..n-1 position grid, recovers the
// defining extension pair.
std::pair<Extension, Extension> grid_map_extensions(const PlaneMap& mu);

// Deterministic SVG rendering; `highlight` >= 0 shades that element's
// dominance quadrant.
std::string render_svg(const Poset& P, const PlaneMap& mu,
                       const TightnessReport& report, int highlight = -1);

} // namespace atlas
