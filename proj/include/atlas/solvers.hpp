#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "atlas/plane_map.hpp"
#include "atlas/poset.hpp"

namespace atlas {

namespace detail {
class SideSystem;
}

struct SearchBudget {
    uint64_t max_nodes = 50'000'000;
    uint64_t max_cover_sets = 1'000'000;
};

// Exceeding a budget is a reported outcome, never a wrong answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Two linear extensions witnessing that every element of T is tight on
// map_from_extensions(K, L).
struct TightSetCertificate {
    Bits T;
    Extension K, L;
};

// Decides whether a prescribed element set can be simultaneously tight.
// By the normal-form argument this reduces to assigning, for every t in T
// and z incomparable to t, the constraint "z before t" to one of two sides
// so that each side stays acyclic together with the poset order.
// Shares the crown-obstruction list and a memo table across queries.
class FeasibilitySolver {
public:
    explicit FeasibilitySolver(const Poset& P, SearchBudget budget = {},
                               bool crown_prune = true);

    bool feasible(const Bits& T);
    std::optional<TightSetCertificate> certificate(const Bits& T);

    const std::vector<std::array<int, 3>>& crowns() const { return crowns_; }
    uint64_t nodes() const { return nodes_; }

private:
    struct Req {
        int z, t;
    };
    bool search(const std::vector<Req>& reqs, detail::SideSystem& sides);
    std::vector<Req> requirements(const Bits& T) const;
    bool contains_crown(const Bits& T) const;

    const Poset& P_;
    SearchBudget budget_;
    bool crown_prune_;
    std::vector<std::array<int, 3>> crowns_;
    std::vector<int> by_inc_degree_; // element order, most constrained first
    std::unordered_map<Bits, bool, BitsHash> memo_;
    uint64_t nodes_ = 0;
};

std::optional<TightSetCertificate> feasible_tight_set(const Poset& P, const Bits& T,
                                                      const SearchBudget& budget = {});

struct MapabilityResult {
    int value = 0;
    TightSetCertificate witness;
};

// Maximum number of simultaneously tight elements. Branch and bound over
// elements; feasibility is downward closed, so an infeasible partial set
// prunes its whole subtree. Warm-started from the constructive bounds.
MapabilityResult mapability(const Poset& P, const SearchBudget& budget = {},
                            int threads = 1);

struct Atlas {
    std::vector<PlaneMap> maps;
    std::vector<int> assignment; // element -> map index
    std::vector<TightSetCertificate> certificates; // parallel to maps; may be empty
};

struct AtlasResult {
    int thickness = 0;
    Atlas atlas;
};

// Exact minimum atlas: enumerate maximal feasible tight sets, then exact
// minimum set cover (bitmask DP up to 24 uncovered elements, branch and
// bound above).
AtlasResult atlas_thickness(const Poset& P, const SearchBudget& budget = {});

// ceil(width/2) maps from a Dilworth chain cover, chains paired two at a time.
Atlas chain_pairing_atlas(const Poset& P);

// Exact minimum number of parts covering the elements such that no part
// contains a full crown triple; a lower bound on the atlas thickness.
int crown_lower_bound(const Poset& P);

struct Realizer {
    std::vector<Extension> extensions;
    int size() const { return int(extensions.size()); }
};

// Least k <= k_max admitting a realizer, as a backtracking partition of the
// incomparable-pair reversal requirements into k acyclic sides.
std::optional<Realizer> dimension_exact(const Poset& P, int k_max,
                                        const SearchBudget& budget = {});
bool realizer_valid(const Poset& P, const Realizer& r);

struct Bounds {
    int dim_lower_from_at = 0;      // cheap dimension lower bound (crown detection)
    int at_lower_crown = 0;         // crown_lower_bound
    int at_lower_dim = 0;           // ceil(dim lower bound / 2)
    int at_upper_chain_pairing = 0; // ceil(width/2)
    int dmap_lower_height = 0;      // height (+1 unless a chain)
    int dmap_lower_maxup = 0;       // largest up-module
};

// All bounds are polynomial except the crown cover, which is capped.
Bounds bounds(const Poset& P);

// Tower of height d: top element d, the d-1 entries below are 4s;
// saturates at cap.
uint64_t mapability_size_limit(int d, uint64_t cap = uint64_t(INT64_MAX));

// |P| <= f(dmap) with f the saturating tower above.
bool size_bound_check(const Poset& P, int d);

bool certificate_valid(const Poset& P, const TightSetCertificate& cert);
bool atlas_valid(const Poset& P, const Atlas& atlas);

namespace detail {
// Exact minimum set cover of `universe` (bit positions) by the given sets;
// returns indices of chosen sets. `force_bnb` bypasses the DP path (tests).
std::vector<int> min_set_cover(const std::vector<Bits>& sets, const Bits& universe,
                               bool force_bnb = false);
} // namespace detail

} // namespace atlas
