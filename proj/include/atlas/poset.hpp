#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "atlas/bits.hpp"

namespace atlas {

using Extension = std::vector<int>; // permutation of element ids

enum class RelationMode { Covers, Full };

// Finite poset over elements 0..n-1. The strict order is kept transitively
// closed so comparability is a single bit test.
class Poset {
public:
    Poset() = default;

    // Builds from named relations; closes transitively and rejects cycles,
    // duplicate labels and unknown endpoints. In Covers mode the input pairs
    // are read as Hasse edges (the closure is the same either way).
    static Poset build(std::vector<std::string> labels,
                       const std::vector<std::pair<std::string, std::string>>& relations,
                       RelationMode mode = RelationMode::Covers);

    // Trusted constructor for generators: rows must already be a strict
    // transitively closed relation.
    static Poset from_rows(std::vector<std::string> labels, std::vector<Bits> lt_rows);

    int size() const { return n_; }
    const std::string& label(int x) const { return labels_[static_cast<size_t>(x)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(std::string_view name) const;

    bool less(int x, int y) const { return lt_[static_cast<size_t>(x)].test(y); }
    bool leq(int x, int y) const { return x == y || less(x, y); }
    bool comparable(int x, int y) const { return less(x, y) || less(y, x); }

    const Bits& succ_open(int x) const { return lt_[static_cast<size_t>(x)]; }
    const Bits& pred_open(int x) const { return gt_[static_cast<size_t>(x)]; }
    // Elements incomparable to x (excluding x).
    const Bits& incomparable_to(int x) const { return inc_[static_cast<size_t>(x)]; }

    Bits succ_closed(int x) const {
        Bits b = lt_[static_cast<size_t>(x)];
        b.set(x);
        return b;
    }

    Bits all() const;
    bool is_chain() const;

    // Smallest-index-first topological order of the elements in `mask`.
    std::vector<int> topo_min_first(const Bits& mask) const;
    std::vector<int> topo_min_first() const { return topo_min_first(all()); }

    std::vector<std::pair<int, int>> hasse_edges() const;

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Bits> lt_;  // lt_[x].test(y) iff x < y
    std::vector<Bits> gt_;  // transpose
    std::vector<Bits> inc_;
    std::unordered_map<std::string, int> index_;

    void finish(); // fills gt_, inc_, index_
};

Bits successors_closed(const Poset& P, int x);

struct WidthResult {
    int width = 0;
    std::vector<std::vector<int>> chains; // partition, each increasing in P
};

// Minimum chain cover via maximum bipartite matching (Dilworth).
WidthResult width_and_cover(const Poset& P);

int height(const Poset& P);

// Canonical top-down antichain partition: A_1 = Max(P), then peel.
std::vector<std::vector<int>> antichain_partition(const Poset& P);

Bits maximal_elements(const Poset& P);

// Partition into maximal up-modules (equal open successor sets).
std::vector<std::vector<int>> up_module_partition(const Poset& P);

bool is_linear_extension(const Poset& P, const Extension& order);

// (x,y) true iff x precedes y in both K and L.
std::vector<Bits> intersection_dominance(const Extension& K, const Extension& L);

// Subposet induced by S; element i of the result is S[i].
Poset induced_subposet(const Poset& P, const std::vector<int>& S);

// All 3-antichains {x,y,z} that are the minimal elements of an induced
// 6-element crown in P.
std::vector<std::array<int, 3>> crown_triples(const Poset& P);

} // namespace atlas
