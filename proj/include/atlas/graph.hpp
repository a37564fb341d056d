#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atlas/bits.hpp"

namespace atlas {

// Simple undirected graph; edges normalized to u < v and sorted.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names; // optional vertex names, size n when present

    static Graph make(int n, std::vector<std::pair<int, int>> edges,
                      std::vector<std::string> names = {});

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::string vertex_name(int v) const;
};

Graph complete_graph(int m);
Graph path_graph(int n);
Graph random_graph(int n, double p, uint64_t seed);

// Acyclic and maximum degree at most 2.
bool is_linear_forest(const Graph& G);
bool induces_linear_forest(const Graph& G, const Bits& U);

// Exhaustive over vertex subsets; intended for |V| <= 16.
std::pair<int, std::vector<int>> max_induced_linear_forest(const Graph& G);

// Exhaustive over 2-colorings; intended for |V| <= 20.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
two_linear_forest_partition(const Graph& G);

// Parses either an edge-list ("u v" per line, '#' comments) or an undirected
// DOT subset (graph { a -- b; c; }).
Graph parse_graph_text(const std::string& text);

} // namespace atlas
