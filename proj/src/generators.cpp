#include "atlas/generators.hpp"

#include <stdexcept>

#include "atlas/rng.hpp"

namespace atlas {

Poset standard_example(int m) {
    if (m < 1) throw std::invalid_argument("standard_example: m must be positive");
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 1; i <= m; ++i) labels.push_back("b" + std::to_string(i));
    std::vector<Bits> rows(size_t(2 * m), Bits(2 * m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) rows[static_cast<size_t>(i)].set(m + j);
    return Poset::from_rows(std::move(labels), std::move(rows));
}

Poset crown() {
    return Poset::build({"a", "b", "c", "ab", "bc", "ac"},
                        {{"a", "ab"}, {"a", "ac"}, {"b", "ab"},
                         {"b", "bc"}, {"c", "ac"}, {"c", "bc"}});
}

Poset chain(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<Bits> rows(static_cast<size_t>(n), Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rows[static_cast<size_t>(i)].set(j);
    return Poset::from_rows(std::move(labels), std::move(rows));
}

Poset antichain(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Poset::from_rows(std::move(labels), std::vector<Bits>(static_cast<size_t>(n), Bits(n)));
}

Poset incidence_poset(const Graph& G) {
    const int nv = G.n, ne = int(G.edges.size());
    std::vector<std::string> labels;
    labels.reserve(size_t(nv + ne));
    for (int v = 0; v < nv; ++v) labels.push_back(G.vertex_name(v));
    for (auto& [u, v] : G.edges)
        labels.push_back(G.vertex_name(u) + "-" + G.vertex_name(v));
    std::vector<Bits> rows(size_t(nv + ne), Bits(nv + ne));
    for (int j = 0; j < ne; ++j) {
        rows[size_t(G.edges[static_cast<size_t>(j)].first)].set(nv + j);
        rows[size_t(G.edges[static_cast<size_t>(j)].second)].set(nv + j);
    }
    return Poset::from_rows(std::move(labels), std::move(rows));
}

int incidence_vertex_id(int v) { return v; }

int incidence_edge_id(const Graph& G, int edge_index) {
    return G.n + edge_index;
}

Poset random_poset(int n, double p, uint64_t seed) {
    Rng rng(seed);
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    rng.shuffle(order);
    std::vector<Bits> rows(static_cast<size_t>(n), Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.coin(p)) rows[size_t(order[static_cast<size_t>(i)])].set(order[static_cast<size_t>(j)]);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (rows[static_cast<size_t>(i)].test(k)) rows[static_cast<size_t>(i)] |= rows[static_cast<size_t>(k)];
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    return Poset::from_rows(std::move(labels), std::move(rows));
}

} // namespace atlas
