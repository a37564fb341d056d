#include "atlas/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "atlas/rng.hpp"

namespace atlas {

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges,
                  std::vector<std::string> names) {
    Graph g;
    g.n = n;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph loop not allowed");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    if (!names.empty() && int(names.size()) != n)
        throw std::invalid_argument("vertex name count mismatch");
    g.names = std::move(names);
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

std::string Graph::vertex_name(int v) const {
    if (!names.empty()) return names[static_cast<size_t>(v)];
    return "v" + std::to_string(v + 1);
}

Graph complete_graph(int m) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) e.emplace_back(u, v);
    return Graph::make(m, std::move(e));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph::make(n, std::move(e));
}

Graph random_graph(int n, double p, uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) e.emplace_back(u, v);
    return Graph::make(n, std::move(e));
}

bool induces_linear_forest(const Graph& G, const Bits& U) {
    std::vector<int> deg(static_cast<size_t>(G.n), 0);
    int inner_edges = 0;
    for (auto& [u, v] : G.edges) {
        if (U.test(u) && U.test(v)) {
            if (++deg[static_cast<size_t>(u)] > 2 || ++deg[static_cast<size_t>(v)] > 2) return false;
            ++inner_edges;
        }
    }
    // Acyclicity: union-find over the induced edges.
    std::vector<int> parent(static_cast<size_t>(G.n));
    for (int i = 0; i < G.n; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[size_t(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (auto& [u, v] : G.edges) {
        if (!U.test(u) || !U.test(v)) continue;
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[static_cast<size_t>(ru)] = rv;
    }
    (void)inner_edges;
    return true;
}

bool is_linear_forest(const Graph& G) {
    Bits all(G.n);
    for (int i = 0; i < G.n; ++i) all.set(i);
    return induces_linear_forest(G, all);
}

std::pair<int, std::vector<int>> max_induced_linear_forest(const Graph& G) {
    if (G.n > 24) throw std::invalid_argument("max_induced_linear_forest: graph too large");
    int best = -1;
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << G.n); ++mask) {
        int k = __builtin_popcount(mask);
        if (k <= best) continue;
        Bits U(G.n);
        for (int i = 0; i < G.n; ++i)
            if (mask >> i & 1) U.set(i);
        if (induces_linear_forest(G, U)) {
            best = k;
            best_mask = mask;
        }
    }
    std::vector<int> vs;
    for (int i = 0; i < G.n; ++i)
        if (best_mask >> i & 1) vs.push_back(i);
    return {best < 0 ? 0 : best, vs};
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
two_linear_forest_partition(const Graph& G) {
    if (G.n > 24) throw std::invalid_argument("two_linear_forest_partition: graph too large");
    if (G.n == 0) return std::make_pair(std::vector<int>{}, std::vector<int>{});
    // Vertex 0 pinned to side one; complements are symmetric.
    for (uint32_t mask = 0; mask < (uint32_t(1) << (G.n - 1)); ++mask) {
        Bits a(G.n), b(G.n);
        a.set(0);
        for (int i = 1; i < G.n; ++i)
            (mask >> (i - 1) & 1 ? a : b).set(i);
        if (induces_linear_forest(G, a) && induces_linear_forest(G, b))
            return std::make_pair(a.to_vector(), b.to_vector());
    }
    return std::nullopt;
}

namespace {

Graph parse_edge_list(const std::string& text) {
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    auto intern = [&](const std::string& s) {
        auto [it, fresh] = ids.emplace(s, int(names.size()));
        if (fresh) names.push_back(s);
        return it->second;
    };
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (ls >> b) {
            int ia = intern(a);
            int ib = intern(b);
            edges.emplace_back(ia, ib);
        } else {
            intern(a); // isolated vertex
        }
    }
    const int n = int(names.size());
    return Graph::make(n, std::move(edges), std::move(names));
}

std::vector<std::string> dot_tokens(const std::string& text) {
    std::vector<std::string> toks;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == '{' || c == '}' || c == ';' || c == ',') {
            toks.emplace_back(1, c);
            ++i;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
            toks.emplace_back("--");
            i += 2;
        } else if (c == '"') {
            size_t j = text.find('"', i + 1);
            if (j == std::string::npos) throw std::invalid_argument("unterminated string in graph file");
            toks.push_back(text.substr(i + 1, j - i - 1));
            i = j + 1;
        } else {
            size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
                   std::string("{};,\"").find(text[j]) == std::string::npos &&
                   !(text[j] == '-' && j + 1 < text.size() && text[j + 1] == '-'))
                ++j;
            toks.push_back(text.substr(i, j - i));
            i = j;
        }
    }
    return toks;
}

Graph parse_dot(const std::string& text) {
    auto toks = dot_tokens(text);
    size_t i = 0;
    auto expect_keyword = [&](const std::string& kw) {
        if (i < toks.size() && toks[i] == kw) ++i;
    };
    expect_keyword("strict");
    if (i >= toks.size() || toks[i] != "graph")
        throw std::invalid_argument("only undirected DOT graphs are supported");
    ++i;
    if (i < toks.size() && toks[i] != "{") ++i; // optional graph name
    if (i >= toks.size() || toks[i] != "{") throw std::invalid_argument("expected '{' in DOT input");
    ++i;

    std::unordered_map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    auto intern = [&](const std::string& s) {
        auto [it, fresh] = ids.emplace(s, int(names.size()));
        if (fresh) names.push_back(s);
        return it->second;
    };
    while (i < toks.size() && toks[i] != "}") {
        if (toks[i] == ";") {
            ++i;
            continue;
        }
        int prev = intern(toks[i]);
        ++i;
        while (i + 1 < toks.size() && toks[i] == "--") {
            int next = intern(toks[i + 1]);
            edges.emplace_back(prev, next);
            prev = next;
            i += 2;
        }
    }
    const int n = int(names.size());
    return Graph::make(n, std::move(edges), std::move(names));
}

} // namespace

Graph parse_graph_text(const std::string& text) {
    for (size_t i = 0; i < text.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
        if (text.compare(i, 5, "graph") == 0 || text.compare(i, 6, "strict") == 0)
            return parse_dot(text);
        break;
    }
    return parse_edge_list(text);
}

} // namespace atlas
