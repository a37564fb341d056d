#include "atlas/plane_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "atlas/generators.hpp"

namespace atlas {

namespace {

void check_map(const Poset& P, const PlaneMap& mu) {
    if (int(mu.pts.size()) != P.size())
        throw std::invalid_argument("map does not cover every element");
    auto pts = mu.pts;
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw std::invalid_argument("map is not injective");
}

std::vector<int> sorted_chain(const Poset& P, std::vector<int> C) {
    std::sort(C.begin(), C.end());
    C.erase(std::unique(C.begin(), C.end()), C.end());
    std::sort(C.begin(), C.end(), [&](int a, int b) { return P.less(a, b); });
    for (size_t i = 0; i + 1 < C.size(); ++i)
        if (!P.less(C[i], C[i + 1]))
            throw std::invalid_argument("not a chain");
    return C;
}

} // namespace

TightnessReport tight_elements(const Poset& P, const PlaneMap& mu) {
    check_map(P, mu);
    const int n = P.size();
    TightnessReport rep;
    rep.tight = Bits(n);
    for (int x = 0; x < n; ++x) {
        Bits dominated(n);
        for (int y = 0; y < n; ++y)
            if (mu.x(x) <= mu.x(y) && mu.y(x) <= mu.y(y)) dominated.set(y);
        Bits expected = P.succ_closed(x);
        if (dominated == expected) {
            rep.tight.set(x);
            continue;
        }
        Bits extra = dominated;
        extra.and_not(expected);
        if (extra.any()) {
            rep.violations.push_back({x, extra.find_first(), true});
        } else {
            Bits missing = expected;
            missing.and_not(dominated);
            rep.violations.push_back({x, missing.find_first(), false});
        }
    }
    return rep;
}

PlaneMap map_from_extensions(const Poset& P, const Extension& K, const Extension& L) {
    if (!is_linear_extension(P, K) || !is_linear_extension(P, L))
        throw std::invalid_argument("not a linear extension of the poset");
    PlaneMap mu;
    mu.pts.assign(size_t(P.size()), {0, 0});
    for (int i = 0; i < P.size(); ++i) mu.pts[size_t(K[static_cast<size_t>(i)])][0] = i;
    for (int i = 0; i < P.size(); ++i) mu.pts[size_t(L[static_cast<size_t>(i)])][1] = i;
    return mu;
}

PlaneMap normalize(const Poset& P, const PlaneMap& mu) {
    check_map(P, mu);
    const int n = P.size();
    TightnessReport rep = tight_elements(P, mu);
    std::vector<int> T = rep.tight.to_vector();
    const int k = int(T.size());

    // Tie-break equal coordinates with a fixed linear extension of P, so a
    // comparable tied pair keeps its order and the projections stay extensions.
    std::vector<int> ref_pos(static_cast<size_t>(n));
    {
        auto ref = P.topo_min_first();
        for (int i = 0; i < n; ++i) ref_pos[size_t(ref[static_cast<size_t>(i)])] = i;
    }
    std::vector<int> xs = T, ys = T;
    std::sort(xs.begin(), xs.end(), [&](int a, int b) {
        return std::make_pair(mu.x(a), ref_pos[static_cast<size_t>(a)]) <
               std::make_pair(mu.x(b), ref_pos[static_cast<size_t>(b)]);
    });
    std::sort(ys.begin(), ys.end(), [&](int a, int b) {
        return std::make_pair(mu.y(a), ref_pos[static_cast<size_t>(a)]) <
               std::make_pair(mu.y(b), ref_pos[static_cast<size_t>(b)]);
    });

    // Bucket the non-tight elements below the largest tight element under them.
    auto build = [&](const std::vector<int>& seq) {
        std::vector<Bits> blocks(size_t(k + 1), Bits(n));
        for (int p = 0; p < n; ++p) {
            if (rep.tight.test(p)) continue;
            int ip = 0;
            for (int i = k - 1; i >= 0; --i) {
                if (P.less(seq[static_cast<size_t>(i)], p)) {
                    ip = i + 1;
                    break;
                }
            }
            blocks[static_cast<size_t>(ip)].set(p);
        }
        Extension out;
        out.reserve(static_cast<size_t>(n));
        for (int i = 0; i <= k; ++i) {
            for (int e : P.topo_min_first(blocks[static_cast<size_t>(i)])) out.push_back(e);
            if (i < k) out.push_back(seq[static_cast<size_t>(i)]);
        }
        return out;
    };

    Extension K = build(xs);
    Extension L = build(ys);
    PlaneMap out;
    out.pts.assign(static_cast<size_t>(n), {0, 0});
    for (int i = 0; i < n; ++i) out.pts[size_t(K[static_cast<size_t>(i)])][0] = i;
    for (int i = 0; i < n; ++i) out.pts[size_t(L[static_cast<size_t>(i)])][1] = i;
    return out;
}

PlaneMap two_chain_map(const Poset& P, std::vector<int> C, std::vector<int> D) {
    const int n = P.size();
    C = sorted_chain(P, std::move(C));
    D = sorted_chain(P, std::move(D));

    auto build = [&](const std::vector<int>& chain) {
        const int k = int(chain.size());
        Bits in_chain(n);
        for (int c : chain) in_chain.set(c);
        std::vector<Bits> blocks(size_t(k + 1), Bits(n));
        for (int p = 0; p < n; ++p) {
            if (in_chain.test(p)) continue;
            int ip = 0;
            for (int i = k - 1; i >= 0; --i) {
                if (P.leq(chain[static_cast<size_t>(i)], p)) {
                    ip = i + 1;
                    break;
                }
            }
            blocks[static_cast<size_t>(ip)].set(p);
        }
        Extension out;
        out.reserve(static_cast<size_t>(n));
        for (int i = 0; i <= k; ++i) {
            for (int e : P.topo_min_first(blocks[static_cast<size_t>(i)])) out.push_back(e);
            if (i < k) out.push_back(chain[static_cast<size_t>(i)]);
        }
        return out;
    };

    Extension K = build(C);
    Extension L = build(D);
    PlaneMap mu;
    mu.pts.assign(static_cast<size_t>(n), {0, 0});
    for (int i = 0; i < n; ++i) mu.pts[size_t(K[static_cast<size_t>(i)])][0] = i;
    for (int i = 0; i < n; ++i) mu.pts[size_t(L[static_cast<size_t>(i)])][1] = i;
    return mu;
}

PlaneMap up_module_map(const Poset& P, const std::vector<int>& M,
                       const PlaneMap& seed, int v) {
    if (M.empty()) throw std::invalid_argument("up-module must be nonempty");
    for (int m : M)
        if (!(P.succ_open(m) == P.succ_open(M[0])))
            throw std::invalid_argument("not an up-module");
    if (std::find(M.begin(), M.end(), v) == M.end())
        throw std::invalid_argument("v must belong to the up-module");
    if (!tight_elements(P, seed).tight.test(v))
        throw std::invalid_argument("v is not tight on the seed map");

    PlaneMap norm = normalize(P, seed);
    const int64_t s = int64_t(M.size()) + 1;
    PlaneMap out;
    out.pts.assign(norm.pts.size(), {0, 0});
    for (size_t i = 0; i < norm.pts.size(); ++i)
        out.pts[i] = {norm.pts[i][0] * s, norm.pts[i][1] * s};

    std::vector<int> members = M;
    std::sort(members.begin(), members.end());
    const int64_t vx = norm.x(v) * s, vy = norm.y(v) * s;
    for (size_t r = 0; r < members.size(); ++r)
        out.pts[size_t(members[r])] = {vx + int64_t(r), vy - int64_t(r)};
    return out;
}

PlaneMap linear_forest_map(const Graph& G, const std::vector<int>& U) {
    Bits in_u(G.n);
    for (int u : U) in_u.set(u);
    if (!induces_linear_forest(G, in_u))
        throw std::invalid_argument("U does not induce a linear forest");

    const int nv = G.n, ne = int(G.edges.size());
    const int n = nv + ne;

    // Walk the paths of G[U] in ascending order of their smaller endpoint.
    std::vector<int> deg_u(static_cast<size_t>(nv), 0);
    for (auto& [a, b] : G.edges)
        if (in_u.test(a) && in_u.test(b)) ++deg_u[static_cast<size_t>(a)], ++deg_u[static_cast<size_t>(b)];
    std::vector<int> seq;
    Bits visited(nv);
    for (int start = 0; start < nv; ++start) {
        if (!in_u.test(start) || visited.test(start) || deg_u[static_cast<size_t>(start)] > 1) continue;
        int cur = start, prev = -1;
        while (cur != -1) {
            visited.set(cur);
            seq.push_back(cur);
            int next = -1;
            for (auto& [a, b] : G.edges) {
                if (!(in_u.test(a) && in_u.test(b))) continue;
                int other = a == cur ? b : (b == cur ? a : -1);
                if (other != -1 && other != prev && !visited.test(other)) next = other;
            }
            prev = cur;
            cur = next;
        }
    }
    const int k = int(seq.size());
    std::vector<int> pos_u(static_cast<size_t>(nv), -1);
    for (int i = 0; i < k; ++i) pos_u[size_t(seq[static_cast<size_t>(i)])] = i + 1; // 1-based

    const int64_t S = int64_t(n) + 1;
    PlaneMap mu;
    mu.pts.assign(static_cast<size_t>(n), {0, 0});
    for (int i = 1; i <= k; ++i)
        mu.pts[size_t(seq[size_t(i - 1)])] = {int64_t(i) * S, int64_t(k - i) * S};

    // All remaining elements go on the antidiagonal x + y = (k+1)*S.
    int64_t side = 1; // offsets inside the (0,1)*S band for leftover elements
    std::vector<int64_t> pend_off(static_cast<size_t>(nv), 0);
    for (int j = 0; j < ne; ++j) {
        auto [a, b] = G.edges[static_cast<size_t>(j)];
        bool ua = in_u.test(a), ub = in_u.test(b);
        if (ua && ub) {
            // Forest edge between consecutive path vertices.
            int i = std::min(pos_u[static_cast<size_t>(a)], pos_u[static_cast<size_t>(b)]);
            mu.pts[size_t(nv + j)] = {int64_t(i + 1) * S, int64_t(k - i) * S};
        } else if (ua || ub) {
            int u = ua ? a : b;
            int64_t i = pos_u[static_cast<size_t>(u)];
            int64_t off = ++pend_off[static_cast<size_t>(u)]; // strictly inside (i, i+1)*S
            mu.pts[size_t(nv + j)] = {i * S + off, (k + 1 - i) * S - off};
        } else {
            mu.pts[size_t(nv + j)] = {side, int64_t(k + 1) * S - side};
            ++side;
        }
    }
    for (int vtx = 0; vtx < nv; ++vtx) {
        if (in_u.test(vtx)) continue;
        mu.pts[static_cast<size_t>(vtx)] = {side, int64_t(k + 1) * S - side};
        ++side;
    }
    return mu;
}

std::pair<Extension, Extension> grid_map_extensions(const PlaneMap& mu) {
    const int n = int(mu.pts.size());
    Extension K(static_cast<size_t>(n)), L(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e) {
        K[size_t(mu.x(e))] = e;
        L[size_t(mu.y(e))] = e;
    }
    return {K, L};
}

} // namespace atlas
