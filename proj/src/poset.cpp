#include "atlas/poset.hpp"

#include <stdexcept>

namespace atlas {

Poset Poset::build(std::vector<std::string> labels,
                   const std::vector<std::pair<std::string, std::string>>& relations,
                   RelationMode) {
    Poset P;
    P.n_ = int(labels.size());
    P.labels_ = std::move(labels);
    for (int i = 0; i < P.n_; ++i) {
        auto [it, fresh] = P.index_.emplace(P.labels_[static_cast<size_t>(i)], i);
        if (!fresh) throw std::invalid_argument("duplicate label: " + P.labels_[static_cast<size_t>(i)]);
    }
    P.lt_.assign(static_cast<size_t>(P.n_), Bits(P.n_));
    for (const auto& [a, b] : relations) {
        int x = P.index_of(a), y = P.index_of(b);
        if (x < 0) throw std::invalid_argument("unknown element in relation: " + a);
        if (y < 0) throw std::invalid_argument("unknown element in relation: " + b);
        if (x == y) throw std::invalid_argument("cycle detected: " + a + " < " + a);
        P.lt_[static_cast<size_t>(x)].set(y);
    }
    // Warshall over bit rows.
    for (int k = 0; k < P.n_; ++k)
        for (int i = 0; i < P.n_; ++i)
            if (P.lt_[static_cast<size_t>(i)].test(k)) P.lt_[static_cast<size_t>(i)] |= P.lt_[static_cast<size_t>(k)];
    for (int i = 0; i < P.n_; ++i)
        if (P.lt_[static_cast<size_t>(i)].test(i))
            throw std::invalid_argument("cycle detected through element: " + P.labels_[static_cast<size_t>(i)]);
    P.finish();
    return P;
}

Poset Poset::from_rows(std::vector<std::string> labels, std::vector<Bits> lt_rows) {
    Poset P;
    P.n_ = int(labels.size());
    P.labels_ = std::move(labels);
    P.lt_ = std::move(lt_rows);
    for (int i = 0; i < P.n_; ++i) P.index_.emplace(P.labels_[static_cast<size_t>(i)], i);
    P.finish();
    return P;
}

void Poset::finish() {
    gt_.assign(static_cast<size_t>(n_), Bits(n_));
    inc_.assign(static_cast<size_t>(n_), Bits(n_));
    for (int x = 0; x < n_; ++x)
        lt_[static_cast<size_t>(x)].for_each([&](int y) { gt_[static_cast<size_t>(y)].set(x); });
    for (int x = 0; x < n_; ++x) {
        Bits b = lt_[static_cast<size_t>(x)];
        b |= gt_[static_cast<size_t>(x)];
        b.set(x);
        for (int y = 0; y < n_; ++y)
            if (!b.test(y)) inc_[static_cast<size_t>(x)].set(y);
    }
}

int Poset::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

Bits Poset::all() const {
    Bits b(n_);
    for (int i = 0; i < n_; ++i) b.set(i);
    return b;
}

bool Poset::is_chain() const {
    for (int x = 0; x < n_; ++x)
        if (inc_[static_cast<size_t>(x)].any()) return false;
    return true;
}

std::vector<int> Poset::topo_min_first(const Bits& mask) const {
    std::vector<int> order;
    Bits remaining = mask;
    order.reserve(size_t(remaining.count()));
    while (remaining.any()) {
        int pick = -1;
        for (int i = remaining.find_first(); i != -1; i = remaining.find_next(i)) {
            if (!pred_open(i).intersects(remaining)) {
                pick = i;
                break;
            }
        }
        order.push_back(pick);
        remaining.reset(pick);
    }
    return order;
}

std::vector<std::pair<int, int>> Poset::hasse_edges() const {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n_; ++x) {
        succ_open(x).for_each([&](int y) {
            Bits between = succ_open(x);
            between &= pred_open(y);
            if (between.none()) edges.emplace_back(x, y);
        });
    }
    return edges;
}

Bits successors_closed(const Poset& P, int x) {
    if (x < 0 || x >= P.size()) throw std::invalid_argument("element out of range");
    return P.succ_closed(x);
}

WidthResult width_and_cover(const Poset& P) {
    const int n = P.size();
    std::vector<int> match_to(static_cast<size_t>(n), -1);   // x -> matched successor
    std::vector<int> match_from(static_cast<size_t>(n), -1); // y -> matched predecessor

    std::vector<char> visited(static_cast<size_t>(n), 0);
    auto augment = [&](auto&& self, int x) -> bool {
        bool found = false;
        P.succ_open(x).for_each([&](int y) {
            if (found || visited[static_cast<size_t>(y)]) return;
            visited[static_cast<size_t>(y)] = 1;
            if (match_from[static_cast<size_t>(y)] == -1 || self(self, match_from[static_cast<size_t>(y)])) {
                match_to[static_cast<size_t>(x)] = y;
                match_from[static_cast<size_t>(y)] = x;
                found = true;
            }
        });
        return found;
    };
    for (int x = 0; x < n; ++x) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(augment, x);
    }

    WidthResult r;
    for (int x = 0; x < n; ++x) {
        if (match_from[static_cast<size_t>(x)] != -1) continue; // not a chain head
        std::vector<int> chain;
        for (int cur = x; cur != -1; cur = match_to[static_cast<size_t>(cur)]) chain.push_back(cur);
        r.chains.push_back(std::move(chain));
    }
    r.width = int(r.chains.size());
    return r;
}

Bits maximal_elements(const Poset& P) {
    Bits m(P.size());
    for (int x = 0; x < P.size(); ++x)
        if (P.succ_open(x).none()) m.set(x);
    return m;
}

std::vector<std::vector<int>> antichain_partition(const Poset& P) {
    std::vector<std::vector<int>> levels;
    Bits remaining = P.all();
    while (remaining.any()) {
        std::vector<int> level;
        for (int i = remaining.find_first(); i != -1; i = remaining.find_next(i))
            if (!P.succ_open(i).intersects(remaining)) level.push_back(i);
        Bits lv(P.size());
        for (int x : level) lv.set(x);
        remaining.and_not(lv);
        levels.push_back(std::move(level));
    }
    return levels;
}

int height(const Poset& P) {
    return int(antichain_partition(P).size());
}

std::vector<std::vector<int>> up_module_partition(const Poset& P) {
    std::vector<std::vector<int>> parts;
    std::unordered_map<Bits, size_t, BitsHash> seen;
    for (int x = 0; x < P.size(); ++x) {
        auto [it, fresh] = seen.emplace(P.succ_open(x), parts.size());
        if (fresh) parts.emplace_back();
        parts[it->second].push_back(x);
    }
    return parts; // ordered by smallest member since x runs ascending
}

bool is_linear_extension(const Poset& P, const Extension& order) {
    if (int(order.size()) != P.size()) return false;
    std::vector<int> pos(size_t(P.size()), -1);
    for (int i = 0; i < int(order.size()); ++i) {
        int x = order[static_cast<size_t>(i)];
        if (x < 0 || x >= P.size() || pos[static_cast<size_t>(x)] != -1) return false;
        pos[static_cast<size_t>(x)] = i;
    }
    for (int x = 0; x < P.size(); ++x) {
        bool ok = true;
        P.succ_open(x).for_each([&](int y) {
            if (pos[static_cast<size_t>(x)] > pos[static_cast<size_t>(y)]) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<Bits> intersection_dominance(const Extension& K, const Extension& L) {
    const int n = int(K.size());
    std::vector<int> pk(static_cast<size_t>(n)), pl(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pk[size_t(K[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) pl[size_t(L[static_cast<size_t>(i)])] = i;
    std::vector<Bits> m;
    m.assign(static_cast<size_t>(n), Bits(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && pk[static_cast<size_t>(x)] < pk[static_cast<size_t>(y)] && pl[static_cast<size_t>(x)] < pl[static_cast<size_t>(y)])
                m[static_cast<size_t>(x)].set(y);
    return m;
}

Poset induced_subposet(const Poset& P, const std::vector<int>& S) {
    std::vector<std::string> labels;
    labels.reserve(S.size());
    for (int x : S) labels.push_back(P.label(x));
    std::vector<Bits> rows(S.size(), Bits(int(S.size())));
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = 0; j < S.size(); ++j)
            if (P.less(S[i], S[j])) rows[i].set(int(j));
    return Poset::from_rows(std::move(labels), std::move(rows));
}

std::vector<std::array<int, 3>> crown_triples(const Poset& P) {
    const int n = P.size();
    std::vector<std::array<int, 3>> triples;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (P.comparable(x, y)) continue;
            for (int z = y + 1; z < n; ++z) {
                if (P.comparable(x, z) || P.comparable(y, z)) continue;
                // u above {x,y} only, v above {y,z} only, w above {x,z} only,
                // pairwise incomparable: the crown pattern.
                Bits cu = P.succ_open(x);
                cu &= P.succ_open(y);
                cu &= P.incomparable_to(z);
                if (cu.none()) continue;
                Bits cv = P.succ_open(y);
                cv &= P.succ_open(z);
                cv &= P.incomparable_to(x);
                if (cv.none()) continue;
                Bits cw = P.succ_open(x);
                cw &= P.succ_open(z);
                cw &= P.incomparable_to(y);
                if (cw.none()) continue;
                bool found = false;
                for (int u = cu.find_first(); u != -1 && !found; u = cu.find_next(u)) {
                    Bits cv2 = cv;
                    cv2 &= P.incomparable_to(u);
                    for (int v = cv2.find_first(); v != -1 && !found; v = cv2.find_next(v)) {
                        Bits cw2 = cw;
                        cw2 &= P.incomparable_to(u);
                        cw2 &= P.incomparable_to(v);
                        if (cw2.any()) found = true;
                    }
                }
                if (found) triples.push_back({x, y, z});
            }
        }
    }
    return triples;
}

} // namespace atlas
