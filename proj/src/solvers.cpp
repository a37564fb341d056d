#include "atlas/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace atlas {

namespace detail {

// k edge-augmented copies of the poset order, each kept transitively closed
// so cycle tests are single bit lookups. Callers snapshot a side before a
// speculative edge and restore on backtrack.
class SideSystem {
public:
    SideSystem(const Poset& P, int k) : n_(P.size()) {
        std::vector<Bits> base;
        base.reserve(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) base.push_back(P.succ_open(i));
        reach_.assign(static_cast<size_t>(k), base);
    }

    bool implied(int s, int u, int v) const { return reach_[static_cast<size_t>(s)][static_cast<size_t>(u)].test(v); }
    bool creates_cycle(int s, int u, int v) const {
        return u == v || reach_[static_cast<size_t>(s)][static_cast<size_t>(v)].test(u);
    }

    void add_edge(int s, int u, int v) {
        auto& side = reach_[static_cast<size_t>(s)];
        Bits addend = side[static_cast<size_t>(v)];
        addend.set(v);
        for (int a = 0; a < n_; ++a)
            if (a == u || side[static_cast<size_t>(a)].test(u)) side[static_cast<size_t>(a)] |= addend;
    }

    std::vector<Bits> save(int s) const { return reach_[static_cast<size_t>(s)]; }
    void restore(int s, std::vector<Bits> snap) { reach_[static_cast<size_t>(s)] = std::move(snap); }

    // Smallest-index-first linear extension of the side's strict order.
    Extension topo(int s) const {
        const auto& side = reach_[static_cast<size_t>(s)];
        Extension order;
        order.reserve(static_cast<size_t>(n_));
        Bits remaining(n_);
        for (int i = 0; i < n_; ++i) remaining.set(i);
        while (remaining.any()) {
            for (int i = remaining.find_first(); i != -1; i = remaining.find_next(i)) {
                bool has_pred = false;
                for (int a = remaining.find_first(); a != -1 && !has_pred;
                     a = remaining.find_next(a))
                    if (side[static_cast<size_t>(a)].test(i)) has_pred = true;
                if (!has_pred) {
                    order.push_back(i);
                    remaining.reset(i);
                    break;
                }
            }
        }
        return order;
    }

private:
    int n_;
    std::vector<std::vector<Bits>> reach_;
};

} // namespace detail

// ---------------------------------------------------------------------------
// Feasibility of a prescribed tight set

FeasibilitySolver::FeasibilitySolver(const Poset& P, SearchBudget budget, bool crown_prune)
    : P_(P), budget_(budget), crown_prune_(crown_prune), crowns_(crown_triples(P)) {
    by_inc_degree_.resize(size_t(P.size()));
    for (int i = 0; i < P.size(); ++i) by_inc_degree_[static_cast<size_t>(i)] = i;
    std::stable_sort(by_inc_degree_.begin(), by_inc_degree_.end(), [&](int a, int b) {
        return P.incomparable_to(a).count() > P.incomparable_to(b).count();
    });
}

bool FeasibilitySolver::contains_crown(const Bits& T) const {
    for (const auto& [a, b, c] : crowns_)
        if (T.test(a) && T.test(b) && T.test(c)) return true;
    return false;
}

std::vector<FeasibilitySolver::Req> FeasibilitySolver::requirements(const Bits& T) const {
    std::vector<Req> reqs;
    for (int t : by_inc_degree_) {
        if (!T.test(t)) continue;
        P_.incomparable_to(t).for_each([&](int z) { reqs.push_back({z, t}); });
    }
    return reqs;
}

bool FeasibilitySolver::search(const std::vector<Req>& reqs, size_t idx,
                               detail::SideSystem& sides) {
    if (++nodes_ > budget_.max_nodes)
        throw BudgetExceeded("feasibility search exceeded the node budget");
    while (idx < reqs.size() &&
           (sides.implied(0, reqs[idx].z, reqs[idx].t) ||
            sides.implied(1, reqs[idx].z, reqs[idx].t)))
        ++idx;
    if (idx == reqs.size()) return true;
    const auto [z, t] = reqs[idx];
    for (int s = 0; s < 2; ++s) {
        if (sides.creates_cycle(s, z, t)) continue;
        auto snap = sides.save(s);
        sides.add_edge(s, z, t);
        if (search(reqs, idx + 1, sides)) return true;
        sides.restore(s, std::move(snap));
    }
    return false;
}

bool FeasibilitySolver::feasible(const Bits& T) {
    if (auto it = memo_.find(T); it != memo_.end()) return it->second;
    bool ok;
    if (crown_prune_ && contains_crown(T)) {
        ok = false;
    } else {
        detail::SideSystem sides(P_, 2);
        auto reqs = requirements(T);
        ok = search(reqs, 0, sides);
    }
    memo_.emplace(T, ok);
    return ok;
}

std::optional<TightSetCertificate> FeasibilitySolver::certificate(const Bits& T) {
    if (!feasible(T)) return std::nullopt;
    detail::SideSystem sides(P_, 2);
    auto reqs = requirements(T);
    if (!search(reqs, 0, sides)) return std::nullopt; // unreachable, search is exact
    TightSetCertificate cert;
    cert.T = T;
    cert.K = sides.topo(0);
    cert.L = sides.topo(1);
    return cert;
}

std::optional<TightSetCertificate> feasible_tight_set(const Poset& P, const Bits& T,
                                                      const SearchBudget& budget) {
    FeasibilitySolver solver(P, budget);
    return solver.certificate(T);
}

// ---------------------------------------------------------------------------
// Mapability

namespace {

// Triples indexed per element for the incremental crown check.
std::vector<std::vector<std::pair<int, int>>>
crown_pairs_by_element(const Poset& P, const std::vector<std::array<int, 3>>& crowns) {
    std::vector<std::vector<std::pair<int, int>>> by(size_t(P.size()));
    for (const auto& [a, b, c] : crowns) {
        by[static_cast<size_t>(a)].emplace_back(b, c);
        by[static_cast<size_t>(b)].emplace_back(a, c);
        by[static_cast<size_t>(c)].emplace_back(a, b);
    }
    return by;
}

struct MapabilityShared {
    std::atomic<int> best{-1};
    std::mutex m;
    Bits best_set;
    int best_count = -1;

    void offer(const Bits& T, int count) {
        int cur = best.load(std::memory_order_relaxed);
        while (count > cur && !best.compare_exchange_weak(cur, count)) {
        }
        std::lock_guard<std::mutex> lock(m);
        if (count > best_count) {
            best_count = count;
            best_set = T;
        }
    }
};

struct MapabilityWorker {
    const Poset& P;
    FeasibilitySolver solver;
    const std::vector<int>& order;
    const std::vector<std::vector<std::pair<int, int>>>& crown_pairs;
    MapabilityShared& shared;

    bool completes_crown(const Bits& T, int x) const {
        for (auto [a, b] : crown_pairs[static_cast<size_t>(x)])
            if (T.test(a) && T.test(b)) return true;
        return false;
    }

    void rec(size_t i, const Bits& T, int count) {
        const int n = P.size();
        if (count + (n - int(i)) <= shared.best.load(std::memory_order_relaxed)) return;
        if (i == order.size()) {
            shared.offer(T, count);
            return;
        }
        int x = order[i];
        if (!completes_crown(T, x)) {
            Bits Tx = T;
            Tx.set(x);
            if (solver.feasible(Tx)) rec(i + 1, Tx, count + 1);
        }
        rec(i + 1, T, count);
    }
};

// Warm incumbent from the constructive results: the two largest Dilworth
// chains together, and the largest up-module.
Bits mapability_warm_start(const Poset& P) {
    auto cover = width_and_cover(P).chains;
    std::stable_sort(cover.begin(), cover.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    Bits two_chains(P.size());
    for (size_t c = 0; c < cover.size() && c < 2; ++c)
        for (int e : cover[c]) two_chains.set(e);
    Bits module(P.size());
    for (const auto& part : up_module_partition(P))
        if (int(part.size()) > module.count()) {
            module.clear();
            for (int e : part) module.set(e);
        }
    return module.count() > two_chains.count() ? module : two_chains;
}

} // namespace

MapabilityResult mapability(const Poset& P, const SearchBudget& budget, int threads) {
    const int n = P.size();
    if (n == 0) {
        TightSetCertificate empty{Bits(0), {}, {}};
        return {0, empty};
    }
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return P.incomparable_to(a).count() > P.incomparable_to(b).count();
    });

    auto crowns = crown_triples(P);
    auto crown_pairs = crown_pairs_by_element(P, crowns);
    MapabilityShared shared;
    shared.best_set = Bits(n);

    {
        FeasibilitySolver warm_check(P, budget);
        Bits warm = mapability_warm_start(P);
        if (warm.any() && warm_check.feasible(warm)) shared.offer(warm, warm.count());
    }

    if (threads <= 1) {
        MapabilityWorker w{P, FeasibilitySolver(P, budget), order, crown_pairs, shared};
        w.rec(0, Bits(n), 0);
    } else {
        // Expand a frontier of subproblems, then split across workers.
        struct Node {
            Bits T;
            size_t i;
            int count;
        };
        std::vector<Node> frontier{{Bits(n), 0, 0}};
        FeasibilitySolver expand(P, budget);
        auto pairs_ref = crown_pairs;
        while (int(frontier.size()) < threads * 4) {
            // Pop the shallowest node; stop once everything is deep enough.
            size_t pick = frontier.size();
            for (size_t j = 0; j < frontier.size(); ++j)
                if (frontier[j].i < order.size() &&
                    (pick == frontier.size() || frontier[j].i < frontier[pick].i))
                    pick = j;
            if (pick == frontier.size()) break;
            Node node = frontier[pick];
            frontier.erase(frontier.begin() + long(pick));
            int x = order[node.i];
            bool crowned = false;
            for (auto [a, b] : pairs_ref[static_cast<size_t>(x)])
                if (node.T.test(a) && node.T.test(b)) crowned = true;
            Bits Tx = node.T;
            Tx.set(x);
            if (!crowned && expand.feasible(Tx)) frontier.push_back({Tx, node.i + 1, node.count + 1});
            frontier.push_back({node.T, node.i + 1, node.count});
        }
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                MapabilityWorker w{P, FeasibilitySolver(P, budget), order, crown_pairs, shared};
                for (size_t j = next.fetch_add(1); j < frontier.size(); j = next.fetch_add(1))
                    w.rec(frontier[j].i, frontier[j].T, frontier[j].count);
            });
        }
        for (auto& th : pool) th.join();
    }

    FeasibilitySolver final_solver(P, budget);
    auto cert = final_solver.certificate(shared.best_set);
    if (!cert) throw std::logic_error("mapability witness failed revalidation");
    return {shared.best_count, *cert};
}

// ---------------------------------------------------------------------------
// Exact set cover

namespace detail {

namespace {

std::vector<int> cover_dp(const std::vector<Bits>& sets, const std::vector<int>& universe) {
    const int m = int(universe.size());
    std::vector<int> pos(sets.empty() ? 0 : size_t(sets[0].size()), -1);
    for (int i = 0; i < m; ++i) pos[size_t(universe[static_cast<size_t>(i)])] = i;
    std::vector<uint32_t> masks(sets.size(), 0);
    for (size_t s = 0; s < sets.size(); ++s)
        sets[s].for_each([&](int e) {
            if (pos[static_cast<size_t>(e)] >= 0) masks[s] |= uint32_t(1) << pos[static_cast<size_t>(e)];
        });
    const uint32_t full = m == 32 ? ~uint32_t(0) : (uint32_t(1) << m) - 1;
    const int INF = 1 << 29;
    std::vector<int> dp(static_cast<size_t>(full) + 1, INF);
    std::vector<std::pair<uint32_t, int>> parent(static_cast<size_t>(full) + 1, {0, -1});
    dp[0] = 0;
    for (uint32_t mask = 0; mask <= full; ++mask) {
        if (dp[mask] == INF || mask == full) continue;
        int e = __builtin_ctz(~mask & full);
        for (size_t s = 0; s < sets.size(); ++s) {
            if (!(masks[s] >> e & 1)) continue;
            uint32_t nm = mask | masks[s];
            if (dp[mask] + 1 < dp[nm]) {
                dp[nm] = dp[mask] + 1;
                parent[nm] = {mask, int(s)};
            }
        }
    }
    std::vector<int> chosen;
    for (uint32_t mask = full; mask != 0;) {
        auto [prev, s] = parent[mask];
        chosen.push_back(s);
        mask = prev;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

struct CoverBnB {
    const std::vector<Bits>& sets;
    int max_set_size;
    std::vector<int> best;
    std::vector<int> current;

    void rec(const Bits& uncovered) {
        if (uncovered.none()) {
            if (best.empty() || current.size() < best.size()) best = current;
            return;
        }
        if (!best.empty()) {
            int lower = int(current.size()) + (uncovered.count() + max_set_size - 1) / max_set_size;
            if (lower >= int(best.size())) return;
        }
        // Branch on the uncovered element with the fewest covering sets.
        int pick = -1, pick_count = -1;
        uncovered.for_each([&](int e) {
            int c = 0;
            for (const auto& s : sets)
                if (s.test(e)) ++c;
            if (pick == -1 || c < pick_count) {
                pick = e;
                pick_count = c;
            }
        });
        for (size_t s = 0; s < sets.size(); ++s) {
            if (!sets[s].test(pick)) continue;
            current.push_back(int(s));
            Bits rest = uncovered;
            rest.and_not(sets[s]);
            rec(rest);
            current.pop_back();
        }
    }
};

} // namespace

std::vector<int> min_set_cover(const std::vector<Bits>& sets, const Bits& universe,
                               bool force_bnb) {
    std::vector<int> u = universe.to_vector();
    if (u.empty()) return {};
    if (!force_bnb && u.size() <= 24) return cover_dp(sets, u);
    int max_size = 1;
    for (const auto& s : sets) {
        Bits in = s;
        in &= universe;
        max_size = std::max(max_size, in.count());
    }
    CoverBnB bnb{sets, max_size, {}, {}};
    bnb.rec(universe);
    return bnb.best;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Atlas thickness

namespace {

struct MaximalSetEnumerator {
    FeasibilitySolver& solver;
    const SearchBudget& budget;
    int n;
    std::vector<Bits> suffix; // suffix[i] = {i..n-1}
    std::vector<Bits> found;
    uint64_t nodes = 0;

    void rec(const Bits& S, int i) {
        if (++nodes > budget.max_nodes)
            throw BudgetExceeded("maximal tight-set enumeration exceeded the node budget");
        Bits horizon = S;
        if (i < n) horizon |= suffix[static_cast<size_t>(i)];
        for (const auto& M : found)
            if (horizon.subset_of(M)) return; // everything below is dominated
        if (i == n) {
            for (int x = 0; x < n; ++x) {
                if (S.test(x)) continue;
                Bits Sx = S;
                Sx.set(x);
                if (solver.feasible(Sx)) return; // not maximal
            }
            found.push_back(S);
            if (found.size() > budget.max_cover_sets)
                throw BudgetExceeded("maximal tight-set enumeration exceeded the set budget");
            return;
        }
        Bits Sx = S;
        Sx.set(i);
        if (solver.feasible(Sx)) rec(Sx, i + 1);
        rec(S, i + 1);
    }
};

Atlas atlas_from_certificates(const Poset& P, const std::vector<TightSetCertificate>& certs) {
    Atlas atlas;
    atlas.certificates = certs;
    std::vector<TightnessReport> reports;
    for (const auto& cert : certs) {
        atlas.maps.push_back(map_from_extensions(P, cert.K, cert.L));
        reports.push_back(tight_elements(P, atlas.maps.back()));
    }
    atlas.assignment.assign(size_t(P.size()), -1);
    for (int x = 0; x < P.size(); ++x) {
        for (size_t i = 0; i < reports.size(); ++i) {
            if (reports[i].tight.test(x)) {
                atlas.assignment[static_cast<size_t>(x)] = int(i);
                break;
            }
        }
        if (atlas.assignment[static_cast<size_t>(x)] == -1)
            throw std::logic_error("atlas cover failed revalidation: element " + P.label(x));
    }
    return atlas;
}

} // namespace

AtlasResult atlas_thickness(const Poset& P, const SearchBudget& budget) {
    const int n = P.size();
    if (n == 0) return {0, {}};
    FeasibilitySolver solver(P, budget);

    // Elements comparable to everything are tight on any certificate map that
    // contains them; they are dropped from the cover universe and their
    // tightness is revalidated when the atlas is assembled.
    Bits universe(n);
    for (int x = 0; x < n; ++x)
        if (P.incomparable_to(x).any()) universe.set(x);

    if (universe.none()) {
        auto cert = solver.certificate(P.all());
        if (!cert) throw std::logic_error("total order must admit a full tight set");
        return {1, atlas_from_certificates(P, {*cert})};
    }

    MaximalSetEnumerator en{solver, budget, n, {}, {}, 0};
    en.suffix.assign(static_cast<size_t>(n), Bits(n));
    for (int i = n - 1; i >= 0; --i) {
        if (i + 1 < n) en.suffix[static_cast<size_t>(i)] = en.suffix[static_cast<size_t>(i) + 1];
        en.suffix[static_cast<size_t>(i)].set(i);
    }
    en.rec(Bits(n), 0);

    std::vector<Bits> reduced;
    reduced.reserve(en.found.size());
    for (const auto& M : en.found) {
        Bits r = M;
        r &= universe;
        reduced.push_back(r);
    }
    std::vector<int> chosen = detail::min_set_cover(reduced, universe);

    std::vector<TightSetCertificate> certs;
    for (int s : chosen) {
        auto cert = solver.certificate(en.found[static_cast<size_t>(s)]);
        if (!cert) throw std::logic_error("maximal tight set failed certification");
        certs.push_back(std::move(*cert));
    }
    return {int(certs.size()), atlas_from_certificates(P, certs)};
}

Atlas chain_pairing_atlas(const Poset& P) {
    Atlas atlas;
    const auto cover = width_and_cover(P).chains;
    if (cover.empty()) return atlas;
    std::vector<int> chain_of(size_t(P.size()), -1);
    for (size_t c = 0; c < cover.size(); ++c)
        for (int e : cover[c]) chain_of[static_cast<size_t>(e)] = int(c);

    for (size_t c = 0; c < cover.size(); c += 2) {
        const auto& C = cover[c];
        const auto& D = cover[c + 1 < cover.size() ? c + 1 : c];
        PlaneMap mu = two_chain_map(P, C, D);
        auto [K, L] = grid_map_extensions(mu);
        Bits T(P.size());
        for (int e : C) T.set(e);
        for (int e : D) T.set(e);
        atlas.certificates.push_back({T, K, L});
        atlas.maps.push_back(std::move(mu));
    }
    atlas.assignment.assign(size_t(P.size()), -1);
    for (int x = 0; x < P.size(); ++x)
        atlas.assignment[static_cast<size_t>(x)] = chain_of[static_cast<size_t>(x)] / 2;
    return atlas;
}

// ---------------------------------------------------------------------------
// Crown cover lower bound

namespace {

struct TripleFreeEnumerator {
    int m; // universe size (compact ids)
    const std::vector<std::vector<std::pair<int, int>>>& pairs; // per compact id
    std::vector<Bits> suffix;
    std::vector<Bits> found;

    bool completes(const Bits& S, int x) const {
        for (auto [a, b] : pairs[static_cast<size_t>(x)])
            if (S.test(a) && S.test(b)) return true;
        return false;
    }

    void rec(const Bits& S, int i) {
        Bits horizon = S;
        if (i < m) horizon |= suffix[static_cast<size_t>(i)];
        for (const auto& M : found)
            if (horizon.subset_of(M)) return;
        if (i == m) {
            for (int x = 0; x < m; ++x)
                if (!S.test(x) && !completes(S, x)) return;
            found.push_back(S);
            return;
        }
        if (!completes(S, i)) {
            Bits Sx = S;
            Sx.set(i);
            rec(Sx, i + 1);
        }
        rec(S, i + 1);
    }
};

// Largest W whose every 3-subset is a crown triple; covering parts hold at
// most two of W, so ceil(|W|/2) parts are forced.
int crown_clique_bound(const std::vector<int>& universe,
                       const std::vector<std::array<int, 3>>& triples) {
    std::unordered_map<uint64_t, bool> is_triple;
    for (const auto& [a, b, c] : triples)
        is_triple[(uint64_t(a) << 42) | (uint64_t(b) << 21) | uint64_t(c)] = true;
    auto triple_test = [&](int a, int b, int c) {
        int x[3] = {a, b, c};
        std::sort(x, x + 3);
        return is_triple.count((uint64_t(x[0]) << 42) | (uint64_t(x[1]) << 21) | uint64_t(x[2])) > 0;
    };
    std::vector<int> best, current;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (current.size() > best.size()) best = current;
        if (i == universe.size()) return;
        if (current.size() + (universe.size() - i) <= best.size()) return;
        int v = universe[i];
        bool ok = true;
        for (size_t a = 0; a < current.size() && ok; ++a)
            for (size_t b = a + 1; b < current.size() && ok; ++b)
                if (!triple_test(current[a], current[b], v)) ok = false;
        if (ok) {
            current.push_back(v);
            self(self, i + 1);
            current.pop_back();
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    return (int(best.size()) + 1) / 2;
}

} // namespace

int crown_lower_bound(const Poset& P) {
    if (P.size() == 0) return 0;
    auto triples = crown_triples(P);
    if (triples.empty()) return 1;

    Bits in_universe(P.size());
    for (const auto& [a, b, c] : triples) {
        in_universe.set(a);
        in_universe.set(b);
        in_universe.set(c);
    }
    std::vector<int> universe = in_universe.to_vector();
    if (universe.size() > 24) return std::max(1, crown_clique_bound(universe, triples));

    const int m = int(universe.size());
    std::vector<int> compact(size_t(P.size()), -1);
    for (int i = 0; i < m; ++i) compact[size_t(universe[static_cast<size_t>(i)])] = i;
    std::vector<std::vector<std::pair<int, int>>> pairs(static_cast<size_t>(m));
    for (const auto& [a, b, c] : triples) {
        int x = compact[static_cast<size_t>(a)], y = compact[static_cast<size_t>(b)], z = compact[static_cast<size_t>(c)];
        pairs[static_cast<size_t>(x)].emplace_back(y, z);
        pairs[static_cast<size_t>(y)].emplace_back(x, z);
        pairs[static_cast<size_t>(z)].emplace_back(x, y);
    }
    TripleFreeEnumerator en{m, pairs, {}, {}};
    en.suffix.assign(static_cast<size_t>(m), Bits(m));
    for (int i = m - 1; i >= 0; --i) {
        if (i + 1 < m) en.suffix[static_cast<size_t>(i)] = en.suffix[static_cast<size_t>(i) + 1];
        en.suffix[static_cast<size_t>(i)].set(i);
    }
    en.rec(Bits(m), 0);

    Bits full(m);
    for (int i = 0; i < m; ++i) full.set(i);
    auto chosen = detail::min_set_cover(en.found, full);
    return std::max(1, int(chosen.size()));
}

// ---------------------------------------------------------------------------
// Exact dimension

namespace {

struct RealizerSearch {
    const Poset& P;
    int k;
    const SearchBudget& budget;
    std::vector<std::pair<int, int>> reqs; // u must precede v in some side
    detail::SideSystem sides;
    int used = 0;
    uint64_t nodes = 0;

    RealizerSearch(const Poset& P, int k, const SearchBudget& budget)
        : P(P), k(k), budget(budget), sides(P, k) {
        for (int x = 0; x < P.size(); ++x)
            P.incomparable_to(x).for_each([&](int y) { reqs.emplace_back(y, x); });
        // Requirements that conflict with many others go first; a pair of
        // reversals (u,v), (u',v') cannot share a side when v reaches u' and
        // v' reaches u through the poset order.
        auto conflicts = [&](const std::pair<int, int>& r1, const std::pair<int, int>& r2) {
            return P.leq(r1.second, r2.first) && P.leq(r2.second, r1.first);
        };
        std::vector<int> degree(reqs.size(), 0);
        for (size_t i = 0; i < reqs.size(); ++i)
            for (size_t j = i + 1; j < reqs.size(); ++j)
                if (conflicts(reqs[i], reqs[j])) ++degree[i], ++degree[j];
        std::vector<size_t> idx(reqs.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            if (degree[a] != degree[b]) return degree[a] > degree[b];
            return reqs[a] < reqs[b];
        });
        std::vector<std::pair<int, int>> sorted;
        sorted.reserve(reqs.size());
        for (size_t i : idx) sorted.push_back(reqs[i]);
        reqs = std::move(sorted);
    }

    bool rec(size_t i) {
        if (++nodes > budget.max_nodes)
            throw BudgetExceeded("dimension search exceeded the node budget");
        while (i < reqs.size()) {
            bool done = false;
            for (int s = 0; s < used && !done; ++s)
                if (sides.implied(s, reqs[i].first, reqs[i].second)) done = true;
            if (!done) break;
            ++i;
        }
        if (i == reqs.size()) return true;
        const auto [u, v] = reqs[i];
        for (int s = 0; s < used; ++s) {
            if (sides.creates_cycle(s, u, v)) continue;
            auto snap = sides.save(s);
            sides.add_edge(s, u, v);
            if (rec(i + 1)) return true;
            sides.restore(s, std::move(snap));
        }
        if (used < k) {
            int s = used++;
            auto snap = sides.save(s);
            sides.add_edge(s, u, v); // fresh side never cycles on an incomparable pair
            if (rec(i + 1)) return true;
            sides.restore(s, std::move(snap));
            --used;
        }
        return false;
    }
};

int cheap_dim_lower(const Poset& P) {
    if (P.size() <= 1 || P.is_chain()) return 1;
    return crown_triples(P).empty() ? 2 : 3;
}

} // namespace

std::optional<Realizer> dimension_exact(const Poset& P, int k_max, const SearchBudget& budget) {
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    if (P.size() == 0) return Realizer{{Extension{}}};
    for (int k = cheap_dim_lower(P); k <= k_max; ++k) {
        RealizerSearch search(P, k, budget);
        if (!search.rec(0)) continue;
        Realizer r;
        if (search.used == 0) {
            r.extensions.push_back(P.topo_min_first());
        } else {
            for (int s = 0; s < search.used; ++s) r.extensions.push_back(search.sides.topo(s));
        }
        return r;
    }
    return std::nullopt;
}

bool realizer_valid(const Poset& P, const Realizer& r) {
    if (r.extensions.empty()) return false;
    for (const auto& ext : r.extensions)
        if (!is_linear_extension(P, ext)) return false;
    const int n = P.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            bool in_all = true;
            for (const auto& ext : r.extensions) {
                std::vector<int> pos(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) pos[size_t(ext[static_cast<size_t>(i)])] = i;
                if (pos[static_cast<size_t>(x)] > pos[static_cast<size_t>(y)]) {
                    in_all = false;
                    break;
                }
            }
            if (in_all != P.less(x, y)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Bounds and the size safeguard

Bounds bounds(const Poset& P) {
    Bounds b;
    if (P.size() == 0) return b;
    const int w = width_and_cover(P).width;
    b.at_upper_chain_pairing = (w + 1) / 2;
    b.at_lower_crown = crown_lower_bound(P);
    b.dim_lower_from_at = cheap_dim_lower(P);
    b.at_lower_dim = (b.dim_lower_from_at + 1) / 2;
    b.dmap_lower_height = height(P) + (P.is_chain() ? 0 : 1);
    for (const auto& part : up_module_partition(P))
        b.dmap_lower_maxup = std::max(b.dmap_lower_maxup, int(part.size()));
    return b;
}

uint64_t mapability_size_limit(int d, uint64_t cap) {
    if (d <= 0) return 0;
    uint64_t val = uint64_t(d);
    for (int level = 2; level <= d; ++level) {
        if (val >= 32) return cap; // 4^32 overflows 64 bits
        uint64_t next = uint64_t(1) << (2 * val);
        val = std::min(next, cap);
    }
    return std::min(val, cap);
}

bool size_bound_check(const Poset& P, int d) {
    return uint64_t(P.size()) <= mapability_size_limit(d);
}

// ---------------------------------------------------------------------------
// Validation helpers

bool certificate_valid(const Poset& P, const TightSetCertificate& cert) {
    if (!is_linear_extension(P, cert.K) || !is_linear_extension(P, cert.L)) return false;
    PlaneMap mu = map_from_extensions(P, cert.K, cert.L);
    return cert.T.subset_of(tight_elements(P, mu).tight);
}

bool atlas_valid(const Poset& P, const Atlas& atlas) {
    if (P.size() == 0) return atlas.maps.empty();
    if (int(atlas.assignment.size()) != P.size()) return false;
    std::vector<Bits> tight;
    for (const auto& mu : atlas.maps) {
        if (int(mu.pts.size()) != P.size()) return false;
        tight.push_back(tight_elements(P, mu).tight);
    }
    for (int x = 0; x < P.size(); ++x) {
        int m = atlas.assignment[static_cast<size_t>(x)];
        if (m < 0 || m >= int(atlas.maps.size()) || !tight[static_cast<size_t>(m)].test(x)) return false;
    }
    return true;
}

} // namespace atlas
