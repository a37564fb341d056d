#include "atlas/pst.hpp"

#include <algorithm>

namespace atlas {

namespace {
bool key_less(int64_t ax, int aid, int64_t bx, int bid) {
    return ax != bx ? ax < bx : aid < bid;
}
} // namespace

PrioritySearchTree::PrioritySearchTree(std::vector<Entry> points) {
    std::sort(points.begin(), points.end(), [](const Entry& a, const Entry& b) {
        return key_less(a.x, a.id, b.x, b.id);
    });
    nodes_.reserve(points.size());
    root_ = build(points, 0, int(points.size()));
}

// Extracts the max-y point of the range, then splits the remainder at the
// x-median: left gets [lo, mid], right gets (mid, ...].
int PrioritySearchTree::build(std::vector<Entry>& by_x, int lo, int hi) {
    if (lo >= hi) return -1;
    int top = lo;
    for (int i = lo + 1; i < hi; ++i)
        if (by_x[static_cast<size_t>(i)].y > by_x[static_cast<size_t>(top)].y ||
            (by_x[static_cast<size_t>(i)].y == by_x[static_cast<size_t>(top)].y &&
             by_x[static_cast<size_t>(i)].id < by_x[static_cast<size_t>(top)].id))
            top = i;
    Entry point = by_x[static_cast<size_t>(top)];
    std::rotate(by_x.begin() + top, by_x.begin() + top + 1, by_x.begin() + hi);
    const int rest_hi = hi - 1;

    int idx = int(nodes_.size());
    nodes_.push_back({});
    Node node;
    node.point = point;
    if (lo < rest_hi) {
        int mid = lo + (rest_hi - lo - 1) / 2;
        node.split_x = by_x[static_cast<size_t>(mid)].x;
        node.split_id = by_x[static_cast<size_t>(mid)].id;
        node.left = build(by_x, lo, mid + 1);
        node.right = build(by_x, mid + 1, rest_hi);
    } else {
        node.split_x = point.x;
        node.split_id = point.id;
    }
    nodes_[static_cast<size_t>(idx)] = node;
    return idx;
}

void PrioritySearchTree::query(int node, int64_t qx, int64_t qy, std::vector<int>& out,
                               int& visits) const {
    if (node == -1) return;
    ++visits;
    const Node& nd = nodes_[static_cast<size_t>(node)];
    if (nd.point.y < qy) return; // heap prune: whole subtree lies below qy
    if (nd.point.x >= qx) out.push_back(nd.point.id);
    if (nd.split_x >= qx) query(nd.left, qx, qy, out, visits);
    query(nd.right, qx, qy, out, visits);
}

void PrioritySearchTree::quadrant_query(int64_t qx, int64_t qy, std::vector<int>& out,
                                        int* visits) const {
    int count = 0;
    query(root_, qx, qy, out, count);
    if (visits) *visits = count;
}

int PrioritySearchTree::height_of(int node) const {
    if (node == -1) return 0;
    return 1 + std::max(height_of(nodes_[static_cast<size_t>(node)].left),
                        height_of(nodes_[static_cast<size_t>(node)].right));
}

int PrioritySearchTree::height() const { return height_of(root_); }

namespace {
struct KeyBound {
    int64_t x;
    int id;
    bool unbounded;
};
} // namespace

bool PrioritySearchTree::check_structure() const {
    // Recursive check: heap order on y; every point and split key inside the
    // ancestor key interval; left subtree <= split < right subtree.
    auto rec = [&](auto&& self, int node, KeyBound lo, KeyBound hi) -> bool {
        if (node == -1) return true;
        const Node& nd = nodes_[static_cast<size_t>(node)];
        auto within = [&](int64_t x, int id) {
            if (!lo.unbounded && key_less(x, id, lo.x, lo.id)) return false;
            if (!hi.unbounded && key_less(hi.x, hi.id, x, id)) return false;
            return true;
        };
        if (!within(nd.point.x, nd.point.id)) return false;
        for (int child : {nd.left, nd.right}) {
            if (child == -1) continue;
            if (nodes_[static_cast<size_t>(child)].point.y > nd.point.y) return false;
        }
        KeyBound split{nd.split_x, nd.split_id, false};
        return self(self, nd.left, lo, split) && self(self, nd.right, split, hi);
    };
    return rec(rec, root_, KeyBound{0, 0, true}, KeyBound{0, 0, true});
}

} // namespace atlas
