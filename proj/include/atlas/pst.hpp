#pragma once

#include <cstdint>
#include <vector>

namespace atlas {

// Static priority search tree: search-tree order on x (ties broken by id),
// max-heap on y. Quadrant queries [qx, inf) x [qy, inf) visit
// O(answer + height) nodes; the visit count is observable for testing.
class PrioritySearchTree {
public:
    struct Entry {
        int64_t x, y;
        int id;
    };

    PrioritySearchTree() = default;
    explicit PrioritySearchTree(std::vector<Entry> points);

    // Appends the ids of all stored points p with p.x >= qx and p.y >= qy.
    void quadrant_query(int64_t qx, int64_t qy, std::vector<int>& out,
                        int* visits = nullptr) const;

    size_t size() const { return nodes_.size(); }
    int height() const;
    bool check_structure() const;

private:
    struct Node {
        Entry point;          // max-y point of the subtree
        int64_t split_x;      // left subtree keys <= (split_x, split_id)
        int split_id;
        int left = -1, right = -1;
    };
    int build(std::vector<Entry>& by_x, int lo, int hi);
    void query(int node, int64_t qx, int64_t qy, std::vector<int>& out, int& visits) const;
    int height_of(int node) const;

    std::vector<Node> nodes_;
    int root_ = -1;
};

} // namespace atlas
