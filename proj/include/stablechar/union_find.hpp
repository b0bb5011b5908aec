#pragma once

#include <numeric>
#include <vector>

namespace stablechar {

// Plain union-find with path compression; elements are 0..size-1.
class UnionFind {
public:
    explicit UnionFind(int size) : parent_(size) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        int root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            int next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    void unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
    }

    bool connected(int a, int b) { return find(a) == find(b); }

private:
    std::vector<int> parent_;
};

} // namespace stablechar
