#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rtdlite {

/// Union-find over n vertices with union by size and path halving.
/// Single-writer mutable; snapshot() yields an independent O(n) copy.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n), size_(n, 1), components_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) {
        check_index(x);
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns true when a merge happened, false if already joined.
    bool unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) return false;
        if (size_[ra] < size_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        --components_;
        return true;
    }

    bool connected(int a, int b) { return find(a) == find(b); }

    int component_count() const { return components_; }

    int size() const { return static_cast<int>(parent_.size()); }

    DisjointSets snapshot() const { return *this; }

private:
    void check_index(int x) const {
        if (x < 0 || x >= size())
            throw std::out_of_range("disjoint sets: index " + std::to_string(x) + " out of range [0," +
                                    std::to_string(size()) + ")");
    }

    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

} // namespace rtdlite
