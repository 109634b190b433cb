#pragma once

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "rtdlite/weight_matrix.hpp"

namespace rtdlite {

/// Undirected weighted edge, stored with u < v.
struct Edge {
    int u = -1;
    int v = -1;
    double weight = kInfinity;

    bool operator==(const Edge&) const = default;
};

/// The global deterministic edge order: (weight, u, v). Every tie in this
/// library — Prim frontier selection, edge-list sorting, the barcode scan —
/// is broken by this one order, so all outputs are unique and reproducible.
inline bool edge_less(const Edge& a, const Edge& b) {
    return std::tie(a.weight, a.u, a.v) < std::tie(b.weight, b.u, b.v);
}

/// Minimum spanning forest of a dense weight matrix.
struct Forest {
    /// Finite-weight tree edges, sorted ascending by edge_less.
    std::vector<Edge> edges;
    /// Sum of edge weights.
    double total_weight = 0.0;
    /// Component label per vertex; labels increase with the smallest vertex
    /// index in each component, so component[0] == 0.
    std::vector<int> component;
    int component_count = 1;

    bool spanning() const { return component_count == 1; }
};

/// Prim's algorithm on the dense matrix, O(n^2) time.
///
/// Ties are resolved by edge_less, which makes the result the unique MST of
/// the input under the strict total order (weight, u, v) — identical to what
/// a Kruskal sweep in that order would select. A graph that is not connected
/// via finite edges yields a spanning forest with fewer than n-1 edges and
/// per-vertex component labels; callers decide whether that is an error.
inline Forest minimum_spanning_forest(const WeightMatrix& g) {
    const int n = g.size();
    Forest forest;
    forest.component.assign(n, -1);
    forest.edges.reserve(n - 1);

    std::vector<bool> in_tree(n, false);
    std::vector<double> key(n, kInfinity);
    std::vector<int> parent(n, -1);
    int components = 0;

    // Candidate edge reaching v is (parent[v], v) at weight key[v]; compare
    // candidates by the global order.
    auto better = [&](int a, int b) {
        if (key[a] != key[b]) return key[a] < key[b];
        const Edge ea{std::min(parent[a], a), std::max(parent[a], a), key[a]};
        const Edge eb{std::min(parent[b], b), std::max(parent[b], b), key[b]};
        return edge_less(ea, eb);
    };

    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            if (best == -1 || better(v, best)) best = v;
        }
        if (std::isinf(key[best])) {
            // No finite edge reaches the rest: start a new component at the
            // smallest unvisited vertex.
            best = -1;
            for (int v = 0; v < n && best == -1; ++v)
                if (!in_tree[v]) best = v;
            in_tree[best] = true;
            forest.component[best] = components++;
        } else {
            in_tree[best] = true;
            forest.component[best] = forest.component[parent[best]];
            Edge e{std::min(parent[best], best), std::max(parent[best], best), key[best]};
            forest.total_weight += e.weight;
            forest.edges.push_back(e);
        }
        const double* w = g.row(best);
        for (int v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const double cand = w[v];
            if (cand < key[v]) {
                key[v] = cand;
                parent[v] = best;
            } else if (cand == key[v] && parent[v] >= 0 && !std::isinf(cand)) {
                const Edge incoming{std::min(best, v), std::max(best, v), cand};
                const Edge current{std::min(parent[v], v), std::max(parent[v], v), cand};
                if (edge_less(incoming, current)) parent[v] = best;
            }
        }
    }

    forest.component_count = components;
    std::sort(forest.edges.begin(), forest.edges.end(), edge_less);
    return forest;
}

} // namespace rtdlite
