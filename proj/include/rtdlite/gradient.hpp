#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rtdlite/barcode.hpp"
#include "rtdlite/mst.hpp"
#include "rtdlite/point_cloud.hpp"

namespace rtdlite {

/// Sparse symmetric matrix keyed by undirected edge (i < j). Entries that
/// cancel to exactly zero are dropped.
class SparseSymmetric {
public:
    explicit SparseSymmetric(int n = 0) : n_(n) {}

    void add(int i, int j, double value) {
        if (i > j) std::swap(i, j);
        const auto key = std::make_pair(i, j);
        const double next = entries_[key] + value;
        if (next == 0.0)
            entries_.erase(key);
        else
            entries_[key] = next;
    }

    double at(int i, int j) const {
        if (i > j) std::swap(i, j);
        const auto it = entries_.find({i, j});
        return it == entries_.end() ? 0.0 : it->second;
    }

    const std::map<std::pair<int, int>, double>& entries() const { return entries_; }
    int nonzero_count() const { return static_cast<int>(entries_.size()); }
    int size() const { return n_; }

private:
    int n_;
    std::map<std::pair<int, int>, double> entries_;
};

/// Subgradients of the interval-length sum with respect to both raw weight
/// matrices, with the quantile divisors treated as frozen constants.
///
/// d_a carries +1/q_a on MST(A) edges and -1/q_a on MST(C) edges whose
/// minimum took the A side; d_b carries -1/q_b on MST(C) edges whose minimum
/// took the B side. A tie a_e/q_a == b_e/q_b goes to the A side, which makes
/// the gradients vanish identically when the inputs coincide.
struct SubgradientPair {
    SparseSymmetric d_a;
    SparseSymmetric d_b;
    double q_a = 1.0;
    double q_b = 1.0;
};

inline std::pair<RtdlValue, SubgradientPair> rtdl_subgradient(const WeightMatrix& a,
                                                              const WeightMatrix& b,
                                                              const RtdlOptions& options = {}) {
    auto prepared = detail::prepare_pair(a, b, options);
    const Forest tree_a = minimum_spanning_forest(prepared.a);
    if (!tree_a.spanning())
        throw DisconnectedInputError("rtdl subgradient: graph A is not connected via finite edges");
    const Forest tree_c = minimum_spanning_forest(prepared.c);

    SubgradientPair grads{SparseSymmetric(a.size()), SparseSymmetric(a.size()),
                          prepared.record.q_a, prepared.record.q_b};
    for (const Edge& e : tree_a.edges) grads.d_a.add(e.u, e.v, 1.0 / grads.q_a);
    for (const Edge& e : tree_c.edges) {
        const double ae = a(e.u, e.v) / grads.q_a;
        const double be = b(e.u, e.v) / grads.q_b;
        if (ae <= be)
            grads.d_a.add(e.u, e.v, -1.0 / grads.q_a);
        else
            grads.d_b.add(e.u, e.v, -1.0 / grads.q_b);
    }

    RtdlValue value{tree_a.total_weight - tree_c.total_weight, tree_a.total_weight,
                    tree_c.total_weight};
    return {value, std::move(grads)};
}

struct PointGradients {
    PointCloud d_p;
    PointCloud d_q;
};

/// Chains weight-matrix subgradients into point-coordinate gradients for
/// clouds whose pairwise distances produced those matrices. For the Euclidean
/// metric d dist(p_i, p_j)/d p_i = (p_i - p_j)/dist; coincident points
/// contribute a zero vector.
inline PointGradients chain_to_points(const SubgradientPair& grads, const PointCloud& p,
                                      const PointCloud& q, Metric metric = Metric::kEuclidean) {
    if (grads.d_a.size() != p.n || grads.d_b.size() != q.n)
        throw DimensionMismatchError("chain_to_points: gradient size does not match cloud size");
    PointGradients out{PointCloud(p.n, p.dim), PointCloud(q.n, q.dim)};

    auto accumulate = [metric](const SparseSymmetric& dw, const PointCloud& cloud, PointCloud& grad) {
        for (const auto& [edge, g] : dw.entries()) {
            const auto [i, j] = edge;
            const double dist = point_distance(cloud, i, j, metric);
            if (dist == 0.0) continue;
            for (int d = 0; d < cloud.dim; ++d) {
                const double step = g * (cloud.at(i, d) - cloud.at(j, d)) / dist;
                grad.at(i, d) += step;
                grad.at(j, d) -= step;
            }
        }
    };
    accumulate(grads.d_a, p, out.d_p);
    accumulate(grads.d_b, q, out.d_q);
    return out;
}

} // namespace rtdlite
