#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "rtdlite/disjoint_sets.hpp"
#include "rtdlite/errors.hpp"
#include "rtdlite/mst.hpp"
#include "rtdlite/normalize.hpp"
#include "rtdlite/weight_matrix.hpp"

namespace rtdlite {

// ============================================================================
// RTD-Lite: topological discrepancy between two weighted graphs A and B that
// share a vertex set.
//
// Both matrices are scaled by their own edge-weight quantile, the auxiliary
// graph C takes the element-wise minimum, and the discrepancy is read off the
// minimum spanning trees: every MST(C) edge e opens an interval at its weight
// c_e (two clusters merge in C), which closes at the weight of the first
// MST(A) edge whose addition reconnects those clusters in A. The sum of
// interval lengths equals MST(A) total weight minus MST(C) total weight and
// is available without building the barcode at all.
// ============================================================================

struct RtdlOptions {
    /// Divide each input by its own edge-weight quantile first.
    bool normalize = true;
    double quantile_level = 0.9;
    /// When an input is not connected via finite edges, emit intervals with
    /// death = +inf instead of throwing.
    bool allow_infinite_bars = false;
};

struct BarcodeInterval {
    double birth = 0.0;
    double death = 0.0;
    /// MST(C) edge that opened the interval.
    Edge birth_edge;
    /// MST(A) edge that closed it; {-1,-1,+inf} when it never closes.
    Edge death_edge;

    double length() const { return death - birth; }
    bool zero_length() const { return death == birth; }
    /// Half-open containment: the interval covers alpha iff birth <= alpha < death.
    bool contains(double alpha) const { return birth <= alpha && alpha < death; }
};

class Barcode {
public:
    Barcode(int n, std::vector<BarcodeInterval> intervals, NormalizationRecord record,
            std::string direction)
        : n_(n),
          intervals_(std::move(intervals)),
          normalization_(record),
          direction_(std::move(direction)) {}

    int vertex_count() const { return n_; }

    /// Intervals in birth order (the MST(C) processing order). Zero-length
    /// intervals are retained; filtering is a display concern.
    const std::vector<BarcodeInterval>& intervals() const { return intervals_; }

    const NormalizationRecord& normalization() const { return normalization_; }

    /// "AB" or "BA": which argument played the role of A.
    const std::string& direction() const { return direction_; }

    double length_sum() const {
        double s = 0.0;
        for (const auto& iv : intervals_) s += iv.length();
        return s;
    }

    int count_containing(double alpha) const {
        int c = 0;
        for (const auto& iv : intervals_) c += iv.contains(alpha) ? 1 : 0;
        return c;
    }

private:
    int n_;
    std::vector<BarcodeInterval> intervals_;
    NormalizationRecord normalization_;
    std::string direction_;
};

struct RtdlValue {
    /// s_a - s_c, always >= 0.
    double value = 0.0;
    double s_a = 0.0;
    double s_c = 0.0;
};

namespace detail {

struct PreparedPair {
    WeightMatrix a;
    WeightMatrix c;
    NormalizationRecord record;
};

/// Scales both inputs per options and builds the auxiliary minimum graph.
/// C is assembled directly from the scaled entries, bit-identical to
/// auxiliary_min(normalize(a), normalize(b)) without materializing B.
inline PreparedPair prepare_pair(const WeightMatrix& a, const WeightMatrix& b,
                                 const RtdlOptions& options) {
    if (a.size() != b.size())
        throw DimensionMismatchError("rtdl: inputs have " + std::to_string(a.size()) + " vs " +
                                     std::to_string(b.size()) + " vertices");
    const int n = a.size();
    NormalizationRecord record{options.quantile_level, 1.0, 1.0, options.normalize};
    if (options.normalize) {
        record.q_a = edge_weight_quantile(a, options.quantile_level).first;
        record.q_b = edge_weight_quantile(b, options.quantile_level).first;
    }
    WeightMatrix scaled_a(n);
    WeightMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double ae = a(i, j) / record.q_a;
            const double be = b(i, j) / record.q_b;
            scaled_a.set(i, j, ae);
            c.set(i, j, std::min(ae, be));
        }
    }
    return {std::move(scaled_a), std::move(c), record};
}

inline void require_connected(const Forest& fa, const RtdlOptions& options) {
    if (!fa.spanning() && !options.allow_infinite_bars)
        throw DisconnectedInputError(
            "rtdl: graph A is not connected via finite edges (" +
            std::to_string(fa.component_count) +
            " components); pass allow_infinite_bars to get infinite intervals");
}

} // namespace detail

/// Full barcode. For connected inputs this yields exactly n-1 intervals, one
/// per MST(C) edge, each satisfying birth <= death. O(n^2 alpha(n)) time,
/// O(n^2) memory.
///
/// For every MST(C) edge (taken in the global sort order) the scan over
/// MST(A) restarts from the first edge, on a fresh snapshot of the already
/// processed MST(C) sub-forest. This is the reference path; any shortcut must
/// reproduce it bit for bit.
inline Barcode rtdl_barcode(const WeightMatrix& a, const WeightMatrix& b,
                            const RtdlOptions& options = {}) {
    auto prepared = detail::prepare_pair(a, b, options);
    const int n = prepared.a.size();
    const Forest tree_a = minimum_spanning_forest(prepared.a);
    detail::require_connected(tree_a, options);
    const Forest tree_c = minimum_spanning_forest(prepared.c);

    std::vector<BarcodeInterval> intervals;
    intervals.reserve(tree_c.edges.size());
    DisjointSets subtree(n);
    for (const Edge& e : tree_c.edges) {
        DisjointSets probe = subtree.snapshot();
        BarcodeInterval interval;
        interval.birth = e.weight;
        interval.birth_edge = e;
        interval.death = kInfinity;
        for (std::size_t i = 0; i < tree_a.edges.size() && !probe.connected(e.u, e.v); ++i) {
            probe.unite(tree_a.edges[i].u, tree_a.edges[i].v);
            if (probe.connected(e.u, e.v)) {
                interval.death = tree_a.edges[i].weight;
                interval.death_edge = tree_a.edges[i];
            }
        }
        intervals.push_back(interval);
        subtree.unite(e.u, e.v);
    }
    return Barcode(n, std::move(intervals), prepared.record, "AB");
}

/// Sum of interval lengths only: MST(A) total weight minus MST(C) total
/// weight on the scaled matrices. O(n^2) time and memory.
inline RtdlValue rtdl_sum(const WeightMatrix& a, const WeightMatrix& b,
                          const RtdlOptions& options = {}) {
    auto prepared = detail::prepare_pair(a, b, options);
    const Forest tree_a = minimum_spanning_forest(prepared.a);
    detail::require_connected(tree_a, options);
    const Forest tree_c = minimum_spanning_forest(prepared.c);
    if (tree_a.component_count > tree_c.component_count) {
        // Some interval never closes in A: the sum diverges.
        return {kInfinity, kInfinity, tree_c.total_weight};
    }
    return {tree_a.total_weight - tree_c.total_weight, tree_a.total_weight, tree_c.total_weight};
}

/// rtdl_sum(a, b) + rtdl_sum(b, a). Scaling factors between the two calls
/// are left to the caller.
inline double symmetrized_rtdl(const WeightMatrix& a, const WeightMatrix& b,
                               const RtdlOptions& options = {}) {
    return rtdl_sum(a, b, options).value + rtdl_sum(b, a, options).value;
}

} // namespace rtdlite
