#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rtdlite/barcode.hpp"
#include "rtdlite/errors.hpp"
#include "rtdlite/point_cloud.hpp"
#include "rtdlite/synth.hpp"

namespace rtdlite {

enum class DirectionPolicy { kAB, kBA, kSymmetrized };

inline std::string direction_policy_name(DirectionPolicy policy) {
    switch (policy) {
        case DirectionPolicy::kAB: return "ab";
        case DirectionPolicy::kBA: return "ba";
        case DirectionPolicy::kSymmetrized: return "sym";
    }
    return "unknown";
}

struct SubsampleSpec {
    int size = 0;
    std::uint64_t seed = 0;
};

/// Pairwise discrepancy grid over a collection of representations.
struct ComparisonMatrix {
    std::vector<std::string> labels;
    int m = 0;
    std::vector<double> values; // row-major m*m
    DirectionPolicy policy = DirectionPolicy::kAB;
    std::optional<SubsampleSpec> subsample;

    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * m + j]; }
};

namespace detail {

/// `size` distinct indices from [0, n), ascending. Partial Fisher-Yates
/// driven by the pinned SplitMix64 stream.
inline std::vector<int> draw_subsample(int n, const SubsampleSpec& spec) {
    if (spec.size < 2 || spec.size > n)
        throw ValidationError("subsample: size must lie in [2, n]");
    SplitMixStream rng(spec.seed);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < spec.size; ++i) {
        const int j = i + static_cast<int>(rng.next_raw() % static_cast<std::uint64_t>(n - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<int> chosen(pool.begin(), pool.begin() + spec.size);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

inline PointCloud take_rows(const PointCloud& cloud, const std::vector<int>& rows) {
    PointCloud out(static_cast<int>(rows.size()), cloud.dim);
    for (int i = 0; i < out.n; ++i)
        for (int d = 0; d < cloud.dim; ++d) out.at(i, d) = cloud.at(rows[i], d);
    return out;
}

} // namespace detail

/// RTDL between every ordered pair of representations.
///
/// One subsample index set is drawn per matrix and applied to every
/// representation, so all cells see corresponding rows. Cells are pure and
/// share no state; they are distributed over `parallelism` threads in a fixed
/// round-robin, and each result lands in its preassigned slot — the output is
/// a function of the inputs alone, never of scheduling. parallelism <= 0
/// means hardware concurrency, 1 forces serial execution.
inline ComparisonMatrix compare_all(const std::vector<PointCloud>& reps,
                                    const std::vector<std::string>& labels,
                                    DirectionPolicy policy,
                                    std::optional<SubsampleSpec> subsample = std::nullopt,
                                    int parallelism = 1,
                                    const RtdlOptions& options = {},
                                    Metric metric = Metric::kEuclidean) {
    if (reps.empty()) throw ValidationError("compare_all: empty representation list");
    if (labels.size() != reps.size())
        throw ValidationError("compare_all: label count does not match representation count");
    const int n = reps.front().n;
    for (const auto& rep : reps)
        if (rep.n != n)
            throw DimensionMismatchError("compare_all: representations must share a point count");

    const int m = static_cast<int>(reps.size());
    ComparisonMatrix result;
    result.labels = labels;
    result.m = m;
    result.values.assign(static_cast<std::size_t>(m) * m, 0.0);
    result.policy = policy;
    result.subsample = subsample;

    // Distance matrices are computed once per representation, up front.
    std::vector<WeightMatrix> dists;
    dists.reserve(reps.size());
    if (subsample) {
        const auto rows = detail::draw_subsample(n, *subsample);
        for (const auto& rep : reps) dists.push_back(pairwise_distances(detail::take_rows(rep, rows), metric));
    } else {
        for (const auto& rep : reps) dists.push_back(pairwise_distances(rep, metric));
    }

    struct Cell {
        int i, j;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < m; ++i)
        for (int j = (policy == DirectionPolicy::kSymmetrized ? i + 1 : 0); j < m; ++j)
            if (i != j) cells.push_back({i, j});

    auto compute_cell = [&](const Cell& cell) {
        switch (policy) {
            case DirectionPolicy::kAB: return rtdl_sum(dists[cell.i], dists[cell.j], options).value;
            case DirectionPolicy::kBA: return rtdl_sum(dists[cell.j], dists[cell.i], options).value;
            case DirectionPolicy::kSymmetrized:
                return symmetrized_rtdl(dists[cell.i], dists[cell.j], options);
        }
        return 0.0;
    };

    int threads = parallelism > 0 ? parallelism : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(cells.size())));

    std::vector<double> cell_values(cells.size(), 0.0);
    if (threads <= 1) {
        for (std::size_t c = 0; c < cells.size(); ++c) cell_values[c] = compute_cell(cells[c]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t c = t; c < cells.size(); c += threads)
                    cell_values[c] = compute_cell(cells[c]);
            });
        }
        for (auto& worker : workers) worker.join();
    }

    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto [i, j] = cells[c];
        result.values[static_cast<std::size_t>(i) * m + j] = cell_values[c];
        if (policy == DirectionPolicy::kSymmetrized)
            result.values[static_cast<std::size_t>(j) * m + i] = cell_values[c];
    }
    return result;
}

} // namespace rtdlite
