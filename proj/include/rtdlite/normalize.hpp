#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "rtdlite/errors.hpp"
#include "rtdlite/weight_matrix.hpp"

namespace rtdlite {

/// How a pair of matrices was scaled before comparison.
struct NormalizationRecord {
    double level = 0.9;
    double q_a = 1.0;
    double q_b = 1.0;
    bool enabled = false;
};

struct NormalizeResult {
    WeightMatrix matrix;
    double divisor = 1.0;
    /// Set when no usable quantile exists (no finite edges, or quantile <= 0);
    /// the matrix is then returned unscaled with divisor 1.
    bool degenerate = false;
};

/// Quantile (linear interpolation between order statistics at rank (m-1)*level)
/// of the finite strictly-upper-triangle entries, each undirected edge counted
/// once. Returns {1.0, degenerate=true} when the sample is empty or the
/// quantile is not a positive number.
inline std::pair<double, bool> edge_weight_quantile(const WeightMatrix& a, double level) {
    if (!(level > 0.0) || level > 1.0)
        throw ValidationError("quantile level must lie in (0, 1]");
    std::vector<double> sample;
    sample.reserve(static_cast<std::size_t>(a.size()) * (a.size() - 1) / 2);
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            if (std::isfinite(a(i, j))) sample.push_back(a(i, j));
    if (sample.empty()) return {1.0, true};

    const auto m = sample.size();
    const double pos = static_cast<double>(m - 1) * level;
    const auto lo = static_cast<std::size_t>(pos);
    std::nth_element(sample.begin(), sample.begin() + lo, sample.end());
    double q = sample[lo];
    if (lo + 1 < m) {
        const double hi = *std::min_element(sample.begin() + lo + 1, sample.end());
        q += (hi - q) * (pos - static_cast<double>(lo));
    }
    if (!(q > 0.0)) return {1.0, true};
    return {q, false};
}

/// Divides all entries by the matrix's own edge-weight quantile at `level`.
/// A strictly monotone transform: edge ordering is unchanged, and absent
/// (+inf) edges stay absent. Degenerate inputs fall back to divisor 1.
inline NormalizeResult normalize(const WeightMatrix& a, double level = 0.9) {
    const auto [q, degenerate] = edge_weight_quantile(a, level);
    WeightMatrix scaled(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            scaled.set(i, j, a(i, j) / q);
    return {std::move(scaled), q, degenerate};
}

} // namespace rtdlite
