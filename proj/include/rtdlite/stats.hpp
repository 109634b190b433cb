#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace rtdlite {

/// Kendall tau-b (tie-corrected) of two equal-length samples. O(n^2) pair
/// counting; returns 0 when either sample is constant.
inline double kendall_tau(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = xs[i] - xs[j];
            const double dy = ys[i] - ys[j];
            if (dx == 0.0 && dy == 0.0) continue;
            if (dx == 0.0)
                ++ties_x;
            else if (dy == 0.0)
                ++ties_y;
            else if ((dx > 0.0) == (dy > 0.0))
                ++concordant;
            else
                ++discordant;
        }
    }
    const double denom = std::sqrt(static_cast<double>(concordant + discordant + ties_x)) *
                         std::sqrt(static_cast<double>(concordant + discordant + ties_y));
    if (denom == 0.0) return 0.0;
    return static_cast<double>(concordant - discordant) / denom;
}

/// Least-squares slope of log(y) against log(x). Inputs must be positive.
inline double log_log_slope(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace rtdlite
