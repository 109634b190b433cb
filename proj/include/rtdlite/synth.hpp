#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "rtdlite/errors.hpp"
#include "rtdlite/point_cloud.hpp"

namespace rtdlite {

// ============================================================================
// Deterministic synthetic clouds. The generator is pinned so that any
// implementation can reproduce the exact same data:
//
//   raw(seed, k)  = SplitMix64 finalizer applied to seed + (k+1)*0x9E3779B97F4A7C15
//   unit(seed, k) = (raw(seed, k) >> 11) * 2^-53                    in [0, 1)
//   normals are Box-Muller on consecutive unit pairs (u0, u1):
//     r = sqrt(-2 ln(1 - u0)),  z0 = r cos(2 pi u1),  z1 = r sin(2 pi u1)
//
// rings      n angles theta_i = 2 pi unit(i); point i sits on ring (i mod r)
//            whose radius is evenly spaced in [0.5, 1.5] (a single ring uses
//            radius 1.0).
// clusters   n standard 2-D normal points; split into k equal contiguous
//            index blocks (earlier blocks one larger when k does not divide
//            n); block j is translated by 10 (cos 2 pi j/k, sin 2 pi j/k).
//            k = 1 applies no translation.
// gaussian   i.i.d. standard normal coordinates, row-major.
//
// Point i always derives from the same base draws regardless of the ring or
// cluster count, so rows correspond across variants of one seed.
// ============================================================================

inline constexpr double kRingRadiusMin = 0.5;
inline constexpr double kRingRadiusMax = 1.5;
inline constexpr double kClusterCircleRadius = 10.0;
inline constexpr int kMaxRingCount = 5;
inline constexpr int kMaxClusterCount = 12;

/// Counter-based SplitMix64 stream.
class SplitMixStream {
public:
    explicit SplitMixStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_raw() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_raw() >> 11) * 0x1.0p-53; }

    /// Standard normal pair via Box-Muller.
    std::pair<double, double> next_normal_pair() {
        const double u0 = next_unit();
        const double u1 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(1.0 - u0));
        const double phi = 2.0 * std::numbers::pi * u1;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

enum class SynthKind { kRings, kClusters, kGaussianCloud };

struct SynthSpec {
    SynthKind kind = SynthKind::kGaussianCloud;
    int n_points = 0;
    int ring_count = 1;    // rings: 1..5
    int cluster_count = 1; // clusters: 1..12
    int dimension = 2;     // gaussian cloud
    std::uint64_t seed = 0;
};

namespace detail {

inline PointCloud generate_rings(const SynthSpec& spec) {
    if (spec.ring_count < 1 || spec.ring_count > kMaxRingCount)
        throw ValidationError("rings: ring_count must lie in 1.." + std::to_string(kMaxRingCount));
    if (spec.n_points < spec.ring_count)
        throw ValidationError("rings: need at least one point per ring");
    SplitMixStream rng(spec.seed);
    PointCloud cloud(spec.n_points, 2);
    const int r = spec.ring_count;
    for (int i = 0; i < spec.n_points; ++i) {
        const double theta = 2.0 * std::numbers::pi * rng.next_unit();
        const double radius =
            r == 1 ? 1.0
                   : kRingRadiusMin + (i % r) * (kRingRadiusMax - kRingRadiusMin) / (r - 1);
        cloud.at(i, 0) = radius * std::cos(theta);
        cloud.at(i, 1) = radius * std::sin(theta);
    }
    return cloud;
}

inline PointCloud generate_clusters(const SynthSpec& spec) {
    if (spec.cluster_count < 1 || spec.cluster_count > kMaxClusterCount)
        throw ValidationError("clusters: cluster_count must lie in 1.." +
                              std::to_string(kMaxClusterCount));
    if (spec.n_points < spec.cluster_count)
        throw ValidationError("clusters: need at least one point per cluster");
    SplitMixStream rng(spec.seed);
    PointCloud cloud(spec.n_points, 2);
    for (int i = 0; i < spec.n_points; ++i) {
        const auto [z0, z1] = rng.next_normal_pair();
        cloud.at(i, 0) = z0;
        cloud.at(i, 1) = z1;
    }
    const int k = spec.cluster_count;
    if (k == 1) return cloud;
    const int base = spec.n_points / k;
    const int extra = spec.n_points % k;
    int start = 0;
    for (int j = 0; j < k; ++j) {
        const int size = base + (j < extra ? 1 : 0);
        const double phi = 2.0 * std::numbers::pi * j / k;
        const double dx = kClusterCircleRadius * std::cos(phi);
        const double dy = kClusterCircleRadius * std::sin(phi);
        for (int i = start; i < start + size; ++i) {
            cloud.at(i, 0) += dx;
            cloud.at(i, 1) += dy;
        }
        start += size;
    }
    return cloud;
}

inline PointCloud generate_gaussian(const SynthSpec& spec) {
    if (spec.dimension < 1) throw ValidationError("gaussian cloud: dimension must be positive");
    if (spec.n_points < 1) throw ValidationError("gaussian cloud: need at least one point");
    SplitMixStream rng(spec.seed);
    PointCloud cloud(spec.n_points, spec.dimension);
    const std::size_t total = cloud.coords.size();
    for (std::size_t m = 0; m + 1 < total; m += 2) {
        const auto [z0, z1] = rng.next_normal_pair();
        cloud.coords[m] = z0;
        cloud.coords[m + 1] = z1;
    }
    if (total % 2 == 1) cloud.coords[total - 1] = rng.next_normal_pair().first;
    return cloud;
}

} // namespace detail

inline PointCloud generate(const SynthSpec& spec) {
    switch (spec.kind) {
        case SynthKind::kRings: return detail::generate_rings(spec);
        case SynthKind::kClusters: return detail::generate_clusters(spec);
        case SynthKind::kGaussianCloud: return detail::generate_gaussian(spec);
    }
    throw ValidationError("unknown synthetic cloud kind");
}

inline std::string synth_kind_name(SynthKind kind) {
    switch (kind) {
        case SynthKind::kRings: return "rings";
        case SynthKind::kClusters: return "clusters";
        case SynthKind::kGaussianCloud: return "gaussian";
    }
    return "unknown";
}

} // namespace rtdlite
