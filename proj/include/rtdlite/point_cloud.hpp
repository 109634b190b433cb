#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rtdlite/barcode.hpp"
#include "rtdlite/errors.hpp"
#include "rtdlite/weight_matrix.hpp"

namespace rtdlite {

/// n points in row-major layout; row i of two clouds under comparison refer
/// to the same underlying object (the vertex correspondence).
struct PointCloud {
    int n = 0;
    int dim = 0;
    std::vector<double> coords;

    PointCloud() = default;
    PointCloud(int n_, int dim_) : n(n_), dim(dim_), coords(static_cast<std::size_t>(n_) * dim_, 0.0) {}

    double& at(int i, int d) { return coords[static_cast<std::size_t>(i) * dim + d]; }
    double at(int i, int d) const { return coords[static_cast<std::size_t>(i) * dim + d]; }
    const double* row(int i) const { return coords.data() + static_cast<std::size_t>(i) * dim; }
};

enum class Metric { kEuclidean };

inline double point_distance(const PointCloud& cloud, int i, int j, Metric metric) {
    (void)metric; // single metric today
    const double* a = cloud.row(i);
    const double* b = cloud.row(j);
    double sq = 0.0;
    for (int d = 0; d < cloud.dim; ++d) {
        const double diff = a[d] - b[d];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

/// Complete graph of pairwise distances.
inline WeightMatrix pairwise_distances(const PointCloud& cloud, Metric metric = Metric::kEuclidean) {
    if (cloud.n < 2) throw ValidationError("point cloud: need at least 2 points");
    if (cloud.dim < 1) throw ValidationError("point cloud: zero-dimensional points");
    WeightMatrix w(cloud.n);
    for (int i = 0; i < cloud.n; ++i)
        for (int j = i + 1; j < cloud.n; ++j)
            w.set(i, j, point_distance(cloud, i, j, metric));
    return w;
}

inline void check_cloud_pair(const PointCloud& p, const PointCloud& q) {
    if (p.n != q.n)
        throw DimensionMismatchError("point clouds: " + std::to_string(p.n) + " vs " +
                                     std::to_string(q.n) + " points");
}

/// Discrepancy between two corresponding point clouds: pairwise-distance
/// matrices under `metric`, then the graph comparison. Point dimensions may
/// differ between the clouds; the point counts may not.
inline RtdlValue rtdl_from_clouds(const PointCloud& p, const PointCloud& q,
                                  const RtdlOptions& options = {},
                                  Metric metric = Metric::kEuclidean) {
    check_cloud_pair(p, q);
    return rtdl_sum(pairwise_distances(p, metric), pairwise_distances(q, metric), options);
}

inline Barcode rtdl_barcode_from_clouds(const PointCloud& p, const PointCloud& q,
                                        const RtdlOptions& options = {},
                                        Metric metric = Metric::kEuclidean) {
    check_cloud_pair(p, q);
    return rtdl_barcode(pairwise_distances(p, metric), pairwise_distances(q, metric), options);
}

} // namespace rtdlite
