#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rtdlite/errors.hpp"

namespace rtdlite {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Dense symmetric edge-weight matrix over n vertices.
///
/// Off-diagonal entries are nonnegative edge weights; +infinity encodes an
/// absent edge; the diagonal is identically zero. Instances are immutable
/// value types once built and safe to share across threads.
class WeightMatrix {
public:
    /// Zero matrix over n vertices (n >= 2). All edges weight 0.
    explicit WeightMatrix(int n) : n_(check_size(n)), w_(static_cast<std::size_t>(n) * n, 0.0) {}

    /// Validates a raw row-major n*n buffer and adopts it.
    ///
    /// Rejects: non-square data, n < 2, NaN entries, negative weights,
    /// nonzero diagonal, and asymmetry beyond relative tolerance 1e-12.
    /// Sub-tolerance asymmetry is resolved to the upper-triangle value;
    /// anything larger is an error, never averaged away.
    static WeightMatrix validated(int n, std::vector<double> raw) {
        check_size(n);
        const auto nn = static_cast<std::size_t>(n);
        if (raw.size() != nn * nn)
            throw ValidationError("weight matrix: expected " + std::to_string(nn * nn) +
                                  " entries, got " + std::to_string(raw.size()));
        for (int i = 0; i < n; ++i) {
            if (raw[nn * i + i] != 0.0)
                throw ValidationError("weight matrix: nonzero diagonal at (" + std::to_string(i) +
                                      "," + std::to_string(i) + ")");
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double upper = raw[nn * i + j];
                const double lower = raw[nn * j + i];
                if (std::isnan(upper) || std::isnan(lower))
                    throw ValidationError("weight matrix: NaN at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
                if (!symmetric_within_tolerance(upper, lower))
                    throw ValidationError("weight matrix: asymmetric entries at (" +
                                          std::to_string(i) + "," + std::to_string(j) + "): " +
                                          std::to_string(upper) + " vs " + std::to_string(lower));
                if (upper < 0.0)
                    throw ValidationError("weight matrix: negative weight at (" + std::to_string(i) +
                                          "," + std::to_string(j) + ")");
                raw[nn * j + i] = upper;
            }
        }
        return WeightMatrix(n, std::move(raw));
    }

    int size() const { return n_; }

    double operator()(int i, int j) const { return w_[static_cast<std::size_t>(n_) * i + j]; }

    /// Writes both triangles. For builders that construct valid matrices
    /// directly (distance matrices, element-wise combinations).
    void set(int i, int j, double w) {
        w_[static_cast<std::size_t>(n_) * i + j] = w;
        w_[static_cast<std::size_t>(n_) * j + i] = w;
    }

    const double* row(int i) const { return w_.data() + static_cast<std::size_t>(n_) * i; }

    const std::vector<double>& data() const { return w_; }

    bool operator==(const WeightMatrix& other) const = default;

private:
    WeightMatrix(int n, std::vector<double> w) : n_(n), w_(std::move(w)) {}

    static int check_size(int n) {
        if (n < 2) throw ValidationError("weight matrix: need at least 2 vertices, got " + std::to_string(n));
        return n;
    }

    static bool symmetric_within_tolerance(double a, double b) {
        if (a == b) return true; // covers matching infinities
        if (std::isinf(a) || std::isinf(b)) return false;
        return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
    }

    int n_;
    std::vector<double> w_;
};

/// Element-wise minimum of two weight matrices on the same vertex set.
/// min(x, +inf) = x, so the result's edge set is the union of both edge sets.
inline WeightMatrix auxiliary_min(const WeightMatrix& a, const WeightMatrix& b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("auxiliary_min: " + std::to_string(a.size()) + " vs " +
                                     std::to_string(b.size()) + " vertices");
    WeightMatrix c(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            c.set(i, j, std::min(a(i, j), b(i, j)));
    return c;
}

} // namespace rtdlite
