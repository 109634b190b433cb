#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "rtdlite/barcode.hpp"
#include "rtdlite/point_cloud.hpp"
#include "support/oracle.hpp"
#include "support/random_graphs.hpp"

namespace rtdlite {
namespace {

RtdlOptions raw_options() {
    RtdlOptions opt;
    opt.normalize = false;
    return opt;
}

// The worked 3-vertex pair used across these tests:
//   A: w(0,1)=1 w(0,2)=2 w(1,2)=3     B: w(0,1)=3 w(0,2)=1 w(1,2)=2
//   C = min(A,B): w(0,1)=1 w(0,2)=1 w(1,2)=2
//   MST(A) = {(0,1,1),(0,2,2)}  MST(C) = {(0,1,1),(0,2,1)}
std::pair<WeightMatrix, WeightMatrix> worked_pair() {
    WeightMatrix a(3), b(3);
    a.set(0, 1, 1.0);
    a.set(0, 2, 2.0);
    a.set(1, 2, 3.0);
    b.set(0, 1, 3.0);
    b.set(0, 2, 1.0);
    b.set(1, 2, 2.0);
    return {a, b};
}

TEST(Barcode, WorkedThreeVertexTrace) {
    const auto [a, b] = worked_pair();
    const Barcode barcode = rtdl_barcode(a, b, raw_options());
    ASSERT_EQ(barcode.intervals().size(), 2u);

    EXPECT_DOUBLE_EQ(barcode.intervals()[0].birth, 1.0);
    EXPECT_DOUBLE_EQ(barcode.intervals()[0].death, 1.0);
    EXPECT_EQ(barcode.intervals()[0].birth_edge, (Edge{0, 1, 1.0}));
    EXPECT_EQ(barcode.intervals()[0].death_edge, (Edge{0, 1, 1.0}));
    EXPECT_TRUE(barcode.intervals()[0].zero_length());

    EXPECT_DOUBLE_EQ(barcode.intervals()[1].birth, 1.0);
    EXPECT_DOUBLE_EQ(barcode.intervals()[1].death, 2.0);
    EXPECT_EQ(barcode.intervals()[1].birth_edge, (Edge{0, 2, 1.0}));
    EXPECT_EQ(barcode.intervals()[1].death_edge, (Edge{0, 2, 2.0}));

    EXPECT_DOUBLE_EQ(barcode.length_sum(), 1.0);

    const RtdlValue sum = rtdl_sum(a, b, raw_options());
    EXPECT_DOUBLE_EQ(sum.value, 1.0);
    EXPECT_DOUBLE_EQ(sum.s_a, 3.0);
    EXPECT_DOUBLE_EQ(sum.s_c, 2.0);
}

TEST(Barcode, SelfComparisonIsAllZeroLength) {
    std::mt19937_64 rng(1);
    for (const bool normalize : {true, false}) {
        const auto a = testing::random_connected_matrix(rng, 9, false);
        RtdlOptions opt;
        opt.normalize = normalize;
        const Barcode barcode = rtdl_barcode(a, a, opt);
        EXPECT_EQ(barcode.intervals().size(), 8u);
        for (const auto& iv : barcode.intervals()) EXPECT_TRUE(iv.zero_length());
        EXPECT_DOUBLE_EQ(rtdl_sum(a, a, opt).value, 0.0);
    }
}

TEST(Barcode, SymmetrizedWorkedExample) {
    const auto [a, b] = worked_pair();
    // Reverse direction by the same trace: MST(B) total 3, MST(C) total 2.
    EXPECT_DOUBLE_EQ(rtdl_sum(b, a, raw_options()).value, 1.0);
    EXPECT_DOUBLE_EQ(symmetrized_rtdl(a, b, raw_options()), 2.0);
    EXPECT_DOUBLE_EQ(symmetrized_rtdl(a, b, raw_options()), symmetrized_rtdl(b, a, raw_options()));
}

TEST(Barcode, DominationCollapsesToExactZero) {
    std::mt19937_64 rng(2);
    const auto b = testing::random_connected_matrix(rng, 8, false);
    WeightMatrix a(8);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) a.set(i, j, b(i, j) * 0.5);
    // Every scaled a entry is <= the b entry, so C == A entrywise.
    EXPECT_EQ(rtdl_sum(a, b, raw_options()).value, 0.0);
}

TEST(Barcode, IntervalsAreValidAndCountIsVertexMinusOne) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 31);
        const auto a = testing::random_connected_matrix(rng, n, trial % 2 == 0);
        const auto b = testing::random_connected_matrix(rng, n, trial % 3 == 0);
        RtdlOptions opt;
        opt.normalize = trial % 2 == 1;
        const Barcode barcode = rtdl_barcode(a, b, opt);
        ASSERT_EQ(barcode.intervals().size(), static_cast<std::size_t>(n - 1));
        for (const auto& iv : barcode.intervals()) {
            EXPECT_LE(iv.birth, iv.death);
            EXPECT_GE(iv.length(), 0.0);
        }
    }
}

TEST(Barcode, LengthSumMatchesFastPath) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 31);
        const auto a = testing::random_connected_matrix(rng, n, trial % 2 == 0);
        const auto b = testing::random_connected_matrix(rng, n, trial % 3 == 0);
        RtdlOptions opt;
        opt.normalize = trial % 2 == 1;
        const double from_barcode = rtdl_barcode(a, b, opt).length_sum();
        const RtdlValue fast = rtdl_sum(a, b, opt);
        EXPECT_LE(std::abs(from_barcode - fast.value), 1e-9 * std::max(1.0, fast.value));
        EXPECT_GE(fast.value, 0.0);
    }
}

TEST(Barcode, ContainmentMatchesComponentCountDifference) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11); // up to 12
        const auto a = testing::random_connected_matrix(rng, n, trial % 2 == 0);
        const auto b = testing::random_connected_matrix(rng, n, true);
        RtdlOptions opt;
        opt.normalize = trial % 2 == 1;
        const Barcode barcode = rtdl_barcode(a, b, opt);
        const auto profile = oracle::ker_profile(a, b, opt);
        ASSERT_FALSE(profile.thresholds.empty());
        for (std::size_t k = 0; k < profile.thresholds.size(); ++k) {
            EXPECT_EQ(barcode.count_containing(profile.thresholds[k]), profile.ker_dims[k])
                << "alpha=" << profile.thresholds[k];
        }
    }
}

TEST(Barcode, ScaleInvariantWhenNormalized) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> factor(0.01, 50.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 12);
        const auto a = testing::random_connected_matrix(rng, n, false);
        const auto b = testing::random_connected_matrix(rng, n, false);
        const double c1 = factor(rng), c2 = factor(rng);
        WeightMatrix a2(n), b2(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                a2.set(i, j, c1 * a(i, j));
                b2.set(i, j, c2 * b(i, j));
            }
        const double base = rtdl_sum(a, b).value;
        const double scaled = rtdl_sum(a2, b2).value;
        EXPECT_LE(std::abs(base - scaled), 1e-9 * std::max(1.0, base));
    }
}

TEST(Barcode, PermutationEquivariant) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const auto a = testing::random_connected_matrix(rng, n, trial % 2 == 0);
        const auto b = testing::random_connected_matrix(rng, n, trial % 2 == 1);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        WeightMatrix pa(n), pb(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                pa.set(perm[i], perm[j], a(i, j));
                pb.set(perm[i], perm[j], b(i, j));
            }
        EXPECT_NEAR(rtdl_sum(a, b).value, rtdl_sum(pa, pb).value, 1e-12);

        auto pairs_of = [](const Barcode& barcode) {
            std::vector<std::pair<double, double>> pairs;
            for (const auto& iv : barcode.intervals()) pairs.emplace_back(iv.birth, iv.death);
            std::sort(pairs.begin(), pairs.end());
            return pairs;
        };
        EXPECT_EQ(pairs_of(rtdl_barcode(a, b)), pairs_of(rtdl_barcode(pa, pb)));
    }
}

TEST(Barcode, DeterministicIncludingEdgeAttribution) {
    std::mt19937_64 rng(8);
    const auto a = testing::random_connected_matrix(rng, 14, true);
    const auto b = testing::random_connected_matrix(rng, 14, true);
    const Barcode first = rtdl_barcode(a, b);
    const Barcode second = rtdl_barcode(a, b);
    ASSERT_EQ(first.intervals().size(), second.intervals().size());
    for (std::size_t k = 0; k < first.intervals().size(); ++k) {
        EXPECT_EQ(first.intervals()[k].birth, second.intervals()[k].birth);
        EXPECT_EQ(first.intervals()[k].death, second.intervals()[k].death);
        EXPECT_EQ(first.intervals()[k].birth_edge, second.intervals()[k].birth_edge);
        EXPECT_EQ(first.intervals()[k].death_edge, second.intervals()[k].death_edge);
    }
}

TEST(Barcode, DisconnectedInputThrowsByDefault) {
    WeightMatrix a(4), b(4);
    a.set(0, 1, 1.0);
    a.set(2, 3, 1.0);
    a.set(0, 2, kInfinity);
    a.set(0, 3, kInfinity);
    a.set(1, 2, kInfinity);
    a.set(1, 3, kInfinity);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) b.set(i, j, 1.0);
    EXPECT_THROW(rtdl_barcode(a, b, raw_options()), DisconnectedInputError);
    EXPECT_THROW(rtdl_sum(a, b, raw_options()), DisconnectedInputError);
}

TEST(Barcode, InfiniteBarsWhenAllowed) {
    WeightMatrix a(4), b(4);
    a.set(0, 1, 1.0);
    a.set(2, 3, 1.0);
    a.set(0, 2, kInfinity);
    a.set(0, 3, kInfinity);
    a.set(1, 2, kInfinity);
    a.set(1, 3, kInfinity);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) b.set(i, j, 2.0);
    RtdlOptions opt = raw_options();
    opt.allow_infinite_bars = true;

    const Barcode barcode = rtdl_barcode(a, b, opt);
    ASSERT_EQ(barcode.intervals().size(), 3u); // C is complete, so spanning
    const int infinite =
        static_cast<int>(std::count_if(barcode.intervals().begin(), barcode.intervals().end(),
                                       [](const auto& iv) { return std::isinf(iv.death); }));
    EXPECT_EQ(infinite, 1); // A has 2 components, C has 1
    EXPECT_TRUE(std::isinf(rtdl_sum(a, b, opt).value));
    EXPECT_TRUE(std::isinf(barcode.length_sum()));
}

TEST(Barcode, DisconnectedPairWithMatchingPartitionsStaysFinite) {
    // A and C share the same two components; every C merge closes in A.
    WeightMatrix a(4), b(4);
    a.set(0, 1, 2.0);
    a.set(2, 3, 2.0);
    a.set(0, 2, kInfinity);
    a.set(0, 3, kInfinity);
    a.set(1, 2, kInfinity);
    a.set(1, 3, kInfinity);
    b.set(0, 1, 1.0);
    b.set(2, 3, 3.0);
    b.set(0, 2, kInfinity);
    b.set(0, 3, kInfinity);
    b.set(1, 2, kInfinity);
    b.set(1, 3, kInfinity);
    RtdlOptions opt = raw_options();
    opt.allow_infinite_bars = true;
    const Barcode barcode = rtdl_barcode(a, b, opt);
    ASSERT_EQ(barcode.intervals().size(), 2u);
    const RtdlValue sum = rtdl_sum(a, b, opt);
    EXPECT_DOUBLE_EQ(sum.value, 1.0); // [1,2] from the (0,1) edge, [2,2] from (2,3)
    EXPECT_DOUBLE_EQ(barcode.length_sum(), sum.value);
}

TEST(Barcode, RejectsDimensionMismatch) {
    EXPECT_THROW(rtdl_sum(WeightMatrix(3), WeightMatrix(4)), DimensionMismatchError);
}

TEST(CloudInterface, IdenticalCloudsGiveZero) {
    SplitMixStream rng(5);
    PointCloud p(10, 3);
    for (auto& x : p.coords) x = rng.next_unit();
    EXPECT_DOUBLE_EQ(rtdl_from_clouds(p, p).value, 0.0);
    const Barcode barcode = rtdl_barcode_from_clouds(p, p);
    for (const auto& iv : barcode.intervals()) EXPECT_TRUE(iv.zero_length());
}

TEST(CloudInterface, PairwiseDistanceIsEuclidean) {
    PointCloud p(2, 2);
    p.at(1, 0) = 3.0;
    p.at(1, 1) = 4.0;
    EXPECT_DOUBLE_EQ(pairwise_distances(p)(0, 1), 5.0);
}

TEST(CloudInterface, RigidRotationIsInvisible) {
    SplitMixStream rng(6);
    PointCloud p(12, 2);
    for (auto& x : p.coords) x = rng.next_unit() * 4.0 - 2.0;
    const double angle = 0.7;
    PointCloud q(12, 2);
    for (int i = 0; i < 12; ++i) {
        q.at(i, 0) = std::cos(angle) * p.at(i, 0) - std::sin(angle) * p.at(i, 1);
        q.at(i, 1) = std::sin(angle) * p.at(i, 0) + std::cos(angle) * p.at(i, 1);
    }
    EXPECT_NEAR(rtdl_from_clouds(p, q).value, 0.0, 1e-9);
    EXPECT_NEAR(symmetrized_rtdl(pairwise_distances(p), pairwise_distances(q)), 0.0, 1e-9);
}

TEST(CloudInterface, RejectsBadClouds) {
    PointCloud p(3, 2), q(4, 2);
    EXPECT_THROW(rtdl_from_clouds(p, q), DimensionMismatchError);
    PointCloud zero_dim(3, 0);
    EXPECT_THROW(pairwise_distances(zero_dim), ValidationError);
}

} // namespace
} // namespace rtdlite
