// Command-line frontend: single-pair barcodes and discrepancy scores, batch
// comparison grids, gradient checking, synthetic data, trend reproduction,
// and a scaling benchmark.
//
// Exit codes: 0 success, 2 I/O or parse failure, 3 disconnected input,
// 4 dimension mismatch. Failures print `error: <code>: <detail>` on stderr.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rtdlite/rtdlite.hpp"

namespace {

using namespace rtdlite;

struct PairInputs {
    WeightMatrix a;
    WeightMatrix b;
};

struct CommonFlags {
    std::string kind = "matrix";
    std::string metric = "euclidean";
    std::string direction = "ab";
    double quantile = 0.9;
    bool no_normalize = false;
    bool allow_infinite_bars = false;

    RtdlOptions options() const {
        RtdlOptions opt;
        opt.normalize = !no_normalize;
        opt.quantile_level = quantile;
        opt.allow_infinite_bars = allow_infinite_bars;
        return opt;
    }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_direction_sym) {
    cmd->add_option("--kind", flags.kind, "Input file kind")
        ->check(CLI::IsMember({"matrix", "cloud"}))
        ->capture_default_str();
    cmd->add_option("--metric", flags.metric, "Point-cloud metric")
        ->check(CLI::IsMember({"euclidean"}))
        ->capture_default_str();
    cmd->add_option("--quantile", flags.quantile, "Normalization quantile level")
        ->check(CLI::Range(1e-9, 1.0))
        ->capture_default_str();
    cmd->add_flag("--no-normalize", flags.no_normalize, "Skip quantile normalization");
    cmd->add_flag("--allow-infinite-bars", flags.allow_infinite_bars,
                  "Emit infinite intervals instead of failing on disconnected input");
    auto directions = with_direction_sym ? std::vector<std::string>{"ab", "ba", "sym"}
                                         : std::vector<std::string>{"ab", "ba"};
    cmd->add_option("--direction", flags.direction, "Comparison direction")
        ->check(CLI::IsMember(directions))
        ->capture_default_str();
}

PairInputs load_pair(const std::string& path_a, const std::string& path_b,
                     const CommonFlags& flags) {
    if (flags.kind == "cloud") {
        const PointCloud p = read_cloud_csv(path_a);
        const PointCloud q = read_cloud_csv(path_b);
        check_cloud_pair(p, q);
        return {pairwise_distances(p), pairwise_distances(q)};
    }
    WeightMatrix a = read_matrix_csv(path_a);
    WeightMatrix b = read_matrix_csv(path_b);
    if (a.size() != b.size())
        throw DimensionMismatchError("inputs have " + std::to_string(a.size()) + " vs " +
                                     std::to_string(b.size()) + " vertices");
    return {std::move(a), std::move(b)};
}

std::ostream& output_stream(const std::string& out_path, std::ofstream& file) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw IoError("cannot open '" + out_path + "' for writing");
    return file;
}

std::string format_value(double v) {
    if (std::isinf(v)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// trend: regenerate the synthetic suites over a seed ensemble and correlate
// the discrepancy with the variant index.
//
// clusters  baseline is the untranslated normal sample (k = 1); variants
//           split it into k = 2..12 blocks on a circle. The rank statistic
//           runs over the eleven genuine variants; the self-comparison is
//           excluded (its value is identically 0, which says nothing about
//           the trend). Reference ensemble value: -1.0.
// rings     baseline has 5 rings; variants have 5,4,3,2,1 rings, indexed by
//           the number of rings merged away (0..4), i.e. by increasing
//           structural discrepancy. The self-comparison at index 0 anchors
//           the ranking. Reference ensemble value: 0.8.
//
// Both normalization settings are computed; `tau` echoes the normalized one
// (the default preprocessing), and best_match records which setting lands
// closer to the reference.
// ---------------------------------------------------------------------------

struct TrendVariant {
    int index;
    int param; // ring or cluster count
};

struct TrendResult {
    double tau_normalized = 0.0;
    double tau_raw = 0.0;
};

TrendResult run_trend(const std::string& suite, int n_points, int num_seeds,
                      std::uint64_t base_seed, double quantile, std::ostream* csv) {
    std::vector<TrendVariant> variants;
    if (suite == "clusters") {
        for (int k = 2; k <= kMaxClusterCount; ++k) variants.push_back({k, k});
    } else {
        for (int r = kMaxRingCount; r >= 1; --r) variants.push_back({kMaxRingCount - r, r});
    }

    if (csv) *csv << "suite,normalized,seed,variant_index,param,rtdl\n";

    RtdlOptions normalized_opt;
    normalized_opt.quantile_level = quantile;
    RtdlOptions raw_opt;
    raw_opt.normalize = false;

    double tau_sum[2] = {0.0, 0.0};
    for (int s = 0; s < num_seeds; ++s) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(s);
        SynthSpec base_spec;
        base_spec.n_points = n_points;
        base_spec.seed = seed;
        if (suite == "clusters") {
            base_spec.kind = SynthKind::kClusters;
            base_spec.cluster_count = 1;
        } else {
            base_spec.kind = SynthKind::kRings;
            base_spec.ring_count = kMaxRingCount;
        }
        const WeightMatrix base_dist = pairwise_distances(generate(base_spec));

        std::vector<double> indices, values_norm, values_raw;
        for (const auto& variant : variants) {
            SynthSpec spec = base_spec;
            if (suite == "clusters")
                spec.cluster_count = variant.param;
            else
                spec.ring_count = variant.param;
            const WeightMatrix variant_dist = pairwise_distances(generate(spec));
            const double v_norm = rtdl_sum(base_dist, variant_dist, normalized_opt).value;
            const double v_raw = rtdl_sum(base_dist, variant_dist, raw_opt).value;
            indices.push_back(variant.index);
            values_norm.push_back(v_norm);
            values_raw.push_back(v_raw);
            if (csv) {
                *csv << suite << ",1," << seed << ',' << variant.index << ',' << variant.param
                     << ',' << format_value(v_norm) << '\n';
                *csv << suite << ",0," << seed << ',' << variant.index << ',' << variant.param
                     << ',' << format_value(v_raw) << '\n';
            }
        }
        tau_sum[0] += kendall_tau(values_norm, indices);
        tau_sum[1] += kendall_tau(values_raw, indices);
    }
    return {tau_sum[0] / num_seeds, tau_sum[1] / num_seeds};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological discrepancy between weighted graphs and point clouds\n"
                 "via spanning trees of the element-wise-minimum graph."};
    app.require_subcommand(1);

    // --- barcode ---
    auto* cmd_barcode = app.add_subcommand("barcode", "Full interval barcode as JSON");
    std::string bc_a, bc_b, bc_out;
    bool bc_drop_zero = false;
    CommonFlags bc_flags;
    cmd_barcode->add_option("A", bc_a, "First input file")->required();
    cmd_barcode->add_option("B", bc_b, "Second input file")->required();
    add_common_flags(cmd_barcode, bc_flags, /*with_direction_sym=*/false);
    cmd_barcode->add_flag("--drop-zero", bc_drop_zero, "Hide zero-length intervals");
    cmd_barcode->add_option("--out", bc_out, "Output path (default stdout)");
    cmd_barcode->callback([&] {
        auto inputs = load_pair(bc_a, bc_b, bc_flags);
        const bool swap = bc_flags.direction == "ba";
        Barcode barcode = swap ? rtdl_barcode(inputs.b, inputs.a, bc_flags.options())
                               : rtdl_barcode(inputs.a, inputs.b, bc_flags.options());
        nlohmann::json j = barcode_to_json(barcode, bc_drop_zero);
        j["direction"] = swap ? "BA" : "AB";
        std::ofstream file;
        output_stream(bc_out, file) << j.dump(2) << '\n';
    });

    // --- rtdl ---
    auto* cmd_rtdl = app.add_subcommand("rtdl", "Scalar discrepancy on stdout");
    std::string rd_a, rd_b, rd_out;
    CommonFlags rd_flags;
    cmd_rtdl->add_option("A", rd_a, "First input file")->required();
    cmd_rtdl->add_option("B", rd_b, "Second input file")->required();
    add_common_flags(cmd_rtdl, rd_flags, /*with_direction_sym=*/true);
    cmd_rtdl->add_option("--out", rd_out, "Output path (default stdout)");
    cmd_rtdl->callback([&] {
        auto inputs = load_pair(rd_a, rd_b, rd_flags);
        double value = 0.0;
        if (rd_flags.direction == "sym")
            value = symmetrized_rtdl(inputs.a, inputs.b, rd_flags.options());
        else if (rd_flags.direction == "ba")
            value = rtdl_sum(inputs.b, inputs.a, rd_flags.options()).value;
        else
            value = rtdl_sum(inputs.a, inputs.b, rd_flags.options()).value;
        std::ofstream file;
        output_stream(rd_out, file) << format_value(value) << '\n';
    });

    // --- matrix ---
    auto* cmd_matrix = app.add_subcommand("matrix", "Pairwise discrepancy grid over cloud files");
    std::vector<std::string> mx_files;
    std::string mx_out, mx_format = "csv";
    int mx_subsample = 0, mx_parallelism = 0;
    std::uint64_t mx_seed = 0;
    CommonFlags mx_flags;
    mx_flags.kind = "cloud";
    cmd_matrix->add_option("files", mx_files, "Point-cloud CSV files")->required()->expected(-2);
    add_common_flags(cmd_matrix, mx_flags, /*with_direction_sym=*/true);
    cmd_matrix->add_option("--subsample", mx_subsample, "Shared subsample size (0 = all points)");
    cmd_matrix->add_option("--seed", mx_seed, "Subsample seed")->capture_default_str();
    cmd_matrix->add_option("--parallelism", mx_parallelism,
                           "Worker threads (0 = hardware concurrency, 1 = serial)");
    cmd_matrix->add_option("--format", mx_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd_matrix->add_option("--out", mx_out, "Output path (default stdout)");
    cmd_matrix->callback([&] {
        std::vector<PointCloud> reps;
        std::vector<std::string> labels;
        for (const auto& path : mx_files) {
            reps.push_back(read_cloud_csv(path));
            labels.push_back(std::filesystem::path(path).stem().string());
        }
        DirectionPolicy policy = DirectionPolicy::kAB;
        if (mx_flags.direction == "ba") policy = DirectionPolicy::kBA;
        if (mx_flags.direction == "sym") policy = DirectionPolicy::kSymmetrized;
        std::optional<SubsampleSpec> subsample;
        if (mx_subsample > 0) subsample = SubsampleSpec{mx_subsample, mx_seed};
        const ComparisonMatrix grid = compare_all(reps, labels, policy, subsample, mx_parallelism,
                                                  mx_flags.options());
        std::ofstream file;
        auto& out = output_stream(mx_out, file);
        if (mx_format == "json")
            out << comparison_to_json(grid).dump(2) << '\n';
        else
            write_comparison_csv(out, grid);
    });

    // --- gradcheck ---
    auto* cmd_gradcheck = app.add_subcommand(
        "gradcheck", "Check point gradients against central finite differences");
    int gc_pairs = 50, gc_points = 8, gc_dim = 3;
    std::uint64_t gc_seed = 0;
    double gc_eps = 1e-6, gc_gap = 1e-3, gc_tol = 1e-4;
    cmd_gradcheck->add_option("--pairs", gc_pairs, "Cloud pairs to test")->capture_default_str();
    cmd_gradcheck->add_option("--points", gc_points, "Points per cloud")->capture_default_str();
    cmd_gradcheck->add_option("--dim", gc_dim, "Point dimension")->capture_default_str();
    cmd_gradcheck->add_option("--seed", gc_seed, "Base seed")->capture_default_str();
    cmd_gradcheck->add_option("--eps", gc_eps, "Finite-difference step")->capture_default_str();
    cmd_gradcheck->add_option("--gap", gc_gap, "Minimum pairwise weight gap; tighter draws are resampled")
        ->capture_default_str();
    cmd_gradcheck->add_option("--tol", gc_tol, "Maximum relative error")->capture_default_str();
    cmd_gradcheck->callback([&] {
        double max_rel_err = 0.0;
        std::uint64_t seed = gc_seed;
        for (int accepted = 0; accepted < gc_pairs;) {
            SynthSpec spec;
            spec.kind = SynthKind::kGaussianCloud;
            spec.n_points = gc_points;
            spec.dimension = gc_dim;
            spec.seed = seed;
            PointCloud p = generate(spec);
            spec.seed = seed + 1;
            PointCloud q = generate(spec);
            seed += 2;

            auto [value, grads] = rtdl_subgradient(pairwise_distances(p), pairwise_distances(q));

            // Reject draws with near-tied weights anywhere in the scaled pair:
            // a tie crossing would make the subgradient one-sided.
            std::vector<double> weights;
            for (int i = 0; i < gc_points; ++i)
                for (int j = i + 1; j < gc_points; ++j) {
                    weights.push_back(point_distance(p, i, j, Metric::kEuclidean) / grads.q_a);
                    weights.push_back(point_distance(q, i, j, Metric::kEuclidean) / grads.q_b);
                }
            std::sort(weights.begin(), weights.end());
            bool tight = false;
            for (std::size_t i = 0; i + 1 < weights.size() && !tight; ++i)
                tight = weights[i + 1] - weights[i] <= gc_gap;
            if (tight) continue;
            ++accepted;

            const PointGradients analytic = chain_to_points(grads, p, q);
            // Divisors stay frozen at their base-point values.
            RtdlOptions frozen;
            frozen.normalize = false;
            auto objective = [&](const PointCloud& pp, const PointCloud& qq) {
                WeightMatrix a = pairwise_distances(pp);
                WeightMatrix b = pairwise_distances(qq);
                WeightMatrix a_scaled(a.size()), b_scaled(b.size());
                for (int i = 0; i < a.size(); ++i)
                    for (int j = i + 1; j < a.size(); ++j) {
                        a_scaled.set(i, j, a(i, j) / grads.q_a);
                        b_scaled.set(i, j, b(i, j) / grads.q_b);
                    }
                return rtdl_sum(a_scaled, b_scaled, frozen).value;
            };
            auto check_cloud = [&](PointCloud& cloud, const PointCloud& grad, bool is_p) {
                for (int i = 0; i < cloud.n; ++i)
                    for (int d = 0; d < cloud.dim; ++d) {
                        const double saved = cloud.at(i, d);
                        cloud.at(i, d) = saved + gc_eps;
                        const double up = is_p ? objective(cloud, q) : objective(p, cloud);
                        cloud.at(i, d) = saved - gc_eps;
                        const double down = is_p ? objective(cloud, q) : objective(p, cloud);
                        cloud.at(i, d) = saved;
                        const double fd = (up - down) / (2.0 * gc_eps);
                        const double g = grad.at(i, d);
                        const double rel =
                            std::abs(fd - g) / std::max({std::abs(fd), std::abs(g), 1.0});
                        max_rel_err = std::max(max_rel_err, rel);
                    }
            };
            check_cloud(p, analytic.d_p, true);
            check_cloud(q, analytic.d_q, false);
        }
        if (max_rel_err <= gc_tol) {
            std::cout << "PASS rel_err_max<=" << gc_tol << '\n';
            std::cout << "max_rel_err=" << format_value(max_rel_err) << " pairs=" << gc_pairs
                      << '\n';
        } else {
            std::cout << "FAIL max_rel_err=" << format_value(max_rel_err) << " tol=" << gc_tol
                      << '\n';
            std::exit(1);
        }
    });

    // --- synth ---
    auto* cmd_synth = app.add_subcommand("synth", "Generate a synthetic point cloud CSV");
    std::string sy_kind, sy_out;
    int sy_n = 0, sy_rings = 1, sy_clusters = 1, sy_dim = 2;
    std::uint64_t sy_seed = 0;
    cmd_synth->add_option("--synth", sy_kind, "Cloud family")
        ->check(CLI::IsMember({"rings", "clusters", "gaussian"}))
        ->required();
    cmd_synth->add_option("--n", sy_n, "Point count")->required();
    cmd_synth->add_option("--rings", sy_rings, "Ring count (rings family)")->capture_default_str();
    cmd_synth->add_option("--clusters", sy_clusters, "Cluster count (clusters family)")
        ->capture_default_str();
    cmd_synth->add_option("--dim", sy_dim, "Dimension (gaussian family)")->capture_default_str();
    cmd_synth->add_option("--seed", sy_seed, "Seed")->capture_default_str();
    cmd_synth->add_option("--out", sy_out, "Output path (default stdout)");
    cmd_synth->callback([&] {
        SynthSpec spec;
        spec.n_points = sy_n;
        spec.seed = sy_seed;
        std::string params;
        if (sy_kind == "rings") {
            spec.kind = SynthKind::kRings;
            spec.ring_count = sy_rings;
            params = " rings=" + std::to_string(sy_rings);
        } else if (sy_kind == "clusters") {
            spec.kind = SynthKind::kClusters;
            spec.cluster_count = sy_clusters;
            params = " clusters=" + std::to_string(sy_clusters);
        } else {
            spec.kind = SynthKind::kGaussianCloud;
            spec.dimension = sy_dim;
            params = " dim=" + std::to_string(sy_dim);
        }
        const PointCloud cloud = generate(spec);
        std::ofstream file;
        write_cloud_csv(output_stream(sy_out, file), cloud,
                        "kind=" + sy_kind + " seed=" + std::to_string(sy_seed) +
                            " n=" + std::to_string(sy_n) + params);
    });

    // --- trend ---
    auto* cmd_trend = app.add_subcommand(
        "trend", "Synthetic-suite discrepancy trend with Kendall tau report");
    std::string tr_suite, tr_out;
    int tr_n = 0, tr_num_seeds = 10;
    std::uint64_t tr_seed = 0;
    double tr_quantile = 0.9;
    cmd_trend->add_option("--suite", tr_suite, "Which suite to run")
        ->check(CLI::IsMember({"rings", "clusters"}))
        ->required();
    cmd_trend->add_option("--n", tr_n, "Point count (default: 500 rings, 300 clusters)");
    cmd_trend->add_option("--num-seeds", tr_num_seeds, "Ensemble size")->capture_default_str();
    cmd_trend->add_option("--seed", tr_seed, "Base seed")->capture_default_str();
    cmd_trend->add_option("--quantile", tr_quantile, "Normalization quantile level")
        ->capture_default_str();
    cmd_trend->add_option("--out", tr_out, "Per-variant CSV output path");
    cmd_trend->callback([&] {
        const int n_points = tr_n > 0 ? tr_n : (tr_suite == "rings" ? 500 : 300);
        std::ofstream file;
        std::ostream* csv = nullptr;
        if (!tr_out.empty()) {
            csv = &output_stream(tr_out, file);
        }
        const TrendResult result =
            run_trend(tr_suite, n_points, tr_num_seeds, tr_seed, tr_quantile, csv);
        const double reference = tr_suite == "clusters" ? -1.0 : 0.8;
        const bool normalized_closer = std::abs(result.tau_normalized - reference) <=
                                       std::abs(result.tau_raw - reference);
        std::cout << "suite=" << tr_suite << " n=" << n_points << " num_seeds=" << tr_num_seeds
                  << " base_seed=" << tr_seed << '\n';
        std::cout << "tau_normalized=" << format_value(result.tau_normalized) << '\n';
        std::cout << "tau_raw=" << format_value(result.tau_raw) << '\n';
        std::cout << "reference_tau=" << reference << '\n';
        std::cout << "best_match=" << (normalized_closer ? "normalized" : "raw") << '\n';
        std::cout << "tau=" << format_value(result.tau_normalized) << '\n';
    });

    // --- bench ---
    auto* cmd_bench = app.add_subcommand("bench", "Scaling benchmark with fitted exponent");
    std::vector<int> be_sizes{500, 1000, 2000, 4000};
    int be_dim = 8;
    std::uint64_t be_seed = 0;
    std::string be_out;
    cmd_bench->add_option("--sizes", be_sizes, "Point counts to time")->capture_default_str();
    cmd_bench->add_option("--dim", be_dim, "Cloud dimension")->capture_default_str();
    cmd_bench->add_option("--seed", be_seed, "Seed")->capture_default_str();
    cmd_bench->add_option("--out", be_out, "CSV output path");
    cmd_bench->callback([&] {
        std::vector<double> ns, ts;
        std::ofstream file;
        std::ostream* csv = nullptr;
        if (!be_out.empty()) {
            csv = &output_stream(be_out, file);
            *csv << "n,seconds\n";
        }
        for (const int n : be_sizes) {
            SynthSpec spec;
            spec.kind = SynthKind::kGaussianCloud;
            spec.n_points = n;
            spec.dimension = be_dim;
            spec.seed = be_seed;
            const PointCloud p = generate(spec);
            spec.seed = be_seed + 1;
            const PointCloud q = generate(spec);

            const int repeats = n <= 1000 ? 3 : 1;
            double best = kInfinity;
            for (int r = 0; r < repeats; ++r) {
                const auto start = std::chrono::steady_clock::now();
                volatile double sink = rtdl_from_clouds(p, q).value;
                (void)sink;
                const std::chrono::duration<double> elapsed =
                    std::chrono::steady_clock::now() - start;
                best = std::min(best, elapsed.count());
            }
            ns.push_back(n);
            ts.push_back(best);
            std::cout << "n=" << n << " seconds=" << format_value(best) << '\n';
            if (csv) *csv << n << ',' << format_value(best) << '\n';
        }
        std::cout << "slope=" << format_value(log_log_slope(ns, ts)) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const DisconnectedInputError& e) {
        std::cerr << "error: 3: " << e.what() << '\n';
        return 3;
    } catch (const DimensionMismatchError& e) {
        std::cerr << "error: 4: " << e.what() << '\n';
        return 4;
    } catch (const IoError& e) {
        std::cerr << "error: 2: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: 2: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
