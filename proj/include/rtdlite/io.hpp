#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rtdlite/barcode.hpp"
#include "rtdlite/batch.hpp"
#include "rtdlite/errors.hpp"
#include "rtdlite/gradient.hpp"
#include "rtdlite/point_cloud.hpp"
#include "rtdlite/weight_matrix.hpp"

namespace rtdlite {

// File formats:
//   matrix CSV    n lines of n comma-separated floats; `inf` (any case) is +infinity
//   cloud CSV     one point per line, comma-separated coordinates; `#` lines ignored
//   barcode JSON  {"n", "direction", "normalization", "intervals", "rtdl"};
//                 intervals sorted by (birth, death); infinities as the string "inf"
//   gradient CSV  `i,j,value` per nonzero undirected entry, i < j
//   grid CSV      label header row and column

namespace detail {

inline double parse_weight_token(const std::string& raw, int line_no) {
    std::string token = raw;
    token.erase(token.begin(), std::find_if_not(token.begin(), token.end(),
                                                [](unsigned char c) { return std::isspace(c); }));
    token.erase(std::find_if_not(token.rbegin(), token.rend(),
                                 [](unsigned char c) { return std::isspace(c); })
                    .base(),
                token.end());
    std::string lower = token;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "inf") return kInfinity;
    try {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw IoError("line " + std::to_string(line_no) + ": cannot parse '" + token + "'");
    }
}

inline std::vector<std::vector<double>> read_csv_rows(std::istream& in, bool skip_comments) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (skip_comments && line.front() == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(parse_weight_token(cell, line_no));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << std::setprecision(17);
    return out;
}

inline void format_weight(std::ostream& out, double w) {
    if (std::isinf(w))
        out << "inf";
    else
        out << w;
}

} // namespace detail

inline WeightMatrix read_matrix_csv(std::istream& in) {
    const auto rows = detail::read_csv_rows(in, /*skip_comments=*/false);
    const int n = static_cast<int>(rows.size());
    if (n < 2) throw IoError("matrix CSV: need at least 2 rows");
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw IoError("matrix CSV: ragged row (expected " + std::to_string(n) + " columns)");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    try {
        return WeightMatrix::validated(n, std::move(flat));
    } catch (const ValidationError& err) {
        throw IoError(std::string("matrix CSV: ") + err.what());
    }
}

inline WeightMatrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_matrix_csv(in);
}

inline void write_matrix_csv(std::ostream& out, const WeightMatrix& w) {
    out << std::setprecision(17);
    for (int i = 0; i < w.size(); ++i) {
        for (int j = 0; j < w.size(); ++j) {
            if (j) out << ',';
            detail::format_weight(out, w(i, j));
        }
        out << '\n';
    }
}

inline PointCloud read_cloud_csv(std::istream& in) {
    const auto rows = detail::read_csv_rows(in, /*skip_comments=*/true);
    if (rows.empty()) throw IoError("cloud CSV: no points");
    const int dim = static_cast<int>(rows.front().size());
    if (dim < 1) throw IoError("cloud CSV: zero-dimensional points");
    PointCloud cloud(static_cast<int>(rows.size()), dim);
    for (int i = 0; i < cloud.n; ++i) {
        if (static_cast<int>(rows[i].size()) != dim)
            throw IoError("cloud CSV: ragged row (expected " + std::to_string(dim) + " columns)");
        for (int d = 0; d < dim; ++d) cloud.at(i, d) = rows[i][d];
    }
    return cloud;
}

inline PointCloud read_cloud_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_cloud_csv(in);
}

inline void write_cloud_csv(std::ostream& out, const PointCloud& cloud,
                            const std::string& header = "") {
    out << std::setprecision(17);
    if (!header.empty()) out << "# " << header << '\n';
    for (int i = 0; i < cloud.n; ++i) {
        for (int d = 0; d < cloud.dim; ++d) {
            if (d) out << ',';
            out << cloud.at(i, d);
        }
        out << '\n';
    }
}

inline nlohmann::json weight_to_json(double w) {
    if (std::isinf(w)) return "inf";
    return w;
}

/// Schema: {"n", "direction", "normalization": {"level","q_a","q_b","enabled"},
/// "intervals": [[birth, death], ...] sorted by (birth, death), "rtdl"}.
/// drop_zero filters displayed intervals only; "rtdl" is always the full sum.
inline nlohmann::json barcode_to_json(const Barcode& barcode, bool drop_zero = false) {
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(barcode.intervals().size());
    for (const auto& iv : barcode.intervals()) {
        if (drop_zero && iv.zero_length()) continue;
        pairs.emplace_back(iv.birth, iv.death);
    }
    std::sort(pairs.begin(), pairs.end());

    nlohmann::json j;
    j["n"] = barcode.vertex_count();
    j["direction"] = barcode.direction();
    j["normalization"] = {{"level", barcode.normalization().level},
                          {"q_a", barcode.normalization().q_a},
                          {"q_b", barcode.normalization().q_b},
                          {"enabled", barcode.normalization().enabled}};
    j["intervals"] = nlohmann::json::array();
    for (const auto& [birth, death] : pairs)
        j["intervals"].push_back({weight_to_json(birth), weight_to_json(death)});
    j["rtdl"] = weight_to_json(barcode.length_sum());
    return j;
}

inline void write_gradient_csv(std::ostream& out, const SparseSymmetric& grad) {
    out << std::setprecision(17);
    for (const auto& [edge, value] : grad.entries())
        out << edge.first << ',' << edge.second << ',' << value << '\n';
}

inline void write_comparison_csv(std::ostream& out, const ComparisonMatrix& grid) {
    out << std::setprecision(17);
    out << "label";
    for (const auto& label : grid.labels) out << ',' << label;
    out << '\n';
    for (int i = 0; i < grid.m; ++i) {
        out << grid.labels[i];
        for (int j = 0; j < grid.m; ++j) {
            out << ',';
            detail::format_weight(out, grid.at(i, j));
        }
        out << '\n';
    }
}

inline nlohmann::json comparison_to_json(const ComparisonMatrix& grid) {
    nlohmann::json j;
    j["labels"] = grid.labels;
    j["direction"] = direction_policy_name(grid.policy);
    if (grid.subsample)
        j["subsample"] = {{"size", grid.subsample->size}, {"seed", grid.subsample->seed}};
    j["values"] = nlohmann::json::array();
    for (int i = 0; i < grid.m; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j2 = 0; j2 < grid.m; ++j2) row.push_back(weight_to_json(grid.at(i, j2)));
        j["values"].push_back(row);
    }
    return j;
}

} // namespace rtdlite
