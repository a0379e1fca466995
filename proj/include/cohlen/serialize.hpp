#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and CSV forms of the result types.
 *
 * Exact integers and rationals are serialized as strings ("1234",
 * "56/3") — sigma grows like n^4 and lengths like n^d, well past what a
 * 64-bit JSON consumer can hold. Structural fields (n, e, D, degree)
 * stay plain numbers.
 */

#include <cohlen/asymptotics.hpp>
#include <cohlen/k3.hpp>
#include <cohlen/lengths.hpp>
#include <cohlen/quadratic.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace cohlen {

using json = nlohmann::ordered_json;

inline json to_json(const QuadraticNumber& v) {
    return json{{"p", v.rational_part().to_string()},
                {"q", v.radical_part().to_string()},
                {"D", v.radicand()}};
}

inline json to_json(const LengthRecord& r) {
    return json{{"n", r.n},
                {"lambda", r.lambda.to_string()},
                {"sigma", r.sigma.to_string()},
                {"tau", r.tau.to_string()},
                {"e", r.cutoff_e}};
}

inline json to_json(const AsymptoticEstimate& est, std::size_t decimal_digits = 12) {
    json raw = json::array();
    for (const auto& [n, value] : est.raw)
        raw.push_back(json{{"n", n}, {"ratio", value.to_string()}});
    return json{{"degree", est.degree},
                {"raw", raw},
                {"extrapolated", est.extrapolated.to_string()},
                {"extrapolated_decimal", est.extrapolated.to_decimal_string(decimal_digits)},
                {"error_indicator", est.error_indicator.to_string()}};
}

inline json to_json(const ConvergenceRow& row) {
    return json{{"n", row.n},
                {"sigma", row.sigma.to_string()},
                {"ratio_num", row.ratio.numerator().to_string()},
                {"ratio_den", row.ratio.denominator().to_string()},
                {"extrapolant_decimal",
                 row.extrapolant ? json(row.extrapolant->to_decimal_string(12)) : json()}};
}

inline std::string csv_field(const json& value) {
    if (value.is_null()) return "";
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

/// Rows of uniform objects as a CSV document (header from the first row).
inline std::string to_csv(const json& rows) {
    std::string out;
    if (!rows.is_array() || rows.empty()) return out;
    bool first = true;
    for (auto& [key, value] : rows.front().items()) {
        (void)value;
        if (!first) out += ',';
        out += key;
        first = false;
    }
    out += '\n';
    for (const auto& row : rows) {
        first = true;
        for (auto& [key, value] : row.items()) {
            (void)key;
            if (!first) out += ',';
            out += csv_field(value);
            first = false;
        }
        out += '\n';
    }
    return out;
}

inline json length_rows_json(const std::vector<LengthRecord>& records) {
    json rows = json::array();
    for (const auto& r : records) rows.push_back(to_json(r));
    return rows;
}

inline json convergence_rows_json(const std::vector<ConvergenceRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(to_json(r));
    return out;
}

}  // namespace cohlen
