#pragma once

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lbmtest/types.hpp"

namespace lbmtest {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Number formatting
// ---------------------------------------------------------------------------

/// Format with 17 significant digits: the decimal-to-binary round trip is
/// exact, which makes byte-identical reruns checkable on text output.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Serialize a JSON document, printing floating-point numbers via
/// format_double instead of the library default.
inline void dump_json(const Json& j, std::string& out, int indent = 0, int depth = 0) {
    const std::string pad(static_cast<std::size_t>(indent * depth), ' ');
    const std::string pad_in(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            out += nl;
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) {
                    out += ",";
                    out += nl;
                }
                first = false;
                out += pad_in;
                out += Json(key).dump();
                out += indent > 0 ? ": " : ":";
                dump_json(value, out, indent, depth + 1);
            }
            out += nl;
            out += pad;
            out += "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[";
            out += nl;
            bool first = true;
            for (const auto& value : j) {
                if (!first) {
                    out += ",";
                    out += nl;
                }
                first = false;
                out += pad_in;
                dump_json(value, out, indent, depth + 1);
            }
            out += nl;
            out += pad;
            out += "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

inline std::string dump_json(const Json& j, int indent = 0) {
    std::string out;
    dump_json(j, out, indent);
    if (indent > 0) out += "\n";
    return out;
}

// ---------------------------------------------------------------------------
// CSV matrices
// ---------------------------------------------------------------------------

/// One matrix row per line, comma-separated decimal values, no header.
inline void write_matrix_csv(std::ostream& os, const Matrix& m) {
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << format_double(m(i, j));
        }
        os << '\n';
    }
}

inline void write_matrix_csv(const std::string& path, const Matrix& m) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open " + path + " for writing");
    write_matrix_csv(os, m);
}

inline Matrix read_matrix_csv(std::istream& is) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        const char* ptr = line.c_str();
        while (true) {
            char* end = nullptr;
            const double v = std::strtod(ptr, &end);
            if (end == ptr) throw Error("malformed CSV value in line: " + line);
            row.push_back(v);
            ptr = end;
            while (*ptr == ' ') ++ptr;
            if (*ptr == ',') {
                ++ptr;
            } else if (*ptr == '\0' || *ptr == '\r') {
                break;
            } else {
                throw Error("unexpected character in CSV line: " + line);
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw Error("ragged CSV: row lengths differ");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error("empty CSV matrix");
    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

inline Matrix read_matrix_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path);
    return read_matrix_csv(is);
}

// ---------------------------------------------------------------------------
// Assignment files: one integer label per line
// ---------------------------------------------------------------------------

inline void write_assignment(std::ostream& os, const std::vector<int>& assign) {
    for (int label : assign) os << label << '\n';
}

inline std::vector<int> read_assignment(std::istream& is) {
    std::vector<int> assign;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        assign.push_back(std::stoi(line));
    }
    return assign;
}

// ---------------------------------------------------------------------------
// JSON records
// ---------------------------------------------------------------------------

inline Json to_json(const BlockStructure& s) {
    return Json{{"row_assign", s.row_assign}, {"col_assign", s.col_assign}, {"K", s.K}, {"H", s.H}};
}

inline BlockStructure block_structure_from_json(const Json& j) {
    BlockStructure s(j.at("row_assign").get<std::vector<int>>(),
                     j.at("col_assign").get<std::vector<int>>(), j.at("K").get<int>(),
                     j.at("H").get<int>());
    validate(s);
    return s;
}

namespace detail {

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const Json& j) {
    const auto n = static_cast<Index>(j.size());
    if (n == 0) throw Error("empty JSON matrix");
    const auto p = static_cast<Index>(j.at(0).size());
    Matrix m(n, p);
    for (Index i = 0; i < n; ++i)
        for (Index jj = 0; jj < p; ++jj)
            m(i, jj) = j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(jj)).get<double>();
    return m;
}

}  // namespace detail

inline Json to_json(const BlockParams& p) {
    return Json{{"means", detail::matrix_to_json(p.means)},
                {"stds", detail::matrix_to_json(p.stds)}};
}

inline BlockParams block_params_from_json(const Json& j) {
    return {detail::matrix_from_json(j.at("means")), detail::matrix_from_json(j.at("stds"))};
}

inline Json to_json(const TestResult& r) {
    return Json{{"lambda1_hat", r.lambda1_hat},
                {"scaling", Json{{"a", r.scaling.a}, {"b", r.scaling.b}}},
                {"statistic_T", r.statistic_T},
                {"alpha", r.alpha},
                {"quantile", r.quantile},
                {"reject", r.reject}};
}

inline Json to_json(const SelectionTrace& trace) {
    Json steps = Json::array();
    for (const auto& step : trace.steps) {
        Json s{{"k0", step.k0}, {"h0", step.h0}};
        s["result"] = step.result ? to_json(*step.result) : Json(nullptr);
        if (step.error) s["error"] = *step.error;
        steps.push_back(std::move(s));
    }
    Json j{{"steps", std::move(steps)}};
    j["selected"] = trace.selected
                        ? Json{{"K", trace.selected->first}, {"H", trace.selected->second}}
                        : Json(nullptr);
    j["exhausted"] = trace.exhausted;
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open " + path + " for writing");
    os << text;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path);
    return Json::parse(is);
}

}  // namespace lbmtest
