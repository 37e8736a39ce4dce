#pragma once

// File formats: matrix JSON / CSV, graph JSON / edge lists, DOT export, and
// JSON reports for partitions, tracks and experiments.
//
// Matrix JSON is {"field": "gf2" | "gf(p)" | "q", "rows": [["1", "0"], ...]}.
// Graph JSON is {"n": n, "edges": [[i, j], ...]} with 1-based vertices.
// Serialization is canonical: sorted keys, canonical scalar strings, and
// edges sorted lexicographically with i < j.

#include "tworow/blocks.hpp"
#include "tworow/error.hpp"
#include "tworow/field.hpp"
#include "tworow/graph.hpp"
#include "tworow/harness.hpp"
#include "tworow/matrix.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tworow {

using json = nlohmann::json;

namespace detail {

inline std::string position(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline json parse_json_text(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte just past the offending character
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw Error(Errc::parse_error, position(text, at) + ": malformed JSON");
    }
}

[[noreturn]] inline void schema_error(const std::string& what) { throw Error(Errc::parse_error, what); }

inline std::size_t positive_index(const json& v, const std::string& where)
{
    if (!v.is_number_integer() || v.get<long long>() < 1) schema_error(where + ": expected a positive integer");
    return v.get<std::size_t>();
}

}  // namespace detail

inline json matrix_to_json(const ExactMatrix& a)
{
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (const auto& x : a.row(r)) row.push_back(x.to_string());
        rows.push_back(std::move(row));
    }
    return json{{"field", a.spec().name()}, {"rows", std::move(rows)}};
}

/// Entries may be strings or JSON integers.
inline ExactMatrix matrix_from_json(const json& doc)
{
    if (!doc.is_object() || !doc.contains("field") || !doc.contains("rows"))
        detail::schema_error("matrix document needs \"field\" and \"rows\"");
    if (!doc["field"].is_string()) detail::schema_error("\"field\" must be a string");
    const FieldSpec spec = FieldSpec::parse(doc["field"].get<std::string>());
    const json& rows = doc["rows"];
    if (!rows.is_array() || rows.empty()) detail::schema_error("\"rows\" must be a non-empty array");
    std::vector<std::vector<Scalar>> data;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array()) detail::schema_error("row " + std::to_string(r + 1) + " is not an array");
        auto& out = data.emplace_back();
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const json& e = rows[r][c];
            const std::string where = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
            try {
                if (e.is_string()) out.push_back(Scalar::parse(spec, e.get<std::string>()));
                else if (e.is_number_integer()) out.push_back(Scalar::parse(spec, e.dump()));
                else detail::schema_error(where + ": expected a string or integer");
            } catch (const Error& err) {
                if (err.code() != Errc::parse_error) throw;
                detail::schema_error(where + ": " + err.what());
            }
        }
    }
    if (data.front().empty()) detail::schema_error("rows must be non-empty");
    for (std::size_t r = 1; r < data.size(); ++r)
        if (data[r].size() != data.front().size())
            detail::schema_error("row " + std::to_string(r + 1) + " has " + std::to_string(data[r].size())
                                 + " entries, expected " + std::to_string(data.front().size()));
    return ExactMatrix(spec, data);
}

inline ExactMatrix parse_matrix_json(std::string_view text) { return matrix_from_json(detail::parse_json_text(text)); }

inline std::string write_matrix_json(const ExactMatrix& a) { return matrix_to_json(a).dump() + "\n"; }

/// Comma-separated entries, one matrix row per line; blank lines are skipped.
inline ExactMatrix parse_matrix_csv(std::string_view text, FieldSpec spec)
{
    std::vector<std::vector<Scalar>> data;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto& row = data.emplace_back();
        std::size_t col = 1, field_no = 1;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string cell = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                row.push_back(Scalar::parse(spec, cell));
            } catch (const Error&) {
                throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ", column " + std::to_string(col)
                                                   + ": field " + std::to_string(field_no) + " '" + cell
                                                   + "' is not a " + spec.name() + " literal");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
            col = start + 1;
            ++field_no;
        }
        if (row.size() != data.front().size())
            throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ", column 1: row has "
                                               + std::to_string(row.size()) + " entries, expected "
                                               + std::to_string(data.front().size()));
    }
    if (data.empty()) throw Error(Errc::parse_error, "line 1, column 1: empty CSV matrix");
    return ExactMatrix(spec, data);
}

inline json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return json{{"edges", std::move(edges)}, {"n", g.vertex_count()}};
}

inline Graph graph_from_json(const json& doc)
{
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        detail::schema_error("graph document needs \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
        detail::schema_error("\"n\" must be a non-negative integer");
    Graph g(doc["n"].get<std::size_t>());
    const json& edges = doc["edges"];
    if (!edges.is_array()) detail::schema_error("\"edges\" must be an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string where = "edge " + std::to_string(k + 1);
        if (!edges[k].is_array() || edges[k].size() != 2) detail::schema_error(where + ": expected [i, j]");
        const std::size_t i = detail::positive_index(edges[k][0], where);
        const std::size_t j = detail::positive_index(edges[k][1], where);
        if (i > g.vertex_count() || j > g.vertex_count() || i == j)
            detail::schema_error(where + ": [" + std::to_string(i) + ", " + std::to_string(j) + "] is not an edge on "
                                 + std::to_string(g.vertex_count()) + " vertices");
        g.add_edge(i, j);
    }
    return g;
}

inline Graph parse_graph_json(std::string_view text) { return graph_from_json(detail::parse_json_text(text)); }

/// One "i j" pair per line, 1-based; '#' starts a comment. The vertex count is
/// `vertices` when given, else the largest index seen.
inline Graph parse_edge_list(std::string_view text, std::optional<std::size_t> vertices = std::nullopt)
{
    std::vector<Edge> edges;
    std::size_t max_vertex = 0, line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        long long i = 0, j = 0;
        std::string extra;
        if (!(fields >> i >> j) || (fields >> extra) || i < 1 || j < 1 || i == j) {
            const std::size_t col = line.find_first_not_of(" \t") + 1;
            throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ", column " + std::to_string(col)
                                               + ": expected two distinct positive vertex numbers");
        }
        edges.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        max_vertex = std::max({max_vertex, static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
    }
    const std::size_t n = vertices.value_or(max_vertex);
    if (max_vertex > n)
        throw Error(Errc::parse_error, "edge list mentions vertex " + std::to_string(max_vertex) + " but n = "
                                           + std::to_string(n));
    return Graph(n, edges);
}

/// Picks JSON when the first non-blank character is '{', else an edge list.
inline Graph parse_graph(std::string_view text, std::optional<std::size_t> vertices = std::nullopt)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
    return parse_edge_list(text, vertices);
}

inline std::string to_dot(const RowGraph& g)
{
    std::string out = "// flavor: " + std::string(flavor_name(g.flavor())) + "\ngraph G {\n";
    for (std::size_t v = 1; v <= g.vertex_count(); ++v) out += "  r" + std::to_string(v) + ";\n";
    for (auto [i, j] : g.edges()) out += "  r" + std::to_string(i) + " -- r" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

inline json block_to_json(const OneBlock& b)
{
    return json{{"rows", b.rows}, {"cols", {{"start", b.cols.start}, {"len", b.cols.len}, {"cyclic", b.cyclic}}}};
}

inline json partition_to_json(const BlockPartition& p)
{
    json blocks = json::array(), nonzero = json::array(), zero = json::array();
    for (const auto& b : p.blocks) blocks.push_back(block_to_json(b));
    for (auto c : p.nonzero_singletons) nonzero.push_back({c.row, c.col});
    for (auto c : p.zero_singletons) zero.push_back({c.row, c.col});
    return json{{"blocks", std::move(blocks)}, {"nonzero_singletons", std::move(nonzero)}, {"zero_singletons", std::move(zero)}};
}

/// The matrix with each cell tagged by the block that owns it: "1a" is an entry
/// of block a, "1" a nonzero singleton, "." a zero.
inline std::string render_partition(const ExactMatrix& a, const BlockPartition& p)
{
    const BlockMap map(a, p.blocks, !p.blocks.empty() && p.blocks.front().cyclic);
    std::vector<std::vector<std::string>> cells(a.rows(), std::vector<std::string>(a.cols()));
    std::size_t width = 1;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            std::string s = a(r, c).is_zero() ? "." : a(r, c).to_string();
            if (int b = map.owner0(r, c); b >= 0) s += static_cast<char>('a' + b % 26);
            width = std::max(width, s.size());
            cells[r][c] = std::move(s);
        }
    std::string out;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::string label = "r" + std::to_string(r + 1);
        out += label + std::string(5 - std::min<std::size_t>(4, label.size()), ' ') + "|";
        for (const auto& s : cells[r]) out += " " + std::string(width - s.size(), ' ') + s;
        out += " |\n";
    }
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const auto& blk = p.blocks[b];
        out += std::string(1, static_cast<char>('a' + b % 26)) + ": rows {";
        for (std::size_t k = 0; k < blk.rows.size(); ++k) out += (k ? "," : "") + std::to_string(blk.rows[k]);
        out += "} columns " + std::to_string(blk.cols.start) + ".." + std::to_string(blk.cols.last(a.cols()))
               + (blk.cyclic ? " (cyclic)" : "") + "\n";
    }
    return out;
}

inline json track_to_json(const OneTrack& t)
{
    json members = json::array();
    for (const auto& m : t.members)
        members.push_back({{"rows", m.rows}, {"cols", {{"start", m.cols.start}, {"len", m.cols.len}}}});
    return json{{"cyclic", t.cyclic}, {"members", std::move(members)}};
}

inline std::string rational_string(const Rational& q)
{
    return Scalar::from_rational(q).to_string();
}

inline json report_to_json(const ExperimentReport& r)
{
    json failures = json::array();
    for (const auto& a : r.failures) failures.push_back(matrix_to_json(a));
    return json{
        {"config",
         {{"mode", mode_name(r.config.mode)},
          {"n", r.config.n},
          {"q", r.config.q},
          {"seed", r.config.seed},
          {"trials", r.config.trials}}},
        {"successes", r.successes},
        {"total", r.total},
        {"estimate", rational_string(r.estimate)},
        {"estimate_decimal", to_decimal(r.estimate, 6)},
        {"failures", std::move(failures)},
    };
}

}  // namespace tworow
