#pragma once

// A 0/1 matrix A over GF(2) whose two-row graph is a prescribed graph Gamma,
// with row i standing for vertex i.
//
// Rows are added one vertex at a time. When vertex j+1 arrives, a zero row is
// appended, and then for each earlier vertex i = 1..j a zero separator column
// is appended, followed, if {v_i, v_{j+1}} is an edge, by two columns carrying
// (1, 0) and (0, 1) on rows (i, j+1). A last separator closes the round, and a
// final zero column pads the result. Each edge owns the only place where its
// two rows meet in a nonzero 2x2 window.

#include "tworow/error.hpp"
#include "tworow/field.hpp"
#include "tworow/graph.hpp"
#include "tworow/matrix.hpp"
#include "tworow/two_row.hpp"

#include <cstddef>
#include <vector>

namespace tworow {

struct RealizationResult {
    ExactMatrix matrix;
    std::vector<std::size_t> vertex_to_row;  ///< identity: vertex i -> row i
};

inline RealizationResult realize(const SimplicialGraph& gamma)
{
    const std::size_t n = gamma.vertex_count();
    if (n == 0) throw Error(Errc::invalid_argument, "realization needs at least one vertex");

    // columns as 0/1 vectors of length n; rows past the current vertex stay zero
    std::vector<std::vector<bool>> columns;
    auto zero_column = [&] { columns.emplace_back(n, false); };
    auto unit_column = [&](std::size_t row) {
        zero_column();
        columns.back()[row - 1] = true;
    };

    unit_column(1);  // A_1 = [1]
    if (n >= 2) {
        if (gamma.has_edge(1, 2)) unit_column(2);  // A_2 = Id
        else zero_column();                        // A_2 = [[1,0],[0,0]]
    }
    for (std::size_t j = 2; j < n; ++j) {
        const std::size_t incoming = j + 1;
        for (std::size_t i = 1; i <= j; ++i) {
            zero_column();
            if (gamma.has_edge(i, incoming)) {
                unit_column(i);
                unit_column(incoming);
            }
        }
        zero_column();  // counter reached j + 1
    }
    zero_column();  // final padding

    const FieldSpec f2 = FieldSpec::gf2();
    ExactMatrix a(f2, n, columns.size());
    const Scalar one = Scalar::one(f2);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (columns[c][r]) a.set(r, c, one);

    RealizationResult out{std::move(a), {}};
    for (std::size_t i = 1; i <= n; ++i) out.vertex_to_row.push_back(i);
    return out;
}

/// Number of columns realize() produces for a graph with n vertices and the
/// given number of edges. {v_1, v_2} is realized inside A_2 and costs no extra columns.
inline std::size_t realization_column_count(std::size_t n, std::size_t edges, bool edge_12)
{
    if (n == 1) return 2;
    std::size_t cols = 2 + 1;
    for (std::size_t j = 2; j < n; ++j) cols += j + 1;
    return cols + 2 * (edges - (edge_12 ? 1 : 0));
}

/// Row i and row j are adjacent in G(A) exactly when {v_i, v_j} is an edge.
inline bool verify_realization(const SimplicialGraph& gamma, const RealizationResult& r)
{
    const std::size_t n = gamma.vertex_count();
    if (r.matrix.rows() != n || r.vertex_to_row.size() != n) return false;
    const RowGraph g = two_row_graph(r.matrix, false);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            if (g.has_edge(r.vertex_to_row[i - 1], r.vertex_to_row[j - 1]) != gamma.has_edge(i, j)) return false;
    return true;
}

}  // namespace tworow
