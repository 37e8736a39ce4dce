#pragma once

// The two-row graph G(A), its cyclic version G^c(A), and the null-connectedness
// graph G^opp(A). Rows i and j are adjacent in G(A) iff some 2x2 minor on
// consecutive columns is nonzero; G^c(A) also admits the (n, 1) window.

#include "tworow/error.hpp"
#include "tworow/gf2.hpp"
#include "tworow/graph.hpp"
#include "tworow/matrix.hpp"

#include <cstddef>
#include <string>

namespace tworow {

/// All consecutive-column minors of rows i, j vanish (and the wrap minor when cyclic).
inline bool null_connected(const ExactMatrix& a, std::size_t i, std::size_t j, bool cyclic)
{
    detail::check_row_pair(a, i, j);
    const std::size_t n = a.cols();
    for (std::size_t c = 0; c + 1 < n; ++c)
        if (detail::minor2_nonzero(a, i - 1, j - 1, c, c + 1)) return false;
    if (cyclic && n >= 2 && detail::minor2_nonzero(a, i - 1, j - 1, n - 1, 0)) return false;
    return true;
}

namespace detail {

inline void check_graph_shape(const ExactMatrix& a)
{
    if (a.rows() > 1 && a.cols() < 2)
        throw Error(Errc::degenerate_matrix, "two-row graph needs at least two columns");
}

}  // namespace detail

/// G(A) (cyclic = false) or G^c(A). Accepts non-square matrices.
inline RowGraph two_row_graph(const ExactMatrix& a, bool cyclic)
{
    detail::check_graph_shape(a);
    const std::size_t m = a.rows();
    Graph g(m);
    if (a.spec().kind() == FieldKind::gf2) {
        const auto packed = Gf2Matrix::from_residues(m, a.cols(), [&](std::size_t r, std::size_t c) {
            return a(r, c).residue() != 0;
        });
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = u + 1; v < m; ++v)
                if (packed.rows_adjacent(u, v, cyclic)) g.add_edge(u + 1, v + 1);
    } else {
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t j = i + 1; j <= m; ++j)
                if (!null_connected(a, i, j, cyclic)) g.add_edge(i, j);
    }
    return RowGraph(std::move(g), cyclic ? GraphFlavor::cyclic : GraphFlavor::plain);
}

/// Null-connectedness as the edge relation: the complement of two_row_graph in K_m.
inline RowGraph opp_graph(const ExactMatrix& a, bool cyclic)
{
    return RowGraph(two_row_graph(a, cyclic).complement(), GraphFlavor::opp);
}

/// Every consecutive row pair (i, i+1) has a nonzero consecutive-column minor.
inline bool is_square_traceable(const ExactMatrix& a)
{
    if (!a.is_square()) throw Error(Errc::not_square, "square-traceability needs a square matrix");
    for (std::size_t i = 1; i < a.rows(); ++i)
        if (null_connected(a, i, i + 1, false)) return false;
    return true;
}

/// Rows 1..n in cyclic order form a cycle in G^c(A).
inline bool is_cyclically_square_traceable(const ExactMatrix& a)
{
    if (!a.is_square()) throw Error(Errc::not_square, "square-traceability needs a square matrix");
    const std::size_t n = a.rows();
    if (n < 3) throw Error(Errc::degenerate_matrix, "cyclic traceability needs n >= 3");
    for (std::size_t i = 1; i <= n; ++i)
        if (null_connected(a, i, i % n + 1, true)) return false;
    return true;
}

}  // namespace tworow
