#pragma once

// Exact Hamiltonian path / cycle search and brute-force isomorphism for small graphs.
//
// Up to 20 vertices the search is a bitmask DP over vertex subsets; the
// witness is rebuilt greedily and is therefore the lexicographically smallest
// one. Larger graphs fall back to depth-first search with a connectivity cut,
// which returns the first witness found.

#include "tworow/error.hpp"
#include "tworow/graph.hpp"
#include "tworow/matrix.hpp"
#include "tworow/two_row.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tworow {

struct PathWitness {
    std::vector<std::size_t> order;  ///< 1-based vertices, each exactly once
    bool closed = false;

    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

inline bool is_valid_witness(const Graph& g, const PathWitness& w)
{
    const std::size_t n = g.vertex_count();
    if (w.order.size() != n) return false;
    std::vector<bool> seen(n + 1, false);
    for (std::size_t v : w.order) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!g.has_edge(w.order[i], w.order[i + 1])) return false;
    if (w.closed && (n < 3 || !g.has_edge(w.order.back(), w.order.front()))) return false;
    return true;
}

inline constexpr std::size_t dp_vertex_limit = 20;

namespace detail {

inline std::vector<std::uint32_t> small_adjacency(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && g.adjacent0(u, v)) adj[u] |= std::uint32_t{1} << v;
    return adj;
}

inline std::size_t lowest_bit(std::uint32_t x) noexcept { return static_cast<std::size_t>(std::countr_zero(x)); }

// reach[mask] = set of v in mask from which a path through exactly `mask` can
// start and end at a vertex of `finish` (0 = anywhere).
inline std::vector<std::uint32_t> path_table(const std::vector<std::uint32_t>& adj, std::uint32_t universe,
                                             std::uint32_t finish)
{
    std::vector<std::uint32_t> reach(std::size_t{1} << adj.size(), 0);
    for (std::uint32_t mask = 1; mask <= universe; ++mask) {
        if ((mask & ~universe) != 0) continue;
        std::uint32_t out = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const std::size_t v = lowest_bit(rest);
            const std::uint32_t bit = std::uint32_t{1} << v;
            if (mask == bit) {
                if (finish == 0 || (finish & bit)) out |= bit;
            } else if (adj[v] & reach[mask ^ bit]) {
                out |= bit;
            }
        }
        reach[mask] = out;
    }
    return reach;
}

inline std::optional<PathWitness> dp_path(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    const auto adj = small_adjacency(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const auto reach = path_table(adj, full, 0);
    if (reach[full] == 0) return std::nullopt;
    PathWitness w;
    std::uint32_t remaining = full;
    std::uint32_t candidates = reach[full];
    while (remaining) {
        const std::size_t v = lowest_bit(candidates);
        w.order.push_back(v + 1);
        remaining ^= std::uint32_t{1} << v;
        if (remaining) candidates = adj[v] & reach[remaining];
    }
    return w;
}

// Vertex 1 is the anchor; the table covers the other vertices and requires the
// path to finish next to the anchor.
inline std::optional<PathWitness> dp_cycle(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    const auto adj = small_adjacency(g);
    const std::uint32_t others = ((std::uint32_t{1} << n) - 1) & ~std::uint32_t{1};
    const auto reach = path_table(adj, others, adj[0]);
    std::uint32_t candidates = adj[0] & reach[others];
    if (candidates == 0) return std::nullopt;
    PathWitness w{{1}, true};
    std::uint32_t remaining = others;
    while (remaining) {
        const std::size_t v = lowest_bit(candidates);
        w.order.push_back(v + 1);
        remaining ^= std::uint32_t{1} << v;
        if (remaining) candidates = adj[v] & reach[remaining];
    }
    return w;
}

class Backtracker {
public:
    Backtracker(const Graph& g, bool closed) : g_(g), n_(g.vertex_count()), closed_(closed), used_(n_, false) {}

    std::optional<PathWitness> run()
    {
        const std::size_t starts = closed_ ? 1 : n_;
        for (std::size_t s = 0; s < starts; ++s) {
            path_.assign(1, s);
            used_.assign(n_, false);
            used_[s] = true;
            if (extend()) {
                PathWitness w;
                for (std::size_t v : path_) w.order.push_back(v + 1);
                w.closed = closed_;
                return w;
            }
        }
        return std::nullopt;
    }

private:
    bool extend()
    {
        const std::size_t cur = path_.back();
        if (path_.size() == n_) return !closed_ || g_.adjacent0(cur, path_.front());
        if (!remainder_reachable(cur)) return false;
        std::vector<std::size_t> next;
        for (std::size_t v = 0; v < n_; ++v)
            if (!used_[v] && g_.adjacent0(cur, v)) next.push_back(v);
        for (std::size_t v : next) {
            used_[v] = true;
            path_.push_back(v);
            if (extend()) return true;
            path_.pop_back();
            used_[v] = false;
        }
        return false;
    }

    // Every unused vertex must be reachable from the current end through unused vertices.
    bool remainder_reachable(std::size_t cur) const
    {
        std::vector<bool> seen(n_, false);
        std::vector<std::size_t> stack{cur};
        seen[cur] = true;
        std::size_t reached = 0, unused = 0;
        for (std::size_t v = 0; v < n_; ++v) unused += !used_[v];
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n_; ++v)
                if (!seen[v] && !used_[v] && g_.adjacent0(u, v)) {
                    seen[v] = true;
                    ++reached;
                    stack.push_back(v);
                }
        }
        return reached == unused;
    }

    const Graph& g_;
    std::size_t n_;
    bool closed_;
    std::vector<bool> used_;
    std::vector<std::size_t> path_;
};

inline std::optional<PathWitness> checked(const Graph& g, std::optional<PathWitness> w)
{
    if (w && !is_valid_witness(g, *w))
        throw Error(Errc::assertion_failure, "Hamiltonian search produced an invalid witness");
    return w;
}

}  // namespace detail

/// An open Hamiltonian path, lexicographically smallest when n <= 20.
inline std::optional<PathWitness> hamiltonian_path(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0) return PathWitness{};
    if (n <= dp_vertex_limit) return detail::checked(g, detail::dp_path(g));
    return detail::checked(g, detail::Backtracker(g, false).run());
}

/// A Hamiltonian cycle listed from vertex 1, lexicographically smallest when n <= 20.
inline std::optional<PathWitness> hamiltonian_cycle(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n < 3) throw Error(Errc::degenerate_graph, "Hamiltonian cycles need at least 3 vertices");
    if (n <= dp_vertex_limit) return detail::checked(g, detail::dp_cycle(g));
    return detail::checked(g, detail::Backtracker(g, true).run());
}

/// A row order sigma with permute_rows(a, sigma) (cyclically) square-traceable,
/// read off a Hamiltonian path of G(A) or cycle of G^c(A).
inline std::optional<RowPermutation> traceable_ordering(const ExactMatrix& a, bool cyclic)
{
    if (!a.is_square()) throw Error(Errc::not_square, "traceable ordering needs a square matrix");
    if (cyclic && a.rows() < 3) throw Error(Errc::degenerate_matrix, "cyclic traceability needs n >= 3");
    const RowGraph g = two_row_graph(a, cyclic);
    const auto w = cyclic ? hamiltonian_cycle(g) : hamiltonian_path(g);
    if (!w) return std::nullopt;
    return RowPermutation(w->order);
}

inline constexpr std::size_t isomorphism_vertex_limit = 10;

/// Brute-force search for an edge-preserving bijection.
inline bool graphs_isomorphic(const Graph& g, const Graph& h)
{
    const std::size_t n = g.vertex_count();
    if (n > isomorphism_vertex_limit || h.vertex_count() > isomorphism_vertex_limit)
        throw Error(Errc::size_bound, "isomorphism check limited to " + std::to_string(isomorphism_vertex_limit)
                                          + " vertices");
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<std::size_t> dg(n), dh(n);
    for (std::size_t v = 0; v < n; ++v) {
        dg[v] = g.degree(v + 1);
        dh[v] = h.degree(v + 1);
    }
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return false;
    }
    std::vector<std::size_t> image(n);
    std::vector<bool> taken(n, false);
    auto place = [&](auto&& self, std::size_t v) -> bool {
        if (v == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (taken[w] || dg[v] != dh[w]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) ok = g.adjacent0(u, v) == h.adjacent0(image[u], w);
            if (!ok) continue;
            taken[w] = true;
            image[v] = w;
            if (self(self, v + 1)) return true;
            taken[w] = false;
        }
        return false;
    };
    return place(place, 0);
}

}  // namespace tworow
