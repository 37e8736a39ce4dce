#pragma once

// Simple undirected graphs on vertices 1..n, stored as adjacency bitsets.

#include "tworow/error.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tworow {

using Edge = std::pair<std::size_t, std::size_t>;

class Graph {
public:
    explicit Graph(std::size_t n = 0) : n_(n), stride_((n + 63) / 64), adj_(n * stride_, 0) {}

    Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n)
    {
        for (auto [i, j] : edges) add_edge(i, j);
    }

    static Graph complete(std::size_t n)
    {
        Graph g(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) g.add_edge(i, j);
        return g;
    }

    static Graph path(std::size_t n)
    {
        Graph g(n);
        for (std::size_t i = 1; i < n; ++i) g.add_edge(i, i + 1);
        return g;
    }

    static Graph cycle(std::size_t n)
    {
        Graph g = path(n);
        if (n >= 3) g.add_edge(n, 1);
        return g;
    }

    std::size_t vertex_count() const noexcept { return n_; }

    void add_edge(std::size_t i, std::size_t j) { set_edge(i, j, true); }
    void remove_edge(std::size_t i, std::size_t j) { set_edge(i, j, false); }

    bool has_edge(std::size_t i, std::size_t j) const
    {
        check_vertex(i);
        check_vertex(j);
        return adjacent0(i - 1, j - 1);
    }

    /// 0-based, unchecked.
    bool adjacent0(std::size_t u, std::size_t v) const noexcept
    {
        return (adj_[u * stride_ + v / 64] >> (v % 64)) & 1u;
    }

    /// Edges as 1-based (i, j) with i < j, in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = u + 1; v < n_; ++v)
                if (adjacent0(u, v)) out.emplace_back(u + 1, v + 1);
        return out;
    }

    std::size_t edge_count() const noexcept
    {
        std::size_t twice = 0;
        for (std::uint64_t w : adj_) twice += static_cast<std::size_t>(std::popcount(w));
        return twice / 2;
    }

    std::size_t degree(std::size_t i) const
    {
        check_vertex(i);
        std::size_t d = 0;
        for (std::size_t k = 0; k < stride_; ++k)
            d += static_cast<std::size_t>(std::popcount(adj_[(i - 1) * stride_ + k]));
        return d;
    }

    bool is_complete() const noexcept { return edge_count() == n_ * (n_ - (n_ > 0)) / 2; }

    Graph complement() const
    {
        Graph g(n_);
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = u + 1; v < n_; ++v)
                if (!adjacent0(u, v)) g.add_edge(u + 1, v + 1);
        return g;
    }

    bool is_connected() const
    {
        if (n_ == 0) return true;
        std::vector<bool> seen(n_, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n_; ++v) {
                if (!seen[v] && adjacent0(u, v)) {
                    seen[v] = true;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        return reached == n_;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    void check_vertex(std::size_t i) const
    {
        if (i < 1 || i > n_)
            throw Error(Errc::index_out_of_range, "vertex " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }

    void set_edge(std::size_t i, std::size_t j, bool on)
    {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw Error(Errc::invalid_argument, "self-loop at vertex " + std::to_string(i));
        const std::size_t u = i - 1, v = j - 1;
        const std::uint64_t bu = std::uint64_t{1} << (u % 64), bv = std::uint64_t{1} << (v % 64);
        std::uint64_t& wu = adj_[u * stride_ + v / 64];
        std::uint64_t& wv = adj_[v * stride_ + u / 64];
        wu = on ? (wu | bv) : (wu & ~bv);
        wv = on ? (wv | bu) : (wv & ~bu);
    }

    std::size_t n_;
    std::size_t stride_;
    std::vector<std::uint64_t> adj_;
};

/// Vertex-labelled simple graph Gamma, the input of the RAAG and realization modules.
using SimplicialGraph = Graph;

enum class GraphFlavor { plain, cyclic, opp, pairing };

inline const char* flavor_name(GraphFlavor f) noexcept
{
    switch (f) {
    case GraphFlavor::plain: return "plain";
    case GraphFlavor::cyclic: return "cyclic";
    case GraphFlavor::opp: return "opp";
    case GraphFlavor::pairing: return "pairing";
    }
    return "?";
}

/// A graph whose vertices are the rows of some matrix (or basis vectors).
class RowGraph : public Graph {
public:
    RowGraph(Graph g, GraphFlavor flavor) : Graph(std::move(g)), flavor_(flavor) {}

    GraphFlavor flavor() const noexcept { return flavor_; }

private:
    GraphFlavor flavor_;
};

}  // namespace tworow
