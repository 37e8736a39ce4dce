#pragma once

// The cup-product pairing q : V x V -> W of a right-angled Artin group A(Gamma),
// with V = H^1 and W = H^2 over a field F. In the dual vertex basis v_1*..v_n*
// and the edge basis e_1*..e_m*, q(v_i*, v_j*) is zero off the edges of Gamma
// and +-e_k* on the edge e_k = {v_i, v_j}. We fix the sign as + for i < j.

#include "tworow/error.hpp"
#include "tworow/field.hpp"
#include "tworow/graph.hpp"
#include "tworow/hamilton.hpp"
#include "tworow/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tworow {

class PairingTriple {
public:
    PairingTriple(const SimplicialGraph& gamma, FieldSpec spec) : spec_(spec), dim_v_(gamma.vertex_count())
    {
        edges_ = gamma.edges();
        for (std::size_t k = 0; k < edges_.size(); ++k) index_[edges_[k]] = k;
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t dim_v() const noexcept { return dim_v_; }
    std::size_t dim_w() const noexcept { return edges_.size(); }

    /// Edges of Gamma in lexicographic order; position k is the basis vector e_{k+1}*.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// 1-based index k of e_k* for the edge {i, j}, if it is one.
    std::optional<std::size_t> edge_index(std::size_t i, std::size_t j) const
    {
        if (i > j) std::swap(i, j);
        auto it = index_.find({i, j});
        if (it == index_.end()) return std::nullopt;
        return it->second + 1;
    }

    /// q(v_i*, v_j*) in the e* basis.
    std::vector<Scalar> pair_basis(std::size_t i, std::size_t j) const
    {
        if (i < 1 || i > dim_v_ || j < 1 || j > dim_v_)
            throw Error(Errc::index_out_of_range, "basis index outside 1.." + std::to_string(dim_v_));
        std::vector<Scalar> out(dim_w(), Scalar::zero(spec_));
        if (auto k = edge_index(i, j)) out[*k - 1] = i < j ? Scalar::one(spec_) : -Scalar::one(spec_);
        return out;
    }

private:
    FieldSpec spec_;
    std::size_t dim_v_;
    std::vector<Edge> edges_;
    std::map<Edge, std::size_t> index_;
};

inline PairingTriple cup_pairing(const SimplicialGraph& gamma, FieldSpec spec) { return PairingTriple(gamma, spec); }

/// q(u, w) = sum_{i<j} (u_i w_j - u_j w_i) q(v_i*, v_j*), collected in the e* basis.
inline std::vector<Scalar> pair_vectors(const PairingTriple& t, std::span<const Scalar> u, std::span<const Scalar> w)
{
    if (u.size() != t.dim_v() || w.size() != t.dim_v())
        throw Error(Errc::dimension_mismatch, "vectors of length " + std::to_string(u.size()) + " and "
                                                  + std::to_string(w.size()) + " for dim V = "
                                                  + std::to_string(t.dim_v()));
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!(u[i].spec() == t.spec()) || !(w[i].spec() == t.spec()))
            throw Error(Errc::field_mismatch, "vector entries must lie in " + t.spec().name());
    std::vector<Scalar> out;
    out.reserve(t.dim_w());
    for (auto [i, j] : t.edges()) out.push_back(u[i - 1] * w[j - 1] - u[j - 1] * w[i - 1]);
    return out;
}

inline bool is_zero_vector(const std::vector<Scalar>& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Rows w_i = sum_j a_i^j v_j* of an invertible matrix.
class BasisMatrix {
public:
    explicit BasisMatrix(ExactMatrix a) : a_(std::move(a))
    {
        if (!a_.is_square()) throw Error(Errc::singular_basis, "basis matrix must be square");
        if (determinant(a_).is_zero()) throw Error(Errc::singular_basis, "rows do not form a basis");
    }

    const ExactMatrix& matrix() const noexcept { return a_; }
    std::size_t size() const noexcept { return a_.rows(); }
    std::span<const Scalar> vector(std::size_t i) const { return a_.row(i - 1); }

private:
    ExactMatrix a_;
};

namespace detail {

inline void check_basis(const PairingTriple& t, const BasisMatrix& b)
{
    if (b.size() != t.dim_v())
        throw Error(Errc::dimension_mismatch, "basis of size " + std::to_string(b.size()) + " for dim V = "
                                                  + std::to_string(t.dim_v()));
    if (!(b.matrix().spec() == t.spec()))
        throw Error(Errc::field_mismatch, "basis over " + b.matrix().spec().name() + ", pairing over " + t.spec().name());
}

}  // namespace detail

/// Edge {i, j} iff q(w_i, w_j) != 0.
inline RowGraph basis_support_graph(const PairingTriple& t, const BasisMatrix& b)
{
    detail::check_basis(t, b);
    Graph g(b.size());
    for (std::size_t i = 1; i <= b.size(); ++i)
        for (std::size_t j = i + 1; j <= b.size(); ++j)
            if (!is_zero_vector(pair_vectors(t, b.vector(i), b.vector(j)))) g.add_edge(i, j);
    return RowGraph(std::move(g), GraphFlavor::pairing);
}

/// sigma with q(w_sigma(i), w_sigma(i+1)) != 0 for all i (and the closing pair
/// when cyclic). Cyclic orderings need at least three basis vectors.
inline std::optional<RowPermutation> basis_hamiltonian_witness(const PairingTriple& t, const BasisMatrix& b, bool cyclic)
{
    const RowGraph support = basis_support_graph(t, b);
    if (cyclic && support.vertex_count() < 3) return std::nullopt;
    const auto w = cyclic ? hamiltonian_cycle(support) : hamiltonian_path(support);
    if (!w) return std::nullopt;
    return RowPermutation(w->order);
}

/// Direct search on Gamma; cycles need at least three vertices.
inline std::optional<PathWitness> graph_hamiltonicity(const SimplicialGraph& gamma, bool cyclic)
{
    if (!cyclic) return hamiltonian_path(gamma);
    if (gamma.vertex_count() < 3) return std::nullopt;
    return hamiltonian_cycle(gamma);
}

}  // namespace tworow
