#pragma once

// Shared matrices, generators and brute-force oracles for the test suites.

#include "tworow/tworow.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace tworow::testing {

inline ExactMatrix worked_7x7(FieldSpec f = FieldSpec::gf2())
{
    return ExactMatrix::from_ints(f, {{1, 1, 1, 0, 0, 0, 1},
                                      {0, 1, 0, 1, 0, 0, 1},
                                      {1, 1, 1, 0, 1, 0, 1},
                                      {0, 1, 0, 0, 1, 0, 1},
                                      {1, 1, 1, 0, 0, 1, 0},
                                      {1, 0, 1, 0, 0, 0, 1},
                                      {1, 0, 0, 0, 1, 0, 1}});
}

inline ExactMatrix counterexample_3x3(FieldSpec f = FieldSpec::rationals())
{
    return ExactMatrix::from_ints(f, {{0, 1, 0}, {0, 0, 1}, {0, 1, 0}});
}

inline const FieldSpec& field_at(std::size_t k)
{
    static const FieldSpec fields[] = {FieldSpec::gf2(), FieldSpec::gfp(3), FieldSpec::gfp(5), FieldSpec::rationals()};
    return fields[k % 4];
}

/// Uniform residues over finite fields; small integers in [-3, 3] (sometimes over 2) over Q.
template <class Rng>
Scalar random_scalar(FieldSpec f, Rng& rng, double zero_bias = 0.0)
{
    if (zero_bias > 0 && std::bernoulli_distribution(zero_bias)(rng)) return Scalar::zero(f);
    if (f.is_finite()) {
        std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
        return Scalar::from_int(f, d(rng));
    }
    std::uniform_int_distribution<std::int64_t> num(-3, 3);
    std::uniform_int_distribution<int> half(0, 3);
    Scalar x = Scalar::from_int(f, num(rng));
    if (half(rng) == 0) x = x / Scalar::from_int(f, 2);
    return x;
}

template <class Rng>
ExactMatrix random_matrix(FieldSpec f, std::size_t m, std::size_t n, Rng& rng, double zero_bias = 0.0)
{
    ExactMatrix a(f, m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) a.set(r, c, random_scalar(f, rng, zero_bias));
    return a;
}

template <class Rng>
ExactMatrix random_invertible(FieldSpec f, std::size_t n, Rng& rng, double zero_bias = 0.0)
{
    for (;;) {
        ExactMatrix a = random_matrix(f, n, n, rng, zero_bias);
        if (!determinant(a).is_zero()) return a;
    }
}

/// The n x n binary matrix whose entry (r, c) is bit r*n + c of `bits`.
inline ExactMatrix binary_matrix(std::size_t n, std::uint64_t bits, FieldSpec f = FieldSpec::gf2())
{
    ExactMatrix a(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if ((bits >> (r * n + c)) & 1u) a.set(r, c, Scalar::one(f));
    return a;
}

/// Leibniz formula, independent of elimination.
inline Scalar leibniz_determinant(const ExactMatrix& a)
{
    const std::size_t n = a.rows();
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{1});
    Scalar total = Scalar::zero(a.spec());
    do {
        const RowPermutation sigma(image);
        Scalar term = Scalar::one(a.spec());
        for (std::size_t c = 0; c < n; ++c) term *= a(image[c] - 1, c);
        total += sigma.sign() > 0 ? term : -term;
    } while (std::next_permutation(image.begin(), image.end()));
    return total;
}

/// Direct definition: some consecutive (or wrapped) 2x2 minor on rows i, j is nonzero.
inline bool naive_adjacent(const ExactMatrix& a, std::size_t i, std::size_t j, bool cyclic)
{
    const std::size_t n = a.cols();
    auto minor_nonzero = [&](std::size_t c1, std::size_t c2) {
        return !(a.at(i, c1) * a.at(j, c2) - a.at(i, c2) * a.at(j, c1)).is_zero();
    };
    for (std::size_t k = 1; k < n; ++k)
        if (minor_nonzero(k, k + 1)) return true;
    return cyclic && n >= 2 && minor_nonzero(n, 1);
}

/// The labeled graph on n vertices whose edge set is given by the bits of `mask`,
/// edges taken in lexicographic order.
inline Graph labeled_graph(std::size_t n, std::uint64_t mask)
{
    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(i, j);
    return g;
}

template <class Rng>
Graph random_graph(std::size_t n, Rng& rng, double p = 0.5)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

/// Exhaustive search over orderings; n <= 8.
inline bool brute_force_hamiltonian(const Graph& g, bool cycle)
{
    const std::size_t n = g.vertex_count();
    if (cycle && n < 3) return false;
    if (n == 0) return true;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{1});
    do {
        bool ok = true;
        for (std::size_t k = 0; ok && k + 1 < n; ++k) ok = g.has_edge(order[k], order[k + 1]);
        if (ok && cycle) ok = g.has_edge(order.back(), order.front());
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

}  // namespace tworow::testing
