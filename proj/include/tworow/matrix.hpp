#pragma once

// Exact dense matrices, row permutations, and the 2x2 minors the two-row
// graph is built from.
//
// Indexing: operator()(r, c) is 0-based and unchecked, for inner loops. Every
// other public entry point uses 1-based row/column numbers, so that a_i^j is
// at(i, j) and rows print as r1..rm.

#include "tworow/error.hpp"
#include "tworow/field.hpp"
#include "tworow/gf2.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tworow {

class ExactMatrix {
public:
    /// m x n zero matrix.
    ExactMatrix(FieldSpec spec, std::size_t m, std::size_t n)
        : spec_(spec), rows_(m), cols_(n), entries_(m * n, Scalar::zero(spec))
    {
        if (m == 0 || n == 0) throw Error(Errc::invalid_argument, "matrix dimensions must be positive");
    }

    ExactMatrix(FieldSpec spec, const std::vector<std::vector<Scalar>>& rows)
        : ExactMatrix(spec, rows.size(), rows.empty() ? 0 : rows.front().size())
    {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (rows[r].size() != cols_)
                throw Error(Errc::size_mismatch, "row " + std::to_string(r + 1) + " has "
                                                     + std::to_string(rows[r].size()) + " entries, expected "
                                                     + std::to_string(cols_));
            for (std::size_t c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
        }
    }

    static ExactMatrix from_ints(FieldSpec spec, std::initializer_list<std::initializer_list<long long>> rows)
    {
        std::vector<std::vector<Scalar>> data;
        for (const auto& row : rows) {
            auto& out = data.emplace_back();
            for (long long v : row) out.push_back(Scalar::from_int(spec, v));
        }
        return ExactMatrix(spec, data);
    }

    static ExactMatrix identity(FieldSpec spec, std::size_t n)
    {
        ExactMatrix id(spec, n, n);
        for (std::size_t i = 0; i < n; ++i) id.set(i, i, Scalar::one(spec));
        return id;
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }

    /// a_i^j with 1-based indices.
    const Scalar& at(std::size_t i, std::size_t j) const
    {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw Error(Errc::index_out_of_range,
                        "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside "
                            + std::to_string(rows_) + "x" + std::to_string(cols_));
        return (*this)(i - 1, j - 1);
    }

    /// 0-based store; the value must live in this matrix's field.
    void set(std::size_t r, std::size_t c, Scalar value)
    {
        if (!(value.spec() == spec_))
            throw Error(Errc::field_mismatch, "entry in " + value.spec().name() + " for a " + spec_.name() + " matrix");
        entries_[r * cols_ + c] = std::move(value);
    }

    std::span<const Scalar> row(std::size_t r) const noexcept { return {entries_.data() + r * cols_, cols_}; }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// sigma in S_n stored as its 1-based image list: operator()(i) = sigma(i).
class RowPermutation {
public:
    explicit RowPermutation(std::vector<std::size_t> image) : image_(std::move(image))
    {
        std::vector<bool> seen(image_.size(), false);
        for (std::size_t v : image_) {
            if (v < 1 || v > image_.size() || seen[v - 1])
                throw Error(Errc::invalid_argument, "image is not a permutation of 1.." + std::to_string(image_.size()));
            seen[v - 1] = true;
        }
    }

    static RowPermutation identity(std::size_t n)
    {
        std::vector<std::size_t> image(n);
        std::iota(image.begin(), image.end(), std::size_t{1});
        return RowPermutation(std::move(image));
    }

    std::size_t size() const noexcept { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_.at(i - 1); }
    const std::vector<std::size_t>& image() const noexcept { return image_; }
    bool is_identity() const noexcept
    {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i] != i + 1) return false;
        return true;
    }

    /// +1 or -1, by cycle decomposition.
    int sign() const
    {
        std::vector<bool> visited(image_.size(), false);
        int s = 1;
        for (std::size_t start = 0; start < image_.size(); ++start) {
            if (visited[start]) continue;
            std::size_t len = 0;
            for (std::size_t v = start; !visited[v]; v = image_[v] - 1) {
                visited[v] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    RowPermutation inverse() const
    {
        std::vector<std::size_t> inv(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i] - 1] = i + 1;
        return RowPermutation(std::move(inv));
    }

    friend bool operator==(const RowPermutation&, const RowPermutation&) = default;

private:
    std::vector<std::size_t> image_;
};

namespace detail {

inline void check_row_pair(const ExactMatrix& a, std::size_t i, std::size_t j)
{
    if (i < 1 || i > a.rows() || j < 1 || j > a.rows() || i == j)
        throw Error(Errc::index_out_of_range, "row pair (" + std::to_string(i) + "," + std::to_string(j)
                                                  + ") invalid for " + std::to_string(a.rows()) + " rows");
}

/// det of [[a(r1,c1), a(r1,c2)], [a(r2,c1), a(r2,c2)]], 0-based.
inline Scalar minor2(const ExactMatrix& a, std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2)
{
    return a(r1, c1) * a(r2, c2) - a(r1, c2) * a(r2, c1);
}

inline bool minor2_nonzero(const ExactMatrix& a, std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2)
{
    if (a.spec().is_finite()) {
        std::uint64_t p = a.spec().characteristic();
        std::uint64_t lhs = std::uint64_t{a(r1, c1).residue()} * a(r2, c2).residue() % p;
        std::uint64_t rhs = std::uint64_t{a(r1, c2).residue()} * a(r2, c1).residue() % p;
        return lhs != rhs;
    }
    return a(r1, c1).rational() * a(r2, c2).rational() != a(r1, c2).rational() * a(r2, c1).rational();
}

}  // namespace detail

/// det A_{i,j}^k = a_i^k a_j^{k+1} - a_i^{k+1} a_j^k for rows i != j and 1 <= k < n.
inline Scalar consecutive_minor(const ExactMatrix& a, std::size_t i, std::size_t j, std::size_t k)
{
    detail::check_row_pair(a, i, j);
    if (k < 1 || k >= a.cols())
        throw Error(Errc::index_out_of_range, "column window " + std::to_string(k) + " needs 1 <= k < "
                                                  + std::to_string(a.cols()));
    return detail::minor2(a, i - 1, j - 1, k - 1, k);
}

/// The wraparound minor on columns (n, 1): a_i^n a_j^1 - a_i^1 a_j^n.
inline Scalar wrap_minor(const ExactMatrix& a, std::size_t i, std::size_t j)
{
    detail::check_row_pair(a, i, j);
    if (a.cols() < 2) throw Error(Errc::index_out_of_range, "wrap minor needs at least two columns");
    return detail::minor2(a, i - 1, j - 1, a.cols() - 1, 0);
}

/// Row i of the result is row sigma(i) of a.
inline ExactMatrix permute_rows(const ExactMatrix& a, const RowPermutation& sigma)
{
    if (sigma.size() != a.rows())
        throw Error(Errc::size_mismatch, "permutation of size " + std::to_string(sigma.size()) + " for "
                                             + std::to_string(a.rows()) + " rows");
    ExactMatrix out(a.spec(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(sigma(r + 1) - 1, c));
    return out;
}

namespace detail {

inline Scalar determinant_gfp(const ExactMatrix& a)
{
    const std::size_t n = a.rows();
    const std::uint64_t p = a.spec().characteristic();
    std::vector<std::uint64_t> m(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r * n + c] = a(r, c).residue();

    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot * n + col] == 0) ++pivot;
        if (pivot == n) return Scalar::zero(a.spec());
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
            det = (p - det) % p;
        }
        const std::uint64_t pv = m[col * n + col];
        det = det * pv % p;
        const std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(pv), static_cast<std::uint32_t>(p));
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint64_t f = m[r * n + col] * inv % p;
            if (f == 0) continue;
            for (std::size_t c = col; c < n; ++c)
                m[r * n + c] = (m[r * n + c] + (p - f) * m[col * n + c]) % p;
        }
    }
    return Scalar::from_int(a.spec(), static_cast<std::int64_t>(det));
}

// Rows are cleared of denominators first, then Bareiss runs over the integers.
inline Scalar determinant_rational(const ExactMatrix& a)
{
    const std::size_t n = a.rows();
    std::vector<BigInt> m(n * n);
    BigInt scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < n; ++c) l = boost::multiprecision::lcm(l, BigInt(denominator(a(r, c).rational())));
        scale *= l;
        for (std::size_t c = 0; c < n; ++c) {
            const auto& q = a(r, c).rational();
            m[r * n + c] = numerator(q) * (l / denominator(q));
        }
    }

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot * n + k] == 0) ++pivot;
            if (pivot == n) return Scalar::zero(a.spec());
            for (std::size_t c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[k * n + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    BigInt det = m[n * n - 1];
    if (sign < 0) det = -det;
    return Scalar::from_fraction(std::move(det), std::move(scale));
}

}  // namespace detail

inline Scalar determinant(const ExactMatrix& a)
{
    if (!a.is_square())
        throw Error(Errc::not_square, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
    switch (a.spec().kind()) {
    case FieldKind::gf2: return Scalar::from_int(a.spec(), Gf2Matrix::from_residues(a.rows(), a.cols(), [&](std::size_t r, std::size_t c) {
                                                    return a(r, c).residue() != 0;
                                                }).determinant());
    case FieldKind::gfp: return detail::determinant_gfp(a);
    case FieldKind::rational: return detail::determinant_rational(a);
    }
    return Scalar::zero(a.spec());
}

/// Rank by elimination over the matrix field.
inline std::size_t rank(const ExactMatrix& a)
{
    std::vector<std::vector<Scalar>> m;
    for (std::size_t r = 0; r < a.rows(); ++r) m.emplace_back(a.row(r).begin(), a.row(r).end());
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        std::swap(m[pivot], m[rank]);
        const Scalar inv = m[rank][col].inverse();
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (m[r][col].is_zero()) continue;
            const Scalar f = m[r][col] * inv;
            for (std::size_t c = col; c < a.cols(); ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// Coefficient of e_i ^ e_j in (A e_k) ^ (A e_{k+1}), i.e. in Lambda^2 A applied to
/// e_k ^ e_{k+1}. Expanded from the column vectors rather than read off a minor.
inline Scalar alternating_square_coefficient(const ExactMatrix& a, std::size_t k, std::size_t i, std::size_t j)
{
    if (!a.is_square())
        throw Error(Errc::not_square, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
    if (k < 1 || k >= a.cols() || i < 1 || j > a.rows() || i >= j)
        throw Error(Errc::index_out_of_range, "need 1 <= k < n and 1 <= i < j <= n");
    // (sum_p a_p^k e_p) ^ (sum_q a_q^{k+1} e_q): only (p,q) = (i,j) and (j,i) reach
    // e_i ^ e_j, the latter through e_j ^ e_i = -e_i ^ e_j.
    return a.at(i, k) * a.at(j, k + 1) - a.at(j, k) * a.at(i, k + 1);
}

}  // namespace tworow
