#pragma once

// Bit-packed GF(2) matrices: 64 columns per machine word, row-major.
// Used as the fast path behind determinant() and the two-row graph over gf2.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace tworow {

class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0)
    {
    }

    template <class Pred>
    static Gf2Matrix from_residues(std::size_t rows, std::size_t cols, Pred&& bit)
    {
        Gf2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (bit(r, c)) m.set(r, c, true);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const noexcept { return (word(r, c / 64) >> (c % 64)) & 1u; }

    void set(std::size_t r, std::size_t c, bool v) noexcept
    {
        std::uint64_t& w = words_[r * stride_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        w = v ? (w | bit) : (w & ~bit);
    }

    std::size_t rank() const
    {
        std::vector<std::uint64_t> m = words_;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            const std::size_t w = c / 64;
            const std::uint64_t bit = std::uint64_t{1} << (c % 64);
            std::size_t pivot = rank;
            while (pivot < rows_ && !(m[pivot * stride_ + w] & bit)) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t k = 0; k < stride_; ++k) std::swap(m[pivot * stride_ + k], m[rank * stride_ + k]);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank || !(m[r * stride_ + w] & bit)) continue;
                for (std::size_t k = w; k < stride_; ++k) m[r * stride_ + k] ^= m[rank * stride_ + k];
            }
            ++rank;
        }
        return rank;
    }

    /// 1 iff square and full rank.
    int determinant() const { return rows_ == cols_ && rank() == rows_ ? 1 : 0; }

    /// True iff some 2x2 minor of rows r1, r2 on consecutive columns (plus the
    /// (n, 1) wrap window when cyclic) is nonzero. 0-based rows.
    bool rows_adjacent(std::size_t r1, std::size_t r2, bool cyclic) const noexcept
    {
        if (cols_ < 2) return false;
        // bit c of (x & (y >> 1)) ^ ((x >> 1) & y) is the minor on columns (c, c+1).
        for (std::size_t k = 0; k < stride_; ++k) {
            const std::uint64_t x = word(r1, k);
            const std::uint64_t y = word(r2, k);
            const std::uint64_t xn = k + 1 < stride_ ? word(r1, k + 1) : 0;
            const std::uint64_t yn = k + 1 < stride_ ? word(r2, k + 1) : 0;
            const std::uint64_t xs = (x >> 1) | (xn << 63);
            const std::uint64_t ys = (y >> 1) | (yn << 63);
            std::uint64_t t = (x & ys) ^ (xs & y);
            // windows start at columns 0 .. cols-2
            const std::size_t base = k * 64;
            const std::size_t last_start = cols_ - 2;
            if (base > last_start) break;
            if (last_start - base < 63) t &= (std::uint64_t{1} << (last_start - base + 1)) - 1;
            if (t) return true;
        }
        if (cyclic) {
            const bool xl = get(r1, cols_ - 1), x0 = get(r1, 0);
            const bool yl = get(r2, cols_ - 1), y0 = get(r2, 0);
            if ((xl && y0) != (x0 && yl)) return true;
        }
        return false;
    }

private:
    std::uint64_t word(std::size_t r, std::size_t k) const noexcept { return words_[r * stride_ + k]; }

    std::size_t rows_;
    std::size_t cols_;
    std::size_t stride_;
    std::vector<std::uint64_t> words_;
};

}  // namespace tworow
