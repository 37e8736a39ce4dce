#pragma once

// 1-blocks, the block partition of a matrix, 1-tracks, and the determinant
// recovered as a sum over complete 1-tracks.
//
// A 1-block is a submatrix M_I^{s,t} with |I| >= 2 rows and >= 2 consecutive
// columns, all entries nonzero, whose rows induce a connected subgraph of
// G^opp(A), and which is maximal with these properties. In cyclic mode the
// columns are read around a circle and G^opp is taken for G^c.
//
// A complete 1-track is an abutting run of members (nonzero 1x1 entries or
// square 1-minors inside a single 1-block) covering all columns, with no two
// neighbouring members inside a common block. Every string of nonzero entries
// (a_{sigma(1)}^1, ..., a_{sigma(n)}^n) belongs to exactly one such track, and a
// track that contains a 1-minor contributes zero to det(A).

#include "tworow/error.hpp"
#include "tworow/matrix.hpp"
#include "tworow/two_row.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace tworow {

/// A run of columns: 1-based start and length. Cyclic runs may wrap past column n.
struct ColumnInterval {
    std::size_t start = 1;
    std::size_t len = 0;

    /// 1-based column number of the k-th column of the run (k from 0), wrapping modulo n.
    std::size_t column(std::size_t k, std::size_t n) const noexcept { return (start - 1 + k) % n + 1; }
    std::size_t last(std::size_t n) const noexcept { return column(len - 1, n); }

    bool contains(std::size_t col, std::size_t n) const noexcept
    {
        return (col + n - start) % n < len;
    }

    friend auto operator<=>(const ColumnInterval&, const ColumnInterval&) = default;
};

struct OneBlock {
    std::vector<std::size_t> rows;  ///< sorted, 1-based
    ColumnInterval cols;
    bool cyclic = false;

    bool contains(std::size_t row, std::size_t col, std::size_t n) const
    {
        return cols.contains(col, n) && std::binary_search(rows.begin(), rows.end(), row);
    }

    ExactMatrix submatrix(const ExactMatrix& a) const
    {
        ExactMatrix out(a.spec(), rows.size(), cols.len);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t k = 0; k < cols.len; ++k) out.set(r, k, a(rows[r] - 1, cols.column(k, a.cols()) - 1));
        return out;
    }

    friend auto operator<=>(const OneBlock&, const OneBlock&) = default;
};

struct Cell {
    std::size_t row;
    std::size_t col;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct BlockPartition {
    std::vector<OneBlock> blocks;
    std::vector<Cell> nonzero_singletons;  ///< row-major order
    std::vector<Cell> zero_singletons;     ///< row-major order
};

namespace detail {

inline void check_block_shape(const ExactMatrix& a)
{
    if (a.cols() < 2) throw Error(Errc::degenerate_matrix, "1-blocks need at least two columns");
}

// Connected components of `g` restricted to the vertex subset `members` (0-based).
inline std::vector<std::vector<std::size_t>> components_within(const Graph& g, const std::vector<std::size_t>& members)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> in_set(g.vertex_count(), false), seen(g.vertex_count(), false);
    for (std::size_t v : members) in_set[v] = true;
    for (std::size_t root : members) {
        if (seen[root]) continue;
        auto& comp = out.emplace_back();
        std::vector<std::size_t> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (std::size_t v : members)
                if (!seen[v] && g.adjacent0(u, v)) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

}  // namespace detail

/// All maximal 1-blocks, sorted by (smallest row, start column).
///
/// For every column run C, the rows nonzero across C are split into connected
/// components of G^opp; each component with two or more rows is a candidate
/// that no other row can join without leaving the run. A candidate is maximal
/// iff every one-column extension of C hits a zero in one of its rows.
inline std::vector<OneBlock> find_one_blocks(const ExactMatrix& a, bool cyclic)
{
    detail::check_block_shape(a);
    const std::size_t m = a.rows(), n = a.cols();
    const Graph opp = opp_graph(a, cyclic);

    auto all_nonzero = [&](const std::vector<std::size_t>& rows, std::size_t col0) {
        return std::all_of(rows.begin(), rows.end(), [&](std::size_t r) { return !a(r, col0).is_zero(); });
    };

    std::vector<OneBlock> blocks;
    const std::size_t starts = cyclic ? n : n - 1;
    for (std::size_t s = 0; s < starts; ++s) {
        std::vector<std::size_t> live(m);
        std::iota(live.begin(), live.end(), std::size_t{0});
        std::erase_if(live, [&](std::size_t r) { return a(r, s).is_zero(); });
        const std::size_t max_len = cyclic ? n : n - s;
        for (std::size_t len = 2; len <= max_len && live.size() >= 2; ++len) {
            const std::size_t last = (s + len - 1) % n;
            std::erase_if(live, [&](std::size_t r) { return a(r, last).is_zero(); });
            if (live.size() < 2) break;
            // a full-circle run is the same column set from every start
            if (len == n && cyclic && s != 0) break;

            for (auto& comp : detail::components_within(opp, live)) {
                if (comp.size() < 2) continue;
                bool maximal = true;
                if (len < n) {
                    if (cyclic || s > 0) {
                        const std::size_t left = (s + n - 1) % n;
                        if (all_nonzero(comp, left)) maximal = false;
                    }
                    if (cyclic || s + len < n) {
                        const std::size_t right = (s + len) % n;
                        if (all_nonzero(comp, right)) maximal = false;
                    }
                }
                if (!maximal) continue;
                OneBlock b;
                for (std::size_t r : comp) b.rows.push_back(r + 1);
                b.cols = ColumnInterval{s + 1, len};
                b.cyclic = cyclic;
                blocks.push_back(std::move(b));
            }
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const OneBlock& x, const OneBlock& y) {
        if (x.rows.front() != y.rows.front()) return x.rows.front() < y.rows.front();
        if (x.cols.start != y.cols.start) return x.cols.start < y.cols.start;
        return x < y;
    });
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    return blocks;
}

/// Cell -> block lookup for a fixed block list.
class BlockMap {
public:
    BlockMap(const ExactMatrix& a, std::vector<OneBlock> blocks, bool cyclic)
        : rows_(a.rows()), cols_(a.cols()), cyclic_(cyclic), blocks_(std::move(blocks)), owner_(rows_ * cols_, -1)
    {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (std::size_t r : blocks_[b].rows)
                for (std::size_t k = 0; k < blocks_[b].cols.len; ++k) {
                    int& slot = owner_[(r - 1) * cols_ + blocks_[b].cols.column(k, cols_) - 1];
                    if (slot != -1)
                        throw Error(Errc::assertion_failure, "1-blocks overlap at (" + std::to_string(r) + ","
                                                                 + std::to_string(blocks_[b].cols.column(k, cols_))
                                                                 + ")");
                    slot = static_cast<int>(b);
                }
    }

    static BlockMap build(const ExactMatrix& a, bool cyclic) { return BlockMap(a, find_one_blocks(a, cyclic), cyclic); }

    bool cyclic() const noexcept { return cyclic_; }
    const std::vector<OneBlock>& blocks() const noexcept { return blocks_; }

    /// Index into blocks() of the block owning (r, c), 0-based cell, or -1.
    int owner0(std::size_t r, std::size_t c) const noexcept { return owner_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    bool cyclic_;
    std::vector<OneBlock> blocks_;
    std::vector<int> owner_;
};

inline BlockPartition block_partition(const ExactMatrix& a, bool cyclic)
{
    const BlockMap map = BlockMap::build(a, cyclic);
    BlockPartition part;
    part.blocks = map.blocks();
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a(r, c).is_zero()) part.zero_singletons.push_back({r + 1, c + 1});
            else if (map.owner0(r, c) < 0) part.nonzero_singletons.push_back({r + 1, c + 1});
        }
    return part;
}

/// One member of a 1-track: a square minor on rows `rows` (sorted) and columns
/// `cols`. A single row means a nonzero 1x1 entry.
struct TrackMember {
    std::vector<std::size_t> rows;
    ColumnInterval cols;

    bool is_one_minor() const noexcept { return rows.size() >= 2; }

    friend auto operator<=>(const TrackMember&, const TrackMember&) = default;
};

/// Members are listed left to right; cyclic tracks start with the member covering column 1.
struct OneTrack {
    std::vector<TrackMember> members;
    bool cyclic = false;

    std::size_t column_count() const noexcept
    {
        std::size_t total = 0;
        for (const auto& m : members) total += m.cols.len;
        return total;
    }

    bool has_one_minor() const noexcept
    {
        return std::any_of(members.begin(), members.end(), [](const TrackMember& m) { return m.is_one_minor(); });
    }

    friend auto operator<=>(const OneTrack&, const OneTrack&) = default;
};

/// The entry string (a_{sigma(1)}^1, ..., a_{sigma(n)}^n) of a permutation.
struct TrackString {
    RowPermutation sigma;
    std::vector<Scalar> entries;
};

namespace detail {

inline void check_string_shape(const ExactMatrix& a, const RowPermutation& sigma)
{
    if (!a.is_square()) throw Error(Errc::not_square, "strings need a square matrix");
    if (sigma.size() != a.rows())
        throw Error(Errc::size_mismatch, "permutation of size " + std::to_string(sigma.size()) + " for "
                                             + std::to_string(a.rows()) + " rows");
}

}  // namespace detail

inline TrackString string_of(const ExactMatrix& a, const RowPermutation& sigma)
{
    detail::check_string_shape(a, sigma);
    TrackString s{sigma, {}};
    for (std::size_t c = 1; c <= a.cols(); ++c) {
        const Scalar& e = a(sigma(c) - 1, c - 1);
        if (e.is_zero())
            throw Error(Errc::zero_entry_in_string, "a_" + std::to_string(sigma(c)) + "^" + std::to_string(c) + " = 0");
        s.entries.push_back(e);
    }
    return s;
}

/// The canonical complete track of the string of sigma: scan columns left to
/// right, extending the current member while consecutive string entries sit in
/// the same 1-block, and cutting otherwise. Runs of length one are 1x1 members.
inline OneTrack track_of_string(const BlockMap& blocks, const ExactMatrix& a, const RowPermutation& sigma)
{
    (void)string_of(a, sigma);
    const std::size_t n = a.cols();
    std::vector<int> owner(n);
    for (std::size_t c = 0; c < n; ++c) owner[c] = blocks.owner0(sigma(c + 1) - 1, c);

    OneTrack track;
    track.cyclic = blocks.cyclic();
    auto emit = [&](std::size_t first, std::size_t len) {
        TrackMember mem;
        for (std::size_t k = 0; k < len; ++k) mem.rows.push_back(sigma((first + k) % n + 1));
        std::sort(mem.rows.begin(), mem.rows.end());
        mem.cols = ColumnInterval{first + 1, len};
        track.members.push_back(std::move(mem));
    };
    auto same_run = [&](std::size_t c, std::size_t next) { return owner[c] >= 0 && owner[c] == owner[next]; };

    if (!blocks.cyclic()) {
        for (std::size_t c = 0; c < n;) {
            std::size_t len = 1;
            while (c + len < n && same_run(c, c + len)) ++len;
            emit(c, len);
            c += len;
        }
        return track;
    }

    // Cyclic: begin at a column that starts a run, walk once around, then rotate
    // so the member covering column 1 comes first.
    std::size_t begin = n;
    for (std::size_t c = 0; c < n && begin == n; ++c)
        if (!same_run((c + n - 1) % n, c)) begin = c;
    if (begin == n) {
        emit(0, n);
        return track;
    }
    for (std::size_t done = 0; done < n;) {
        const std::size_t c = (begin + done) % n;
        std::size_t len = 1;
        while (done + len < n && same_run((c + len - 1) % n, (c + len) % n)) ++len;
        emit(c, len);
        done += len;
    }
    auto first = std::find_if(track.members.begin(), track.members.end(),
                              [&](const TrackMember& m) { return m.cols.contains(1, n); });
    std::rotate(track.members.begin(), first, track.members.end());
    return track;
}

inline OneTrack track_of_string(const ExactMatrix& a, const RowPermutation& sigma, bool cyclic)
{
    detail::check_string_shape(a, sigma);
    return track_of_string(BlockMap::build(a, cyclic), a, sigma);
}

namespace detail {

// Block index shared by every cell of a member, or -1 when the member is a
// 1x1 entry outside all blocks. Throws when the member is not a valid track member.
inline int member_block(const BlockMap& blocks, const ExactMatrix& a, const TrackMember& mem)
{
    const std::size_t n = a.cols();
    if (mem.rows.size() != mem.cols.len || mem.cols.len == 0 || mem.cols.start < 1 || mem.cols.start > n
        || mem.cols.len > n)
        throw Error(Errc::invalid_track, "track members must be square minors inside the matrix");
    if (!blocks.cyclic() && mem.cols.start - 1 + mem.cols.len > n)
        throw Error(Errc::invalid_track, "non-cyclic member wraps past column n");
    for (std::size_t k = 0; k < mem.rows.size(); ++k) {
        if (mem.rows[k] < 1 || mem.rows[k] > a.rows() || (k > 0 && mem.rows[k] <= mem.rows[k - 1]))
            throw Error(Errc::invalid_track, "member rows must be distinct, sorted and in range");
    }
    if (mem.rows.size() == 1) {
        const std::size_t r = mem.rows[0] - 1, c = mem.cols.start - 1;
        if (a(r, c).is_zero()) throw Error(Errc::invalid_track, "1x1 member on a zero entry");
        return blocks.owner0(r, c);
    }
    const int b = blocks.owner0(mem.rows[0] - 1, mem.cols.start - 1);
    for (std::size_t r : mem.rows)
        for (std::size_t k = 0; k < mem.cols.len; ++k)
            if (b < 0 || blocks.owner0(r - 1, mem.cols.column(k, n) - 1) != b)
                throw Error(Errc::invalid_track, "1-minor not contained in a single 1-block");
    return b;
}

inline void validate_track(const BlockMap& blocks, const ExactMatrix& a, const OneTrack& t)
{
    const std::size_t n = a.cols();
    if (t.cyclic != blocks.cyclic()) throw Error(Errc::invalid_track, "track and block map disagree on cyclicity");
    if (t.members.empty()) throw Error(Errc::incomplete_track, "empty track");
    std::vector<int> owner;
    for (const auto& mem : t.members) owner.push_back(member_block(blocks, a, mem));
    if (!t.cyclic && t.members.front().cols.start != 1)
        throw Error(Errc::incomplete_track, "track does not start at column 1");
    for (std::size_t i = 0; i + 1 < t.members.size(); ++i) {
        const auto& cur = t.members[i].cols;
        if (t.members[i + 1].cols.start != cur.last(n) % n + 1)
            throw Error(Errc::invalid_track, "members do not abut");
        if (owner[i] >= 0 && owner[i] == owner[i + 1])
            throw Error(Errc::invalid_track, "neighbouring members share a 1-block");
    }
    if (t.column_count() != n)
        throw Error(Errc::incomplete_track,
                    "track covers " + std::to_string(t.column_count()) + " of " + std::to_string(n) + " columns");
    if (t.cyclic && t.members.size() > 1) {
        if (t.members.back().cols.last(n) % n + 1 != t.members.front().cols.start)
            throw Error(Errc::invalid_track, "cyclic track does not close up");
        if (owner.back() >= 0 && owner.back() == owner.front())
            throw Error(Errc::invalid_track, "first and last members share a 1-block");
    }
}

}  // namespace detail

/// Sum of sgn(sigma) * prod_i a_{sigma(i)}^i over all strings whose entries
/// each lie in some member of `track`, enumerated member by member.
inline Scalar track_sum(const BlockMap& blocks, const ExactMatrix& a, const OneTrack& track)
{
    if (!a.is_square()) throw Error(Errc::not_square, "track sums need a square matrix");
    detail::validate_track(blocks, a, track);
    const std::size_t n = a.cols();

    std::vector<std::size_t> image(n, 0);  // column (0-based) -> row (1-based)
    std::vector<bool> used(a.rows() + 1, false);
    Scalar total = Scalar::zero(a.spec());

    auto recurse = [&](auto&& self, std::size_t member_index) -> void {
        if (member_index == track.members.size()) {
            const RowPermutation sigma(image);
            Scalar prod = Scalar::one(a.spec());
            for (std::size_t c = 0; c < n; ++c) prod *= a(image[c] - 1, c);
            total += sigma.sign() > 0 ? prod : -prod;
            return;
        }
        const TrackMember& mem = track.members[member_index];
        if (std::any_of(mem.rows.begin(), mem.rows.end(), [&](std::size_t r) { return used[r]; })) return;
        std::vector<std::size_t> order = mem.rows;
        for (std::size_t r : order) used[r] = true;
        do {
            for (std::size_t k = 0; k < order.size(); ++k) image[mem.cols.column(k, n) - 1] = order[k];
            self(self, member_index + 1);
        } while (std::next_permutation(order.begin(), order.end()));
        for (std::size_t r : order) used[r] = false;
    };
    recurse(recurse, 0);
    return total;
}

inline Scalar track_sum(const ExactMatrix& a, const OneTrack& track)
{
    if (!a.is_square()) throw Error(Errc::not_square, "track sums need a square matrix");
    return track_sum(BlockMap::build(a, track.cyclic), a, track);
}

inline constexpr std::size_t default_enumeration_bound = 8;

/// Calls visit(sigma) for every permutation whose string has no zero entry,
/// in lexicographic order of the image list.
template <class Visit>
void for_each_nonzero_string(const ExactMatrix& a, Visit&& visit)
{
    const std::size_t n = a.cols();
    std::vector<std::size_t> image(n);
    std::vector<bool> used(n + 1, false);
    auto recurse = [&](auto&& self, std::size_t c) -> void {
        if (c == n) {
            visit(RowPermutation(image));
            return;
        }
        for (std::size_t r = 1; r <= n; ++r) {
            if (used[r] || a(r - 1, c).is_zero()) continue;
            used[r] = true;
            image[c] = r;
            self(self, c + 1);
            used[r] = false;
        }
    };
    recurse(recurse, 0);
}

struct TrackContribution {
    OneTrack track;
    Scalar sum;
    std::size_t string_count;
};

/// Distinct canonical tracks of all nonzero strings, each with its track_sum.
inline std::vector<TrackContribution> complete_tracks(const ExactMatrix& a, bool cyclic,
                                                      std::size_t bound = default_enumeration_bound)
{
    if (!a.is_square()) throw Error(Errc::not_square, "track enumeration needs a square matrix");
    if (a.rows() > bound)
        throw Error(Errc::size_bound, "n = " + std::to_string(a.rows()) + " exceeds the enumeration bound "
                                          + std::to_string(bound));
    if (a.cols() < 2) {
        // a 1x1 matrix has a single string and no blocks
        std::vector<TrackContribution> out;
        if (!a(0, 0).is_zero())
            out.push_back({OneTrack{{TrackMember{{1}, ColumnInterval{1, 1}}}, cyclic}, a(0, 0), 1});
        return out;
    }
    const BlockMap blocks = BlockMap::build(a, cyclic);
    std::map<OneTrack, std::size_t> counts;
    for_each_nonzero_string(a, [&](const RowPermutation& sigma) { ++counts[track_of_string(blocks, a, sigma)]; });
    std::vector<TrackContribution> out;
    for (auto& [track, count] : counts) out.push_back({track, track_sum(blocks, a, track), count});
    return out;
}

/// det(A) as the sum of track_sum over the distinct complete tracks of its nonzero strings.
inline Scalar det_by_tracks(const ExactMatrix& a, bool cyclic, std::size_t bound = default_enumeration_bound)
{
    Scalar total = Scalar::zero(a.spec());
    for (const auto& contribution : complete_tracks(a, cyclic, bound)) total += contribution.sum;
    return total;
}

}  // namespace tworow
