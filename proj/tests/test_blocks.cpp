#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace tworow;
using namespace tworow::testing;

namespace {

std::size_t factorial(std::size_t k)
{
    std::size_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
}

void expect_partition_properties(const ExactMatrix& a, bool cyclic)
{
    const std::size_t m = a.rows(), n = a.cols();
    const BlockPartition p = block_partition(a, cyclic);
    std::vector<int> cover(m * n, 0);
    for (const auto& b : p.blocks) {
        ASSERT_GE(b.rows.size(), 2u);
        ASSERT_GE(b.cols.len, 2u);
        ASSERT_EQ(b.cyclic, cyclic);
        EXPECT_EQ(rank(b.submatrix(a)), 1u);
        for (std::size_t r : b.rows)
            for (std::size_t k = 0; k < b.cols.len; ++k) {
                const std::size_t c = b.cols.column(k, n);
                EXPECT_FALSE(a.at(r, c).is_zero());
                ++cover[(r - 1) * n + c - 1];
            }
    }
    for (const Cell& cell : p.nonzero_singletons) {
        EXPECT_FALSE(a.at(cell.row, cell.col).is_zero());
        ++cover[(cell.row - 1) * n + cell.col - 1];
    }
    for (const Cell& cell : p.zero_singletons) {
        EXPECT_TRUE(a.at(cell.row, cell.col).is_zero());
        ++cover[(cell.row - 1) * n + cell.col - 1];
    }
    for (std::size_t k = 0; k < cover.size(); ++k) ASSERT_EQ(cover[k], 1) << "cell " << k;

    const BlockPartition again = block_partition(a, cyclic);
    EXPECT_EQ(again.blocks, p.blocks);
    EXPECT_EQ(again.nonzero_singletons, p.nonzero_singletons);
}

}  // namespace

TEST(Blocks, WorkedExampleNonCyclic)
{
    const auto blocks = find_one_blocks(worked_7x7(), false);
    ASSERT_EQ(blocks.size(), 1u);
    EXPECT_EQ(blocks[0].rows, (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(blocks[0].cols, (ColumnInterval{1, 3}));
}

TEST(Blocks, WorkedExampleCyclic)
{
    const auto blocks = find_one_blocks(worked_7x7(), true);
    ASSERT_EQ(blocks.size(), 2u);
    // rows 1 and 3 also agree in column 7, so the cyclic block runs 7, 1, 2, 3
    EXPECT_EQ(blocks[0].rows, (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(blocks[0].cols, (ColumnInterval{7, 4}));
    EXPECT_EQ(blocks[1].rows, (std::vector<std::size_t>{6, 7}));
    EXPECT_EQ(blocks[1].cols, (ColumnInterval{7, 2}));
    for (std::size_t c : {1u, 2u, 3u}) EXPECT_TRUE(blocks[0].cols.contains(c, 7));
}

TEST(Blocks, MaximalityAndComponents)
{
    // rows 1, 2 null-connected and jointly nonzero on columns 1..2; row 3 meets both
    const FieldSpec f = FieldSpec::gfp(5);
    const ExactMatrix a = ExactMatrix::from_ints(f, {{1, 2, 0, 1}, {2, 4, 0, 3}, {1, 1, 1, 1}});
    const auto blocks = find_one_blocks(a, false);
    ASSERT_EQ(blocks.size(), 1u);
    EXPECT_EQ(blocks[0].rows, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(blocks[0].cols, (ColumnInterval{1, 2}));
}

TEST(Blocks, RowsMustBeNullConnected)
{
    // rows 1, 2 are proportional on columns 1..2 but meet elsewhere
    const ExactMatrix a = ExactMatrix::from_ints(FieldSpec::rationals(), {{1, 1, 0, 1}, {2, 2, 1, 0}});
    EXPECT_TRUE(find_one_blocks(a, false).empty());
}

TEST(Blocks, NoBlocksInIdentityOrDegenerate)
{
    EXPECT_TRUE(find_one_blocks(ExactMatrix::identity(FieldSpec::gf2(), 6), true).empty());
    EXPECT_THROW(find_one_blocks(ExactMatrix(FieldSpec::gf2(), 3, 1), false), Error);
}

TEST(Blocks, AllOnesIsOneFullBlock)
{
    ExactMatrix a(FieldSpec::gf2(), 3, 4);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c) a.set(r, c, Scalar::one(a.spec()));
    for (bool cyclic : {false, true}) {
        const auto blocks = find_one_blocks(a, cyclic);
        ASSERT_EQ(blocks.size(), 1u);
        EXPECT_EQ(blocks[0].cols, (ColumnInterval{1, 4}));
        EXPECT_EQ(blocks[0].rows.size(), 3u);
    }
}

TEST(Blocks, PartitionPropertiesOnRandomMatrices)
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        const FieldSpec f = field_at(trial);
        const std::size_t m = 2 + trial % 6, n = 2 + (trial / 3) % 7;
        // small supports of rank-one patches make blocks frequent
        ExactMatrix a = random_matrix(f, m, n, rng, 0.4);
        if (trial % 2 == 0) {
            std::uniform_int_distribution<std::size_t> pick(0, m - 1);
            const std::size_t r1 = pick(rng), r2 = pick(rng);
            if (r1 != r2)
                for (std::size_t c = 0; c < n; ++c) a.set(r2, c, a(r1, c));
        }
        for (bool cyclic : {false, true}) expect_partition_properties(a, cyclic);
    }
}

TEST(Tracks, WorkedExampleDeterminantByTracks)
{
    for (bool cyclic : {false, true}) {
        EXPECT_TRUE(det_by_tracks(worked_7x7(), cyclic).is_one());
        EXPECT_EQ(det_by_tracks(worked_7x7(FieldSpec::rationals()), cyclic).to_string(), "-1");
    }
}

TEST(Tracks, TrackOfIdentityString)
{
    const ExactMatrix a = worked_7x7();
    // sigma(c) = 1, 2, ... is not a nonzero string here; a_4^4 = 0
    EXPECT_THROW(track_of_string(a, RowPermutation::identity(7), false), Error);
    const ExactMatrix id = ExactMatrix::identity(FieldSpec::gf2(), 4);
    const OneTrack t = track_of_string(id, RowPermutation::identity(4), false);
    ASSERT_EQ(t.members.size(), 4u);
    EXPECT_FALSE(t.has_one_minor());
    EXPECT_TRUE(track_sum(id, t).is_one());
}

TEST(Tracks, OneMinorInsideBlock)
{
    // rows 1, 2 form a block on columns 1..2; the two orderings of those rows share a track
    const FieldSpec f = FieldSpec::rationals();
    const ExactMatrix a = ExactMatrix::from_ints(f, {{1, 2, 0}, {3, 6, 0}, {0, 0, 5}});
    const OneTrack t1 = track_of_string(a, RowPermutation({1, 2, 3}), false);
    const OneTrack t2 = track_of_string(a, RowPermutation({2, 1, 3}), false);
    EXPECT_EQ(t1, t2);
    ASSERT_EQ(t1.members.size(), 2u);
    EXPECT_TRUE(t1.members[0].is_one_minor());
    EXPECT_TRUE(track_sum(a, t1).is_zero());
}

TEST(Tracks, InvalidTracksRejected)
{
    const ExactMatrix a = ExactMatrix::from_ints(FieldSpec::rationals(), {{1, 2, 0}, {3, 6, 0}, {0, 0, 5}});
    const OneTrack split{{TrackMember{{1}, {1, 1}}, TrackMember{{2}, {2, 1}}, TrackMember{{3}, {3, 1}}}, false};
    try {
        track_sum(a, split);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_track);
    }
    const OneTrack partial{{TrackMember{{1, 2}, {1, 2}}}, false};
    try {
        track_sum(a, partial);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::incomplete_track);
    }
    EXPECT_THROW(complete_tracks(ExactMatrix::identity(FieldSpec::gf2(), 9), false), Error);
    EXPECT_NO_THROW(complete_tracks(ExactMatrix::identity(FieldSpec::gf2(), 9), false, 9));
}

TEST(Tracks, DeterminantOracleOnRandomMatrices)
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 160; ++trial) {
        const FieldSpec f = field_at(trial);
        const std::size_t n = 2 + trial % 5;
        ExactMatrix a = random_matrix(f, n, n, rng, 0.3);
        if (trial % 3 == 0 && n >= 3)
            for (std::size_t c = 0; c < n; ++c) a.set(1, c, a(0, c) + a(0, c));
        for (bool cyclic : {false, true}) {
            const auto tracks = complete_tracks(a, cyclic);
            Scalar total = Scalar::zero(f);
            std::size_t strings = 0;
            for (const auto& t : tracks) {
                total += t.sum;
                strings += t.string_count;
                std::size_t expected = 1;
                for (const auto& mem : t.track.members) expected *= factorial(mem.rows.size());
                EXPECT_EQ(t.string_count, expected);
                if (t.track.has_one_minor()) {
                    EXPECT_TRUE(t.sum.is_zero());
                }
            }
            EXPECT_EQ(total, leibniz_determinant(a));
            std::size_t nonzero = 0;
            for_each_nonzero_string(a, [&](const RowPermutation&) { ++nonzero; });
            EXPECT_EQ(strings, nonzero);
        }
    }
}

TEST(Tracks, EveryStringLiesInExactlyOneTrack)
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 5;
        ExactMatrix a = random_matrix(FieldSpec::gf2(), n, n, rng, 0.2);
        for (bool cyclic : {false, true}) {
            const BlockMap map = BlockMap::build(a, cyclic);
            std::map<OneTrack, std::size_t> counts;
            for_each_nonzero_string(a, [&](const RowPermutation& s) { ++counts[track_of_string(map, a, s)]; });
            // each canonical track, enumerated member-wise, reproduces exactly its own strings
            for (const auto& [track, count] : counts) {
                std::size_t members = 1;
                for (const auto& mem : track.members) members *= factorial(mem.rows.size());
                EXPECT_EQ(members, count);
            }
        }
    }
}
