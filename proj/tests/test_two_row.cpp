#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tworow;
using namespace tworow::testing;

TEST(TwoRow, WorkedExampleGraphs)
{
    const ExactMatrix a = worked_7x7();
    Graph expected = Graph::complete(7);
    expected.remove_edge(1, 3);
    expected.remove_edge(6, 7);
    EXPECT_EQ(static_cast<const Graph&>(two_row_graph(a, false)), expected);
    EXPECT_EQ(static_cast<const Graph&>(two_row_graph(a, true)), expected);
    EXPECT_EQ(two_row_graph(a, true).flavor(), GraphFlavor::cyclic);
    EXPECT_TRUE(null_connected(a, 1, 3, false));
    EXPECT_FALSE(null_connected(a, 1, 2, false));
    EXPECT_TRUE(null_connected(a, 6, 7, true));

    const RowGraph opp = opp_graph(a, false);
    EXPECT_EQ(opp.flavor(), GraphFlavor::opp);
    EXPECT_EQ(opp.edges(), (std::vector<Edge>{{1, 3}, {6, 7}}));
}

TEST(TwoRow, IdentityIsPathAndCycle)
{
    for (std::size_t n = 1; n <= 12; ++n) {
        const ExactMatrix id = ExactMatrix::identity(FieldSpec::gfp(5), n);
        EXPECT_EQ(static_cast<const Graph&>(two_row_graph(id, false)), Graph::path(n)) << n;
        if (n >= 3) {
            EXPECT_EQ(static_cast<const Graph&>(two_row_graph(id, true)), Graph::cycle(n)) << n;
        }
    }
}

TEST(TwoRow, AgreesWithNaiveDefinition)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
        const FieldSpec f = field_at(trial);
        const std::size_t m = 2 + trial % 6, n = 2 + (trial / 6) % 70;
        const ExactMatrix a = random_matrix(f, m, n, rng, 0.5);
        for (bool cyclic : {false, true}) {
            const RowGraph g = two_row_graph(a, cyclic);
            for (std::size_t i = 1; i <= m; ++i)
                for (std::size_t j = i + 1; j <= m; ++j)
                    ASSERT_EQ(g.has_edge(i, j), naive_adjacent(a, i, j, cyclic)) << f.name() << " " << m << "x" << n;
        }
    }
}

TEST(TwoRow, ProportionalRowsAreNullConnected)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const FieldSpec f = field_at(trial);
        const std::size_t n = 2 + trial % 7;
        ExactMatrix a = random_matrix(f, 2, n, rng, 0.3);
        const bool proportional = rank(a) <= 1;
        const bool full_support = [&] {
            for (std::size_t c = 0; c < n; ++c)
                if (a(0, c).is_zero() || a(1, c).is_zero()) return false;
            return true;
        }();
        // with no zero entries, null-connected is the same as proportional
        if (full_support) {
            EXPECT_EQ(null_connected(a, 1, 2, false), proportional);
        }
        if (proportional) {
            EXPECT_TRUE(null_connected(a, 1, 2, true));
        }
    }
}

TEST(TwoRow, EdgeCases)
{
    const ExactMatrix single = ExactMatrix::from_ints(FieldSpec::gf2(), {{1}});
    EXPECT_EQ(two_row_graph(single, false).vertex_count(), 1u);
    EXPECT_THROW(two_row_graph(ExactMatrix(FieldSpec::gf2(), 2, 1), false), Error);
    EXPECT_THROW(null_connected(worked_7x7(), 1, 1, false), Error);
    EXPECT_THROW(null_connected(worked_7x7(), 1, 8, false), Error);
    EXPECT_THROW(is_square_traceable(ExactMatrix(FieldSpec::gf2(), 2, 3)), Error);
    EXPECT_THROW(is_cyclically_square_traceable(ExactMatrix::identity(FieldSpec::gf2(), 2)), Error);
}

TEST(TwoRow, Traceability)
{
    EXPECT_TRUE(is_square_traceable(ExactMatrix::identity(FieldSpec::gf2(), 5)));
    EXPECT_TRUE(is_cyclically_square_traceable(ExactMatrix::identity(FieldSpec::gf2(), 5)));
    EXPECT_FALSE(is_square_traceable(worked_7x7()));  // rows 6, 7 are not adjacent
    // the counterexample: rows 1 and 3 meet nowhere, but 1 - 2 - 3 works
    const ExactMatrix c = counterexample_3x3();
    EXPECT_TRUE(is_square_traceable(c));
}
