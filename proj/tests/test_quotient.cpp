#include "support/support.hpp"

#include "szeged/error.hpp"
#include "szeged/generators.hpp"
#include "szeged/quotient.hpp"
#include "szeged/theta.hpp"

#include <gtest/gtest.h>

using namespace szeged;
using namespace testing_support;

TEST(Quotient, HexagonOppositePair) {
    const Graph g = cycle(6);
    const auto q = quotient_by_group(g, std::vector<EdgeId>{0, 3});
    ASSERT_EQ(q.graph.vertex_count(), 2u);
    ASSERT_EQ(q.graph.edge_count(), 1u);
    EXPECT_EQ(q.graph.vertex_weight(0), 3);
    EXPECT_EQ(q.graph.vertex_weight(1), 3);
    EXPECT_EQ(q.graph.vertex_strength(0), 2);
    EXPECT_EQ(q.graph.vertex_strength(1), 2);
    EXPECT_EQ(q.graph.edge_strength(0), 2);
    EXPECT_EQ(q.graph.edge_weight(0), 2);
    EXPECT_EQ(q.fibers[0], (std::vector<EdgeId>{0, 3}));
    EXPECT_TRUE(q.internal_group_edges.empty());
    EXPECT_EQ(q.component_of, (std::vector<std::uint32_t>{0, 1, 1, 1, 0, 0}));
}

TEST(Quotient, SingleEdge) {
    const auto q = quotient_by_group(path(2), std::vector<EdgeId>{0});
    EXPECT_EQ(q.graph.vertex_count(), 2u);
    EXPECT_EQ(q.graph.vertex_weight(0), 1);
    EXPECT_EQ(q.graph.vertex_weight(1), 1);
    EXPECT_EQ(q.graph.vertex_strength(0), 0);
    EXPECT_EQ(q.graph.edge_strength(0), 1);
}

TEST(Quotient, BadGroups) {
    const Graph g = cycle(4);
    EXPECT_THROW(quotient_by_group(g, std::vector<EdgeId>{7}), Error);
    EXPECT_THROW(quotient_by_group(g, std::vector<EdgeId>{1, 1}), Error);
}

TEST(Quotient, NonClassGroupReportsInternalEdges) {
    const auto q = quotient_by_group(cycle(6), std::vector<EdgeId>{0});
    EXPECT_EQ(q.graph.vertex_count(), 1u);
    EXPECT_EQ(q.internal_group_edges, (std::vector<EdgeId>{0}));
}

TEST(Quotient, WeightsArePreservedInTotal) {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_connected_graph(rng, 5 + trial % 8, 20, true);
        const auto tc = theta_star_classes(g);
        for (const auto& group : tc.classes) {
            const auto q = quotient_by_group(g, group);
            ASSERT_TRUE(q.internal_group_edges.empty());
            EXPECT_EQ(q.graph.total_vertex_weight(), g.total_vertex_weight());
            EXPECT_EQ(q.graph.total_strength(), g.total_strength());
            Rational group_weight = 0;
            for (EdgeId e : group) group_weight += g.edge_weight(e);
            Rational quotient_weight = 0;
            for (EdgeId e = 0; e < q.graph.edge_count(); ++e) quotient_weight += q.graph.edge_weight(e);
            EXPECT_EQ(quotient_weight, group_weight);
            std::size_t fiber_total = 0;
            for (const auto& fiber : q.fibers) fiber_total += fiber.size();
            EXPECT_EQ(fiber_total, group.size());
        }
    }
}

TEST(Quotient, CoronoidThirdTypeClass) {
    for (int n = 1; n <= 3; ++n) {
        const Graph g = coronoid(n);
        const auto tc = theta_star_classes(g);
        const Rational side(3 * n * n + 12 * n + 9);
        Rational strength(9 * n * n + 31 * n + 16, 2);
        strength.canonicalize();
        bool found = false;
        for (const auto& group : tc.classes) {
            const auto q = quotient_by_group(g, group);
            if (q.graph.vertex_count() != 2 || q.graph.vertex_weight(0) != side) continue;
            found = true;
            EXPECT_EQ(q.graph.vertex_weight(1), side);
            EXPECT_EQ(q.graph.vertex_strength(0), strength);
            EXPECT_EQ(q.graph.vertex_strength(1), strength);
            EXPECT_EQ(q.graph.edge_strength(0), 2 * n + 2);
        }
        EXPECT_TRUE(found) << "n=" << n;
    }
}
