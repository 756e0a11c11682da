#include "support/support.hpp"

#include "szeged/error.hpp"
#include "szeged/generators.hpp"
#include "szeged/theta.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace szeged;
using namespace testing_support;

TEST(ThetaRelation, OppositeEdgesOfFourCycle) {
    const Graph g = cycle(4);
    const auto d = all_pairs_distances(g);
    EXPECT_TRUE(theta_related(d, Edge{0, 1}, Edge{2, 3}));
    EXPECT_FALSE(theta_related(d, Edge{0, 1}, Edge{1, 2}));
}

TEST(ThetaRelation, Reflexive) {
    const Graph g = cycle(5);
    const auto d = all_pairs_distances(g);
    for (const Edge& e : g.edges()) EXPECT_TRUE(theta_related(d, e, e));
}

TEST(ThetaRelation, AdjacentPathEdges) {
    const auto d = all_pairs_distances(path(3));
    EXPECT_FALSE(theta_related(d, Edge{0, 1}, Edge{1, 2}));
}

TEST(ThetaClasses, Hexagon) {
    const auto tc = theta_star_classes(cycle(6));
    const std::vector<std::vector<EdgeId>> expected{{0, 3}, {1, 4}, {2, 5}};
    EXPECT_EQ(tc.classes, expected);
}

TEST(ThetaClasses, Pentagon) {
    const auto tc = theta_star_classes(cycle(5));
    ASSERT_EQ(tc.size(), 1u);
    EXPECT_EQ(tc.classes[0].size(), 5u);
}

TEST(ThetaClasses, PathsHaveSingletons) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto tc = theta_star_classes(path(n));
        EXPECT_EQ(tc.size(), n - 1);
    }
}

TEST(ThetaClasses, DisconnectedThrows) {
    EXPECT_THROW(theta_star_classes(Graph::normal(4, {{0, 1}, {2, 3}})), Error);
}

TEST(ThetaClasses, MatchOracleOnRandomGraphs) {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_connected_graph(rng, 3 + trial % 10, 20, false);
        const auto tc = theta_star_classes(g);
        auto expected = oracle_theta_classes(g);
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(tc.classes, expected) << "trial " << trial;
        for (std::size_t c = 0; c < tc.size(); ++c)
            for (EdgeId e : tc.classes[c]) ASSERT_EQ(tc.class_of[e], c);
    }
}

TEST(ThetaClasses, InvariantUnderEdgeReordering) {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_connected_graph(rng, 8, 16, false);
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        std::vector<EdgeId> perm(edges.size());
        for (EdgeId i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> shuffled;
        for (EdgeId i : perm) shuffled.push_back(edges[i]);
        const auto a = theta_star_classes(g);
        const auto b = theta_star_classes(Graph::normal(g.vertex_count(), shuffled));
        ASSERT_EQ(a.size(), b.size());
        for (EdgeId i = 0; i < perm.size(); ++i)
            for (EdgeId j = 0; j < perm.size(); ++j)
                ASSERT_EQ(a.class_of[perm[i]] == a.class_of[perm[j]], b.class_of[i] == b.class_of[j]);
    }
}

TEST(Coarsen, IdentityAndTotal) {
    const auto tc = theta_star_classes(cycle(6));
    const auto identity = coarsen(tc, {{0}, {1}, {2}});
    EXPECT_EQ(identity.groups, tc.classes);
    const auto total = coarsen(tc, {{0, 1, 2}});
    ASSERT_EQ(total.size(), 1u);
    EXPECT_EQ(total.groups[0], (std::vector<EdgeId>{0, 1, 2, 3, 4, 5}));
}

TEST(Coarsen, RepeatedClassRejected) {
    const auto tc = theta_star_classes(cycle(6));
    try {
        coarsen(tc, {{0}, {0, 1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAPartitionOfClasses);
    }
    EXPECT_THROW(coarsen(tc, {{0}, {1}}), Error);
}

TEST(ValidatePartition, AcceptsAndRejects) {
    const Graph g = cycle(6);
    const auto tc = theta_star_classes(g);
    EXPECT_EQ(validate_c_partition(tc, tc.classes).groups, tc.classes);
    auto code = [&](const std::vector<std::vector<EdgeId>>& groups) {
        try {
            validate_c_partition(tc, groups);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidDocument;
    };
    EXPECT_EQ(code({{0, 1, 2}, {3, 4, 5}}), ErrorCode::SplitsThetaClass);
    EXPECT_EQ(code({{0, 3}, {1, 4}}), ErrorCode::NotEdgePartition);
    EXPECT_EQ(code({{0, 3}, {1, 4}, {2, 5}, {}}), ErrorCode::NotEdgePartition);
    EXPECT_EQ(code({{0, 3}, {1, 4}, {2, 5, 5}}), ErrorCode::NotEdgePartition);
    EXPECT_EQ(code({{0, 3}, {1, 4}, {2, 5, 9}}), ErrorCode::NotEdgePartition);
}

TEST(ValidatePartition, BenzenoidDirections) {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const auto b = benzenoid(random_cells(rng, 1 + trial, false));
        EXPECT_NO_THROW(b.directions.as_c_partition(theta_star_classes(b.graph)));
    }
}

TEST(PartialCube, Families) {
    EXPECT_TRUE(is_partial_cube(cycle(6)));
    EXPECT_FALSE(is_partial_cube(cycle(5)));
    EXPECT_TRUE(is_partial_cube(path(4)));
    EXPECT_FALSE(is_bipartite(cycle(3)));
    const Graph k4 = Graph::normal(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_FALSE(is_partial_cube(k4));
    const Graph k23 = Graph::normal(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    EXPECT_FALSE(is_partial_cube(k23));
    EXPECT_TRUE(non_theta_pair(k23, all_pairs_distances(k23), theta_star_classes(k23)).has_value());
}
