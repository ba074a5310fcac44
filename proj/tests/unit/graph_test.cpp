#include <demon/error.hpp>
#include <demon/graph.hpp>
#include <demon/io.hpp>
#include <demon/label_order.hpp>
#include <demon/random.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

namespace demon {
namespace {

using testing::graph_from_edges;

std::vector<std::pair<std::string, std::string>> labelled_edges(const Subgraph &sub, const Graph &g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [u, v] : sub.parent_edges()) {
        auto a = g.label(u), b = g.label(v);
        if (label_less(b, a))
            std::swap(a, b);
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> labelled_nodes(const Subgraph &sub, const Graph &g) {
    std::vector<std::string> out;
    for (NodeId v : sub.parent_ids())
        out.push_back(g.label(v));
    return out;
}

Graph two_triangles() { return graph_from_edges({{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }

TEST(LabelOrder, NumericLabelsCompareByValue) {
    EXPECT_TRUE(label_less("2", "10"));
    EXPECT_FALSE(label_less("10", "2"));
    EXPECT_TRUE(label_less("99", "a"));
    EXPECT_TRUE(label_less("a", "b"));
    EXPECT_TRUE(label_less("1", "01") != label_less("01", "1"));
    EXPECT_FALSE(label_less("x", "x"));
}

TEST(EdgeList, TwoLinesGiveThreeNodesTwoEdges) {
    std::istringstream in("a b\nb c\n");
    const Graph g = read_edge_list(in);
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    g.check_invariants();
}

TEST(EdgeList, SelfLoopKeepsNodeDropsEdge) {
    std::istringstream in("a a\n");
    EdgeListReport report;
    const Graph g = read_edge_list(in, "x", &report);
    EXPECT_EQ(g.node_count(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_EQ(report.build.self_loops_dropped, 1u);
}

TEST(EdgeList, DuplicatesCommentsAndExtraColumns) {
    std::istringstream in("# header\na b\nb a 3.5\n\na b # again\nc d 1 0\n");
    EdgeListReport report;
    const Graph g = read_edge_list(in, "x", &report);
    EXPECT_EQ(g.node_count(), 4u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(report.build.duplicate_edges_dropped, 2u);
    EXPECT_EQ(report.extra_column_lines, 2u);
}

TEST(EdgeList, MalformedLineReportsLineNumber) {
    std::istringstream in("a b\nlonely\n");
    try {
        read_edge_list(in);
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(EdgeList, EmptyInputIsEmptyGraph) {
    std::istringstream in("");
    const Graph g = read_edge_list(in);
    EXPECT_EQ(g.node_count(), 0u);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(EdgeList, MissingFileIsIoError) {
    EXPECT_THROW(load_edge_list("/nonexistent/graph.edges"), IoError);
}

TEST(EdgeList, RoundTripPreservesAdjacency) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GraphBuilder b(testing::erdos_renyi(40, 0.1, seed));
        b.add_node("lonely");
        const Graph g = b.build();
        std::stringstream buf;
        write_edge_list(g, buf);
        const Graph h = read_edge_list(buf);
        h.check_invariants();
        EXPECT_EQ(testing::adjacency_of(g), testing::adjacency_of(h));
    }
}

TEST(Graph, InvariantsHoldOnRandomGraphs) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = testing::erdos_renyi(60, 0.08, seed);
        g.check_invariants();
        std::size_t degree_sum = 0;
        for (NodeId v = 0; v < g.node_count(); ++v)
            degree_sum += g.degree(v);
        EXPECT_EQ(g.edge_count() * 2, degree_sum);
    }
}

TEST(Graph, RankFollowsLabelsNotInsertionOrder) {
    const Graph g = graph_from_edges({{10, 2}, {2, 1}});
    ASSERT_EQ(g.label(0), "10");
    EXPECT_EQ(g.rank(g.id("1")), 0u);
    EXPECT_EQ(g.rank(g.id("2")), 1u);
    EXPECT_EQ(g.rank(g.id("10")), 2u);
}

TEST(Graph, UnknownLabelIsDomainError) {
    const Graph g = two_triangles();
    EXPECT_THROW(g.id("nope"), DomainError);
    EXPECT_FALSE(g.find("nope"));
}

TEST(Attributes, ParsesListsAndWarnsOnUnknownNodes) {
    const Graph g = graph_from_edges({{1, 2}});
    std::istringstream in("1|x,y\n2|\nz|x\n");
    const auto loaded = read_attributes(in, g);
    const auto a = loaded.table.of(g.id("1"));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0], "x");
    EXPECT_EQ(a[1], "y");
    EXPECT_TRUE(loaded.table.has(g.id("2")));
    EXPECT_TRUE(loaded.table.of(g.id("2")).empty());
    EXPECT_EQ(loaded.table.size(), 2u);
    EXPECT_EQ(loaded.warnings.size(), 1u);
}

TEST(Attributes, OnlyUnknownNodeGivesEmptyTable) {
    const Graph g = graph_from_edges({{1, 2}});
    std::istringstream in("z|x\n");
    const auto loaded = read_attributes(in, g);
    EXPECT_EQ(loaded.table.size(), 0u);
    EXPECT_EQ(loaded.warnings.size(), 1u);
}

TEST(Attributes, UnreadableFileIsIoError) {
    const Graph g = graph_from_edges({{1, 2}});
    EXPECT_THROW(load_attributes("/nonexistent/attrs.txt", g), IoError);
}

TEST(EgoNetwork, StarCenter) {
    const Graph g = graph_from_edges({{0, 1}, {0, 2}, {0, 3}});
    const auto sub = ego_network(g.id("0"), g);
    EXPECT_EQ(labelled_nodes(sub, g), (std::vector<std::string>{"0", "1", "2", "3"}));
    EXPECT_EQ(sub.edge_count(), 3u);
}

TEST(EgoNetwork, TriangleIsWhole) {
    const Graph g = graph_from_edges({{1, 2}, {2, 3}, {1, 3}});
    const auto sub = ego_network(g.id("1"), g);
    EXPECT_EQ(sub.node_count(), 3u);
    EXPECT_EQ(sub.edge_count(), 3u);
}

TEST(EgoNetwork, TwoTrianglesAroundSharedNode) {
    const Graph g = two_triangles();
    const auto sub = ego_network(g.id("3"), g);
    EXPECT_EQ(labelled_nodes(sub, g), (std::vector<std::string>{"1", "2", "3", "4", "5"}));
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"1", "2"}, {"1", "3"}, {"2", "3"}, {"3", "4"}, {"3", "5"}, {"4", "5"}};
    EXPECT_EQ(labelled_edges(sub, g), expected);
}

TEST(EgoMinusEgo, StarLosesAllEdges) {
    const Graph g = graph_from_edges({{0, 1}, {0, 2}, {0, 3}});
    const auto sub = ego_minus_ego(g.id("0"), g);
    EXPECT_EQ(labelled_nodes(sub, g), (std::vector<std::string>{"1", "2", "3"}));
    EXPECT_EQ(sub.edge_count(), 0u);
}

TEST(EgoMinusEgo, TwoTrianglesSplit) {
    const Graph g = two_triangles();
    const auto sub = ego_minus_ego(g.id("3"), g);
    EXPECT_EQ(labelled_nodes(sub, g), (std::vector<std::string>{"1", "2", "4", "5"}));
    const std::vector<std::pair<std::string, std::string>> expected = {{"1", "2"}, {"4", "5"}};
    EXPECT_EQ(labelled_edges(sub, g), expected);
}

TEST(EgoMinusEgo, DegreeOneAndDegreeZero) {
    const Graph g = graph_from_edges({{1, 2}}, {7});
    const auto leaf = ego_minus_ego(g.id("1"), g);
    EXPECT_EQ(labelled_nodes(leaf, g), (std::vector<std::string>{"2"}));
    EXPECT_EQ(leaf.edge_count(), 0u);
    EXPECT_EQ(ego_minus_ego(g.id("7"), g).node_count(), 0u);
}

TEST(EgoMinusEgo, UnknownNodeIsDomainError) {
    const Graph g = two_triangles();
    EXPECT_THROW(ego_minus_ego(99, g), DomainError);
    EXPECT_THROW(ego_network(99, g), DomainError);
}

// ego_minus_ego(v) == ego_network(v) minus v, and both match a direct construction.
TEST(EgoMinusEgo, MatchesIndependentConstruction) {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = 2 + uniform_below(rng, 99);
        const double p = 0.02 + 0.3 * uniform_unit(rng);
        const Graph g = testing::erdos_renyi(n, p, rng());
        const auto adj = testing::adjacency_of(g);
        SubgraphExtractor extractor(g);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const auto eme = extractor.ego_minus_ego(v);
            const auto en = extractor.ego_network(v);

            std::vector<NodeId> rest;
            for (NodeId u : en.parent_ids())
                if (u != v)
                    rest.push_back(u);
            const auto removed = extractor.induced(rest);
            EXPECT_EQ(eme.parent_edges(), removed.parent_edges());
            EXPECT_EQ(eme.node_count(), removed.node_count());

            const auto oracle = testing::oracle_ego_minus_ego(adj, g.label(v));
            EXPECT_EQ(eme.node_count(), oracle.size());
            std::size_t oracle_edges = 0;
            for (const auto &[a, row] : oracle)
                oracle_edges += row.size();
            EXPECT_EQ(eme.edge_count() * 2, oracle_edges);
            for (auto [a, b] : eme.parent_edges())
                EXPECT_TRUE(oracle.at(g.label(a)).count(g.label(b)));
        }
    }
}

TEST(EgoMinusEgo, HubPathMatchesScanPath) {
    // One hub adjacent to everything; its neighbours' ego nets take the binary-search branch.
    GraphBuilder b;
    for (int v = 1; v <= 200; ++v)
        b.add_edge("hub", std::to_string(v));
    for (int v = 1; v < 200; v += 2)
        b.add_edge(std::to_string(v), std::to_string(v + 1));
    const Graph g = b.build();
    const auto adj = testing::adjacency_of(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto eme = ego_minus_ego(v, g);
        const auto oracle = testing::oracle_ego_minus_ego(adj, g.label(v));
        std::size_t oracle_edges = 0;
        for (const auto &[a, row] : oracle)
            oracle_edges += row.size();
        EXPECT_EQ(eme.edge_count() * 2, oracle_edges) << g.label(v);
    }
}

TEST(Subgraph, LocalOrderIsCanonical) {
    const Graph g = graph_from_edges({{30, 4}, {4, 100}, {100, 30}, {7, 30}});
    const auto sub = ego_minus_ego(g.id("30"), g);
    EXPECT_EQ(labelled_nodes(sub, g), (std::vector<std::string>{"4", "7", "100"}));
}

} // namespace
} // namespace demon
