#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "corpus.hpp"
#include "treelike/bfs_tree.hpp"
#include "treelike/distance.hpp"
#include "treelike/generators.hpp"
#include "treelike/graph.hpp"
#include "treelike/half_int.hpp"

using namespace treelike;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(HalfInt, Formatting) {
    EXPECT_EQ(HalfInt::from_int(2).to_string(), "2");
    EXPECT_EQ(HalfInt::from_doubled(5).to_string(), "2.5");
    EXPECT_EQ(HalfInt::from_doubled(-1).to_string(), "-0.5");
    EXPECT_EQ(HalfInt::from_doubled(5).floor(), 2);
    EXPECT_EQ(HalfInt::from_doubled(5).ceil(), 3);
    EXPECT_EQ(HalfInt::from_doubled(-3).floor(), -2);
    EXPECT_LT(HalfInt::from_doubled(3), HalfInt::from_int(2));
}

TEST(ParseGraph, PathOfThree) {
    auto p = parse_edge_list("0 1\n1 2");
    EXPECT_EQ(p.graph.n(), 3u);
    EXPECT_EQ(p.graph.m(), 2u);
}

TEST(ParseGraph, DuplicatesAndComments) {
    auto p = parse_edge_list("0 1\n1 0\n# c\n1 2");
    EXPECT_EQ(p.graph, parse_edge_list("0 1\n1 2").graph);
}

TEST(ParseGraph, Errors) {
    EXPECT_EQ(code_of([] { parse_edge_list("0 1\n2 3"); }), ErrorCode::Disconnected);
    EXPECT_EQ(code_of([] { parse_edge_list("0 1\n1 1"); }), ErrorCode::SelfLoop);
    EXPECT_EQ(code_of([] { parse_edge_list("# nothing\n"); }), ErrorCode::Empty);
    EXPECT_EQ(code_of([] { parse_edge_list("0 x"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_edge_list("0 1 2"); }), ErrorCode::Parse);
}

TEST(ParseGraph, RemapsSparseIds) {
    auto p = parse_edge_list("10 20\n20 7\n");
    EXPECT_EQ(p.graph.n(), 3u);
    EXPECT_EQ(p.original_ids, (std::vector<std::uint64_t>{7, 10, 20}));
    EXPECT_TRUE(p.graph.adjacent(1, 2));
    EXPECT_TRUE(p.graph.adjacent(0, 2));
}

TEST(ParseGraph, RoundTrip) {
    Graph g = gen_gnp_connected(25, 0.2, 3);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)).graph, g);
}

TEST(Bfs, Examples) {
    Graph p3 = gen_path(3);
    BfsTree t = bfs(p3, 1);
    EXPECT_EQ(std::vector<std::uint32_t>(t.depths().begin(), t.depths().end()),
              (std::vector<std::uint32_t>{1, 0, 1}));
    EXPECT_EQ(t.parent(0), 1u);
    EXPECT_EQ(t.parent(2), 1u);

    BfsTree c = bfs(gen_cycle(4), 0);
    EXPECT_EQ(c.depth(2), 2u);
    EXPECT_EQ(c.parent(2), 1u);

    BfsTree s = bfs(gen_star(5), 1);
    for (Vertex v : {2u, 3u, 4u}) EXPECT_EQ(s.depth(v), 2u);
}

TEST(BfsFromParents, Validation) {
    Graph p3 = gen_path(3);
    std::vector<Vertex> ok{1, kNoVertex, 1};
    EXPECT_NO_THROW(bfs_tree_from_parents(p3, 1, ok));

    Graph c4 = gen_cycle(4);
    std::vector<Vertex> alt{kNoVertex, 0, 3, 0};
    BfsTree t = bfs_tree_from_parents(c4, 0, alt);
    EXPECT_EQ(t.parent(2), 3u);

    std::vector<Vertex> loop{kNoVertex, 2, 1, 0};
    EXPECT_EQ(code_of([&] { bfs_tree_from_parents(c4, 0, loop); }), ErrorCode::NotATree);

    std::vector<Vertex> non_edge{kNoVertex, 0, 0, 0};
    EXPECT_EQ(code_of([&] { bfs_tree_from_parents(c4, 0, non_edge); }), ErrorCode::NotATree);

    // A spanning tree whose root path to 3 is not a geodesic.
    std::vector<Vertex> deep{kNoVertex, 0, 1, 2};
    EXPECT_EQ(code_of([&] { bfs_tree_from_parents(c4, 0, deep); }), ErrorCode::NotShortestPathTree);
}

TEST(Distances, Examples) {
    DistanceMatrix c4 = all_pairs_distances(gen_cycle(4));
    EXPECT_EQ(c4(0, 2), 2);
    EXPECT_EQ(c4(1, 3), 2);
    EXPECT_EQ(c4(0, 1), 1);
    EXPECT_EQ(all_pairs_distances(gen_path(4))(0, 3), 3);
    EXPECT_EQ(all_pairs_distances(gen_Hk(1).graph).diameter(), 4);
}

TEST(Distances, GromovAndInterval) {
    DistanceMatrix p3 = all_pairs_distances(gen_path(3));
    EXPECT_EQ(gromov_product(p3, 0, 2, 1), HalfInt::from_int(0));
    EXPECT_EQ(gromov_product(p3, 0, 1, 0), HalfInt::from_int(0));
    EXPECT_TRUE(in_interval(p3, 0, 1, 2));
    EXPECT_TRUE(in_interval(p3, 0, 0, 2));

    DistanceMatrix c4 = all_pairs_distances(gen_cycle(4));
    EXPECT_EQ(gromov_product(c4, 1, 3, 0), HalfInt::from_int(0));
    EXPECT_FALSE(in_interval(c4, 0, 1, 3));
}

TEST(Distances, ThreadCountDoesNotMatter) {
    Graph g = gen_gnp_connected(80, 0.05, 11);
    EXPECT_EQ(all_pairs_distances(g, 1), all_pairs_distances(g, 4));
}

TEST(GraphCoreProperties, RandomCorpus) {
    for (const auto& [name, g] : corpus::random_graphs(60, 2, 40, 101)) {
        SCOPED_TRACE(name);
        const DistanceMatrix d = all_pairs_distances(g);
        const std::size_t n = g.n();
        for (Vertex u = 0; u < n; ++u) {
            EXPECT_EQ(d(u, u), 0);
            for (Vertex v = 0; v < n; ++v) {
                EXPECT_EQ(d(u, v), d(v, u));
                EXPECT_EQ(d(u, v) == 1, g.adjacent(u, v));
            }
        }
        for (Vertex w = 0; w < n; w += 3) {
            const BfsTree t = bfs(g, w);
            const AncestorTable& m = t.ancestors();
            for (Vertex x = 0; x < n; ++x) {
                ASSERT_EQ(t.depth(x), d(w, x));
                EXPECT_EQ(m.at(x, 0), w);
                EXPECT_EQ(m.at(x, t.depth(x)), x);
                Vertex walk = x;
                for (std::uint32_t r = t.depth(x); r-- > 0;) {
                    walk = t.parent(walk);
                    EXPECT_EQ(m.at(x, r), walk);
                    EXPECT_EQ(t.depth(m.at(x, r)), r);
                }
            }
            for (Vertex y = 0; y < n; ++y)
                for (Vertex z = 0; z < n; ++z)
                    EXPECT_LE(gromov_product(d, y, z, w), HalfInt::from_int(std::min(d(y, w), d(z, w))));
        }
    }
}
