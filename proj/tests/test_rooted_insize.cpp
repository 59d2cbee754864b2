#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "treelike/exact.hpp"
#include "treelike/generators.hpp"
#include "treelike/oracles.hpp"
#include "treelike/rooted_insize.hpp"
#include "treelike/thinness.hpp"
#include "treelike/tree_search.hpp"

using namespace treelike;

TEST(RootedInsize, TreesAreZero) {
    for (std::uint64_t s = 0; s < 5; ++s) {
        Graph g = gen_random_tree(30, s);
        DistanceMatrix d = all_pairs_distances(g);
        for (Vertex w = 0; w < g.n(); w += 7) {
            EXPECT_EQ(rooted_insize_dense(d, bfs(g, w)).rho, 0u);
            EXPECT_EQ(rooted_insize_sparse(g, w).rho, 0u);
            EXPECT_EQ(rooted_thinness_mu(d, bfs(g, w)), 0u);
        }
    }
}

TEST(RootedInsize, StaircaseGrid) {
    const Generated h = gen_Hk(2);
    const DistanceMatrix d = all_pairs_distances(h.graph);
    const RootedInsize r = rooted_insize_dense(d, *h.tree);
    EXPECT_EQ(r.rho, 8u);
    EXPECT_EQ(r.witness.dist, d(r.witness.x_y, r.witness.y_x));
    EXPECT_EQ(rooted_insize_sparse(h.graph, *h.tree).rho, 8u);
    EXPECT_EQ(rooted_thinness_mu(d, *h.tree), 8u);

    const Vertex w = h.roles.at("w")[0];
    EXPECT_EQ(rooted_insize_sparse(h.graph, w).rho, rooted_insize_dense(d, bfs(h.graph, w)).rho);
}

TEST(RootedInsize, ZigzagGrid) {
    const Generated g = gen_Gk(1);
    EXPECT_LE(rooted_insize_dense(all_pairs_distances(g.graph), *g.tree).rho, 2u);
}

TEST(RootedInsize, TreeMismatch) {
    Graph g = gen_cycle(6);
    DistanceMatrix other = all_pairs_distances(gen_path(6));
    try {
        rooted_insize_dense(other, bfs(g, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TreeMismatch);
    }
}

TEST(RootedInsize, SparseEqualsDenseWithWitness) {
    for (const auto& [name, g] : corpus::random_graphs(100, 2, 60, 23)) {
        const DistanceMatrix d = all_pairs_distances(g);
        for (Vertex w = 0; w < g.n(); w += 5) {
            const BfsTree t = bfs(g, w);
            const RootedInsize dense = rooted_insize_dense(d, t, 2);
            const RootedInsize sparse = rooted_insize_sparse(g, t);
            ASSERT_EQ(dense.rho, sparse.rho) << name << " w=" << w;
            EXPECT_EQ(dense.witness, sparse.witness) << name << " w=" << w;
            const auto& wi = dense.witness;
            EXPECT_EQ(wi.r, gromov_product(d, wi.x, wi.y, w).floor());
            EXPECT_EQ(t.depth(wi.x_y), wi.r);
            EXPECT_EQ(t.depth(wi.y_x), wi.r);
        }
    }
}

TEST(RootedInsize, EqualsMuAndDefinition) {
    for (const auto& [name, g] : corpus::random_graphs(60, 2, 30, 29)) {
        const DistanceMatrix d = all_pairs_distances(g);
        const auto od = oracle::distances(g);
        for (Vertex w = 0; w < g.n(); w += 3) {
            const BfsTree t = bfs(g, w);
            const auto rho = rooted_insize_dense(d, t).rho;
            EXPECT_EQ(rho, rooted_thinness_mu(d, t)) << name;
            std::vector<Vertex> parent(t.parents().begin(), t.parents().end());
            EXPECT_EQ(static_cast<int>(rho), oracle::rooted_insize(od, w, parent)) << name;
        }
    }
}

TEST(RootedInsize, AlternativeTrees) {
    // Every BFS tree of small graphs, not just the deterministic one.
    for (const auto& [name, g] : corpus::random_graphs(25, 3, 9, 31)) {
        const DistanceMatrix d = all_pairs_distances(g);
        const auto od = oracle::distances(g);
        for (Vertex w = 0; w < g.n(); ++w)
            oracle::enumerate_bfs_trees(g, w, 5000, [&](const std::vector<Vertex>& parent) {
                const BfsTree t = bfs_tree_from_parents(g, w, parent);
                const auto rho = rooted_insize_dense(d, t).rho;
                EXPECT_EQ(rho, rooted_insize_sparse(g, t).rho);
                EXPECT_EQ(rho, rooted_thinness_mu(d, t));
                EXPECT_EQ(static_cast<int>(rho), oracle::rooted_insize(od, w, parent));
            });
    }
}

TEST(ApproxHyperbolicity, Bounds) {
    const ApproxBounds tree = approx_hyperbolicity(gen_random_tree(10, 1), 0);
    EXPECT_EQ(tree.rho, 0u);
    EXPECT_EQ(tree.lower, HalfInt::from_int(0));
    EXPECT_EQ(tree.upper, HalfInt::from_int(1));

    const Generated h = gen_Hk(2);
    const ApproxBounds hb = bounds_from_rho(rooted_insize_sparse(h.graph, *h.tree).rho);
    EXPECT_EQ(hb.rho, 8u);
    EXPECT_EQ(hb.lower, HalfInt::from_int(2));
    EXPECT_EQ(hb.upper, HalfInt::from_int(17));

    // rho/4 is not always on the half-integer lattice; the lower bound rounds up.
    EXPECT_EQ(bounds_from_rho(3).lower, HalfInt::from_int(1));
    EXPECT_EQ(bounds_from_rho(5).lower, HalfInt::from_doubled(3));
}

TEST(ApproxHyperbolicity, ContainsDelta) {
    for (const auto& [name, g] : corpus::random_graphs(60, 4, 40, 37)) {
        const HalfInt delta = hyperbolicity_exact(all_pairs_distances(g)).value;
        for (Vertex w = 0; w < g.n(); w += 4) {
            const ApproxBounds b = approx_hyperbolicity(g, w);
            EXPECT_LE(b.lower, delta) << name;
            EXPECT_LE(delta, b.upper) << name;
        }
    }
}

TEST(ApproxDistances, ExactInputReducesToRho) {
    const Generated h = gen_Hk(2);
    const DistanceMatrix d = all_pairs_distances(h.graph);
    const auto row = bfs_distances(h.graph, h.tree->root());
    const ApproxDistInsize a = rooted_insize_approx_dist(d, 0, *h.tree, row);
    EXPECT_EQ(a.rho_hat, 8u);
    EXPECT_EQ(a.upper, HalfInt::from_int(17));
}

TEST(ApproxDistances, PlusOneNoise) {
    const Generated h = gen_Hk(2);
    const DistanceMatrix d = all_pairs_distances(h.graph);
    const std::size_t n = d.n();
    SquareMatrix<std::uint32_t> dhat(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) dhat(u, v) = d(u, v) + (u == v ? 0 : 1);
    // Root row exact; the additive error only affects other pairs.
    for (Vertex v = 0; v < n; ++v) dhat(h.tree->root(), v) = dhat(v, h.tree->root()) = d(h.tree->root(), v);
    const auto row = bfs_distances(h.graph, h.tree->root());
    const ApproxDistInsize a = rooted_insize_approx_dist(dhat, 1, *h.tree, row);
    EXPECT_LE(HalfInt::from_int(2), a.upper);
    EXPECT_LE(a.lower, HalfInt::from_int(2));
}

TEST(ApproxDistances, RejectsUnderestimates) {
    Graph g = gen_cycle(6);
    DistanceMatrix d = all_pairs_distances(g);
    SquareMatrix<std::uint32_t> dhat(6);
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = 0; v < 6; ++v) dhat(u, v) = d(u, v);
    dhat(0, 3) = 1;
    try {
        rooted_insize_approx_dist(dhat, 0, bfs(g, 0), bfs_distances(g, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ApproxViolation);
    }
}

TEST(ApproxDistances, RandomNoise) {
    std::mt19937_64 rng(41);
    for (const auto& [name, g] : corpus::random_graphs(50, 4, 30, 43)) {
        const DistanceMatrix d = all_pairs_distances(g);
        const HalfInt delta = hyperbolicity_exact(d).value;
        const std::size_t n = g.n();
        for (std::uint32_t k = 0; k <= 3; ++k) {
            SquareMatrix<std::uint32_t> dhat(n);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u; v < n; ++v)
                    dhat(u, v) = dhat(v, u) = d(u, v) + (u == v ? 0 : static_cast<std::uint32_t>(rng() % (k + 1)));
            const BfsTree t = bfs(g, 0);
            const auto row = bfs_distances(g, 0);
            for (Vertex v = 0; v < n; ++v) dhat(0, v) = dhat(v, 0) = row[v];
            const ApproxDistInsize a = rooted_insize_approx_dist(dhat, k, t, row);
            EXPECT_LE(delta, a.upper) << name << " k=" << k;
            EXPECT_LE(a.upper, delta * 8 + HalfInt::from_int(3 * k + 1)) << name << " k=" << k;
            if (k == 0) { EXPECT_EQ(a.rho_hat, rooted_insize_dense(d, t).rho); }
        }
    }
}

TEST(PowerGraph, Examples) {
    Graph g = gen_path(4);
    EXPECT_EQ(power_graph(g, 1), g);
    Graph sq = power_graph(g, 2);
    EXPECT_TRUE(sq.adjacent(0, 2));
    EXPECT_TRUE(sq.adjacent(1, 3));
    EXPECT_FALSE(sq.adjacent(0, 3));
    EXPECT_EQ(power_graph(gen_cycle(6), 3), gen_complete(6));
}

TEST(PowerGraph, DistanceEstimatesOnTrees) {
    Graph g = gen_random_tree(25, 3);
    const DistanceMatrix d = all_pairs_distances(g);
    const BfsTree t = bfs(g, 0);
    const auto est = distances_from_power(power_graph(g, 1), t, 1);
    for (Vertex x = 0; x < g.n(); ++x)
        for (Vertex y = 0; y < g.n(); ++y) {
            EXPECT_LE(std::int64_t{d(x, y)} - 1, std::int64_t{est(x, y)});
            EXPECT_LE(est(x, y), d(x, y) + 2u);
        }
}

TEST(Minsize, Trees) {
    const MinsizeResult r = minsize_search(gen_random_tree(12, 5), 100000);
    EXPECT_TRUE(r.exhausted);
    ASSERT_TRUE(r.best.has_value());
    EXPECT_EQ(*r.best, 0u);
}

TEST(Minsize, MatchesExhaustiveOracle) {
    for (const auto& [name, g] : corpus::random_graphs(30, 3, 9, 47)) {
        const MinsizeResult r = minsize_search(g, 10'000'000);
        ASSERT_TRUE(r.exhausted) << name;
        EXPECT_EQ(static_cast<int>(*r.best), oracle::extreme_rooted_insize(g, false, 1'000'000)) << name;
        const BfsTree t = bfs_tree_from_parents(g, r.root, r.parent);
        EXPECT_EQ(rooted_insize_dense(all_pairs_distances(g), t).rho, *r.best);

        const MaxsizeResult m = maxsize_over_trees(g, 10'000'000);
        ASSERT_TRUE(m.exhausted);
        EXPECT_EQ(static_cast<int>(m.best), oracle::extreme_rooted_insize(g, true, 1'000'000)) << name;
    }
}

TEST(Minsize, CutoffAndBudget) {
    const Generated h = gen_HkStar(2);
    const MinsizeResult r = minsize_search(h.graph, 2000, 5);
    EXPECT_FALSE(r.best.has_value());
    EXPECT_FALSE(r.exhausted);
    EXPECT_LE(r.leaves, 2000u);
}

TEST(Maxsize, EqualsInsize) {
    for (const auto& [name, g] : corpus::random_graphs(20, 3, 10, 53)) {
        const MaxsizeResult m = maxsize_over_trees(g, 10'000'000);
        ASSERT_TRUE(m.exhausted);
        EXPECT_EQ(HalfInt::from_int(m.best), thinness_exact(g).value) << name;
    }
}
