#include <gtest/gtest.h>

#include "corpus.hpp"
#include "treelike/exact.hpp"
#include "treelike/generators.hpp"
#include "treelike/oracles.hpp"
#include "treelike/rooted_insize.hpp"
#include "treelike/thinness.hpp"

using namespace treelike;

TEST(GRow, Examples) {
    Graph p4 = gen_path(4);
    DistanceMatrix d = all_pairs_distances(p4);
    for (Vertex y = 0; y < 4; ++y) EXPECT_EQ(g_row(d, p4, 0, 0).value[y], 0u);
    const ProjectionRow r = g_row(d, p4, 0, 2);
    EXPECT_EQ(r.value[3], 0u);
    EXPECT_EQ(r.arg[3], 2u);
    EXPECT_EQ(r.value[1], 0u);

    Graph c4 = gen_cycle(4);
    EXPECT_EQ(g_row(all_pairs_distances(c4), c4, 0, 1).value[2], 2u);
}

TEST(HRow, Examples) {
    Graph p4 = gen_path(4);
    DistanceMatrix d = all_pairs_distances(p4);
    const DescendantRow h = h_row(d, p4, 0, 3);
    EXPECT_EQ(h.doubled[1], 6);
    EXPECT_EQ(h.doubled[3], gromov_product(d, 3, 3, 0).doubled());
    EXPECT_EQ(h.doubled[0], 2 * std::int64_t{d(0, 3)});
}

TEST(GHRows, TableInvariants) {
    for (const auto& [name, g] : corpus::random_graphs(30, 3, 20, 61)) {
        const DistanceMatrix d = all_pairs_distances(g);
        for (Vertex x = 0; x < g.n(); x += 2)
            for (Vertex w = 0; w < g.n(); ++w) {
                const ProjectionRow gr = g_row(d, g, x, w);
                const DescendantRow hr = h_row(d, g, x, w);
                for (Vertex y = 0; y < g.n(); ++y) {
                    if (d(x, y) < d(x, w)) { EXPECT_EQ(gr.value[y], 0u); }
                    if (d(x, y) == d(x, w)) { EXPECT_EQ(gr.value[y], d(w, y)); }
                    if (gr.arg[y] != kNoVertex) {
                        EXPECT_TRUE(in_interval(d, x, gr.arg[y], y));
                        EXPECT_EQ(d(x, gr.arg[y]), d(x, w));
                        EXPECT_EQ(gr.value[y], d(gr.arg[y], w));
                    }
                    // h_{x,w}(y) >= (w|y)_x, realized by a z with y in I(x,z).
                    EXPECT_GE(hr.doubled[y], gromov_product(d, w, y, x).doubled());
                    EXPECT_TRUE(in_interval(d, x, y, hr.arg[y]));
                    EXPECT_EQ(hr.doubled[y], gromov_product(d, w, hr.arg[y], x).doubled());
                }
            }
    }
}

TEST(PointedThinness, Examples) {
    Graph tree = gen_random_tree(15, 9);
    DistanceMatrix dt = all_pairs_distances(tree);
    for (Vertex x = 0; x < 15; ++x) EXPECT_EQ(pointed_thinness(dt, tree, x).value, 0u);
    Graph c4 = gen_cycle(4);
    EXPECT_EQ(pointed_thinness(all_pairs_distances(c4), c4, 0).value, 2u);
}

TEST(PointedThinness, MatchesDefinitionScan) {
    for (const auto& [name, g] : corpus::random_graphs(80, 2, 12, 67)) {
        const DistanceMatrix d = all_pairs_distances(g);
        const auto od = oracle::distances(g);
        for (Vertex x = 0; x < g.n(); ++x) {
            const PointedThinness p = pointed_thinness(d, g, x);
            ASSERT_EQ(static_cast<int>(p.value), oracle::pointed_thinness(od, x)) << name << " x=" << x;
            const auto& q = p.witness;  // x, y, z, y', z'
            EXPECT_TRUE(in_interval(d, x, q[3], q[1]));
            EXPECT_TRUE(in_interval(d, x, q[4], q[2]));
            EXPECT_EQ(d(x, q[3]), d(x, q[4]));
            EXPECT_LE(2 * std::int64_t{d(x, q[3])}, gromov_product(d, q[1], q[2], x).doubled());
            EXPECT_EQ(d(q[3], q[4]), p.value);
        }
    }
}

TEST(Thinness, Examples) {
    EXPECT_EQ(thinness_exact(gen_random_tree(20, 2)).value, HalfInt::from_int(0));
    for (std::size_t n : {1, 2, 5, 8}) EXPECT_EQ(thinness_exact(gen_complete(n)).value, HalfInt::from_int(0));
    EXPECT_EQ(thinness_exact(gen_Hk(2).graph).value, HalfInt::from_int(8));
}

TEST(Thinness, ThreadsAgree) {
    for (const auto& [name, g] : corpus::random_graphs(10, 10, 40, 71)) {
        const ParamReport a = thinness_exact(g, 1), b = thinness_exact(g, 3);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.witness, b.witness);
    }
}

TEST(Thinness, InsizeOracle) {
    for (const auto& [name, g] : corpus::random_graphs(30, 2, 9, 73)) {
        const auto od = oracle::distances(g);
        EXPECT_EQ(thinness_exact(g).value, HalfInt::from_int(oracle::insize(od, g))) << name;
    }
    Graph c4 = gen_cycle(4);
    EXPECT_EQ(oracle::insize(oracle::distances(c4), c4), 2);
}

TEST(CollectionParams, TreesAndBounds) {
    const CollectionParams t = collection_params(gen_random_tree(12, 4), all_pairs_distances(gen_random_tree(12, 4)));
    EXPECT_EQ(t.rho_t, 0u);
    EXPECT_EQ(t.kappa_t, 0u);
    EXPECT_EQ(t.tau_upper, 0u);
    for (const auto& [name, g] : corpus::random_graphs(30, 3, 25, 79)) {
        const DistanceMatrix d = all_pairs_distances(g);
        const CollectionParams c = collection_params(g, d);
        const auto tau = static_cast<std::uint32_t>(thinness_exact(g, d).value.floor());
        EXPECT_LE(tau, c.tau_upper) << name;
        EXPECT_LE(c.tau_upper, 3 * c.rho_t) << name;
        EXPECT_LE(c.rho_t, tau) << name;
    }
}

TEST(RhoDerivedBounds, Values) {
    const RhoDerivedBounds b = bounds_from_rho_for_thinness(2);
    EXPECT_EQ(b.tau_upper, 18u);
    EXPECT_EQ(b.tau_upper_coarse, 20u);
    EXPECT_EQ(b.sigma_upper, 15u);
}
