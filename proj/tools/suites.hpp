#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "treelike/oracles.hpp"
#include "treelike/treelike.hpp"

namespace cli {

using namespace treelike;
using nlohmann::json;

struct Violation {
    std::optional<Graph> graph;
    json context;
};

struct SuiteResult {
    std::size_t checks = 0;
    std::size_t graphs = 0;
    std::vector<Violation> violations;
};

struct SuiteOptions {
    std::size_t seeds = 20;
    std::size_t max_n = 0;  // 0 picks the suite default
    unsigned threads = 1;
};

// Connected G(n,p) sample; p sweeps from just above the connectivity
// threshold to dense as the seed advances.
inline Graph sample_graph(std::size_t seed, std::size_t n_min, std::size_t n_max) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ seed);
    const std::size_t n = n_min + rng() % (n_max - n_min + 1);
    const double spread[] = {0.9, 1.2, 1.6, 2.5, 4.0};
    const double base = std::max(1.0, std::log(static_cast<double>(n))) / static_cast<double>(n);
    return gen_gnp_connected(n, std::min(1.0, base * spread[seed % 5]), rng());
}

class Recorder {
public:
    explicit Recorder(SuiteResult& out) : out_(out) {}

    void expect(bool cond, const Graph* g, json context) {
        ++out_.checks;
        if (cond) return;
        out_.violations.push_back({g ? std::optional<Graph>(*g) : std::nullopt, std::move(context)});
    }

private:
    SuiteResult& out_;
};

inline SuiteResult suite_inequalities(const SuiteOptions& opt) {
    SuiteResult out;
    Recorder rec(out);
    const std::size_t max_n = opt.max_n ? opt.max_n : 40;
    for (std::size_t s = 0; s < opt.seeds; ++s) {
        const Graph g = sample_graph(s, std::min<std::size_t>(4, max_n), max_n);
        ++out.graphs;
        const DistanceMatrix d = all_pairs_distances(g, opt.threads);
        const std::int64_t delta = hyperbolicity_exact(d, opt.threads).value.doubled();
        const std::int64_t tau = thinness_exact(g, d, opt.threads).value.doubled();
        const std::int64_t sigma = slimness_exact(g, d, opt.threads).value.doubled();
        const std::int64_t kappa = interval_thinness(d, opt.threads).value.doubled();
        const CollectionParams cp = collection_params(g, d, opt.threads);
        const std::int64_t rt = 2 * std::int64_t{cp.rho_t}, kt = 2 * std::int64_t{cp.kappa_t};
        json base = {{"seed", s},
                     {"delta_x2", delta},
                     {"tau_x2", tau},
                     {"sigma_x2", sigma},
                     {"kappa_x2", kappa},
                     {"rho_T", cp.rho_t},
                     {"kappa_T", cp.kappa_t}};
        auto check = [&](bool cond, const char* what) {
            json c = base;
            c["inequality"] = what;
            rec.expect(cond, &g, c);
        };
        check(delta - 1 <= tau && tau <= 4 * delta, "delta - 1/2 <= tau <= 4 delta");
        check(sigma <= tau && tau <= 4 * sigma, "sigma <= tau <= 4 sigma");
        check(delta - 1 <= 2 * sigma && 2 * sigma <= 6 * delta + 2, "delta - 1/2 <= 2 sigma <= 6 delta + 1");
        check(kappa <= std::min({tau, 2 * delta, 2 * sigma}), "kappa <= min(tau, 2 delta, 2 sigma)");
        check(tau <= rt + 2 * kt && rt + 2 * kt <= 3 * rt && rt <= tau, "tau <= rho_T + 2 kappa_T <= 3 rho_T <= 3 tau");
        check(sigma <= rt + 2 * kt && rt + 2 * kt <= 8 * sigma, "sigma <= rho_T + 2 kappa_T <= 8 sigma");
        for (Vertex w = 0; w < g.n(); ++w) {
            const std::int64_t rho = rooted_insize_dense(d, bfs(g, w)).rho;
            json c = base;
            c["root"] = w;
            c["rho"] = rho;
            c["inequality"] = "rho/4 <= delta <= 2 rho + 1, tau <= 7 rho + 4, sigma <= 6 rho + 3";
            rec.expect(rho <= 2 * delta && delta <= 4 * rho + 2 && tau <= 14 * rho + 8 && sigma <= 12 * rho + 6,
                       &g, c);
        }
    }
    return out;
}

inline SuiteResult suite_oracles(const SuiteOptions& opt) {
    SuiteResult out;
    Recorder rec(out);
    const std::size_t max_n = opt.max_n ? opt.max_n : 12;
    for (std::size_t s = 0; s < opt.seeds; ++s) {
        const Graph g = sample_graph(s, std::min<std::size_t>(2, max_n), max_n);
        ++out.graphs;
        const DistanceMatrix d = all_pairs_distances(g);
        const auto od = oracle::distances(g);
        for (Vertex w = 0; w < g.n(); ++w) {
            const BfsTree t = bfs(g, w);
            const RootedInsize dense = rooted_insize_dense(d, t);
            const RootedInsize sparse = rooted_insize_sparse(g, t);
            const int brute = oracle::rooted_insize(od, w, {t.parents().begin(), t.parents().end()});
            rec.expect(dense.rho == sparse.rho && dense.witness == sparse.witness, &g,
                       {{"seed", s}, {"root", w}, {"check", "sparse = dense"}});
            rec.expect(rooted_thinness_mu(d, t) == dense.rho, &g, {{"seed", s}, {"root", w}, {"check", "rho = mu"}});
            rec.expect(static_cast<int>(dense.rho) == brute, &g,
                       {{"seed", s}, {"root", w}, {"check", "rho = definition scan"}});
        }
        for (Vertex x = 0; x < g.n(); ++x)
            rec.expect(static_cast<int>(pointed_thinness(d, g, x).value) == oracle::pointed_thinness(od, x), &g,
                       {{"seed", s}, {"x", x}, {"check", "pointed thinness DP = definition scan"}});
        if (g.n() <= 9)
            rec.expect(slimness_exact(g, d).value == HalfInt::from_int(oracle::slimness(od, g)), &g,
                       {{"seed", s}, {"check", "slimness = geodesic enumeration"}});
        if (g.n() <= 10) {
            const MaxsizeResult m = maxsize_over_trees(g, 50'000'000);
            rec.expect(m.exhausted && HalfInt::from_int(m.best) == thinness_exact(g, d).value, &g,
                       {{"seed", s}, {"check", "maxsize over all trees = thinness"}});
        }
    }
    return out;
}

inline SuiteResult suite_grids(const SuiteOptions& opt) {
    SuiteResult out;
    Recorder rec(out);
    for (int k = 1; k <= 3; ++k) {
        const Generated h = gen_Hk(k);
        const DistanceMatrix d = all_pairs_distances(h.graph, opt.threads);
        const HalfInt delta = hyperbolicity_exact(d, opt.threads).value;
        const std::uint32_t rho = rooted_insize_dense(d, *h.tree).rho;
        ++out.graphs;
        rec.expect(delta == HalfInt::from_int(k) && rho == 4u * k, &h.graph,
                   {{"family", "hk"}, {"k", k}, {"delta", delta.to_string()}, {"rho", rho}});
    }
    for (int k = 1; k <= 2; ++k) {
        const Generated g = gen_Gk(k);
        const DistanceMatrix d = all_pairs_distances(g.graph, opt.threads);
        const HalfInt delta = hyperbolicity_exact(d, opt.threads).value;
        const std::uint32_t rho = rooted_insize_dense(d, *g.tree).rho;
        ++out.graphs;
        rec.expect(delta == HalfInt::from_int(4 * k) && rho <= 2u * k, &g.graph,
                   {{"family", "gk"}, {"k", k}, {"delta", delta.to_string()}, {"rho", rho}});
    }
    const Generated h = gen_HkStar(2);
    const DistanceMatrix d = all_pairs_distances(h.graph);
    ++out.graphs;
    std::mt19937_64 rng(opt.seeds);
    std::vector<Vertex> up;
    for (std::size_t i = 0; i < 50 * opt.seeds; ++i) {
        const Vertex w = static_cast<Vertex>(rng() % h.graph.n());
        const auto depth = bfs_distances(h.graph, w);
        std::vector<Vertex> parent(h.graph.n(), kNoVertex);
        for (Vertex v = 0; v < h.graph.n(); ++v) {
            if (v == w) continue;
            up.clear();
            for (Vertex u : h.graph.neighbors(v))
                if (depth[u] + 1 == depth[v]) up.push_back(u);
            parent[v] = up[rng() % up.size()];
        }
        const std::uint32_t rho = rooted_insize_dense(d, bfs_tree_from_parents(h.graph, w, parent)).rho;
        rec.expect(rho >= 6, &h.graph, {{"family", "hkstar"}, {"k", 2}, {"root", w}, {"parent", parent}, {"rho", rho}});
    }
    return out;
}

inline SuiteResult suite_sat(const SuiteOptions& opt) {
    SuiteResult out;
    Recorder rec(out);
    std::mt19937_64 rng(opt.seeds);
    std::size_t built = 0, tries = 0;
    while (built < opt.seeds && tries++ < 1000 * opt.seeds) {
        const int vars = 2 + static_cast<int>(rng() % 3);
        const int clauses = 3 + static_cast<int>(rng() % 10);
        CnfFormula phi{vars, {}};
        for (int i = 0; i < clauses; ++i) {
            std::vector<int> clause;
            const int len = 2 + static_cast<int>(rng() % 2);
            for (int l = 0; l < len; ++l) {
                const int v = 1 + static_cast<int>(rng() % vars);
                clause.push_back(rng() % 2 ? v : -v);
            }
            phi.clauses.push_back(clause);
        }
        const PreprocessResult r = preprocess_cnf(phi);
        const bool truth = oracle::sat_truth_table(phi);
        if (r.status != PreprocessResult::Status::Reduced) {
            rec.expect((r.status == PreprocessResult::Status::Satisfiable) == truth, nullptr,
                       {{"cnf", to_dimacs(phi)}, {"check", "preprocess verdict = truth table"}});
            continue;
        }
        ++built;
        const Generated gphi = sat_to_graph(r.formula);
        ++out.graphs;
        const MinsizeResult m = minsize_search(gphi.graph, 200'000'000, 1);
        rec.expect((m.best.has_value() || m.exhausted) && m.best.has_value() == truth, &gphi.graph,
                   {{"cnf", to_dimacs(phi)},
                    {"satisfiable", truth},
                    {"minsize_leq_1", m.best.has_value()},
                    {"exhausted", m.exhausted}});
    }
    return out;
}

}  // namespace cli
