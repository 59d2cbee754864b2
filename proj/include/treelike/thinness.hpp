#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "treelike/bfs_tree.hpp"
#include "treelike/distance.hpp"
#include "treelike/graph.hpp"
#include "treelike/matrix.hpp"
#include "treelike/parallel.hpp"
#include "treelike/report.hpp"
#include "treelike/rooted_insize.hpp"

namespace treelike {

// g_w(x,y) = max{ d(y',w) : y' in I(x,y), d(x,y') = d(x,w) } for every y,
// together with a realizing y' (kNoVertex when d(x,y) < d(x,w), value 0).
struct ProjectionRow {
    std::vector<std::uint32_t> value;
    std::vector<Vertex> arg;
};

inline void g_row(const DistanceMatrix& d, const Graph& g, const LayerOrder& layers, Vertex x,
                  Vertex w, std::span<Dist> value, std::span<Vertex> arg) {
    const auto rx = d.row(x);
    const auto rw = d.row(w);
    const Dist level = rx[w];
    for (Vertex y : layers.order) {
        const Dist dy = rx[y];
        if (dy < level) {
            value[y] = 0;
            arg[y] = kNoVertex;
        } else if (dy == level) {
            value[y] = rw[y];
            arg[y] = y;
        } else {
            Dist best = 0;
            Vertex at = kNoVertex;
            for (Vertex p : g.neighbors(y))
                if (rx[p] + 1 == dy && (at == kNoVertex || value[p] > best)) {
                    best = value[p];
                    at = arg[p];
                }
            value[y] = best;
            arg[y] = at;
        }
    }
}

inline ProjectionRow g_row(const DistanceMatrix& d, const Graph& g, Vertex x, Vertex w) {
    LayerOrder layers(d, x);
    std::vector<Dist> value(d.n());
    ProjectionRow out{{}, std::vector<Vertex>(d.n())};
    g_row(d, g, layers, x, w, value, out.arg);
    out.value.assign(value.begin(), value.end());
    return out;
}

// h_{x,y}(w) = max{ (y|z)_x : w in I(x,z) }, stored doubled, for every w,
// with a realizing z.
struct DescendantRow {
    std::vector<std::int64_t> doubled;
    std::vector<Vertex> arg;
};

inline void h_row(const DistanceMatrix& d, const Graph& g, const LayerOrder& layers, Vertex x,
                  Vertex y, std::span<std::int64_t> doubled, std::span<Vertex> arg) {
    const auto rx = d.row(x);
    const auto ry = d.row(y);
    const std::int64_t dxy = rx[y];
    for (auto it = layers.order.rbegin(); it != layers.order.rend(); ++it) {
        const Vertex w = *it;
        std::int64_t best = dxy + rx[w] - ry[w];
        Vertex at = w;
        for (Vertex c : g.neighbors(w))
            if (rx[c] == rx[w] + 1 && doubled[c] > best) {
                best = doubled[c];
                at = arg[c];
            }
        doubled[w] = best;
        arg[w] = at;
    }
}

inline DescendantRow h_row(const DistanceMatrix& d, const Graph& g, Vertex x, Vertex y) {
    LayerOrder layers(d, x);
    DescendantRow out{std::vector<std::int64_t>(d.n()), std::vector<Vertex>(d.n())};
    h_row(d, g, layers, x, y, out.doubled, out.arg);
    return out;
}

// tau_x(G) as max over y, w of g_w(x,y) subject to d(x,w) <= h_{x,y}(w).
// Witness (x, y, z, y', z') with y' in I(x,y), z' in I(x,z),
// d(x,y') = d(x,z') <= (y|z)_x and d(y',z') = tau_x.
struct PointedThinness {
    std::uint32_t value = 0;
    std::vector<Vertex> witness;
};

inline PointedThinness pointed_thinness(const DistanceMatrix& d, const Graph& g, Vertex x) {
    const std::size_t n = d.n();
    const LayerOrder layers(d, x);
    SquareMatrix<Dist> gval(n);
    SquareMatrix<Vertex> garg(n);
    for (Vertex w = 0; w < n; ++w) g_row(d, g, layers, x, w, gval.row(w), garg.row(w));

    const auto rx = d.row(x);
    std::vector<std::int64_t> h(n);
    std::vector<Vertex> harg(n);
    PointedThinness out{0, {x, x, x, x, x}};
    for (Vertex y = 0; y < n; ++y) {
        h_row(d, g, layers, x, y, h, harg);
        for (Vertex w = 0; w < n; ++w)
            if (2 * std::int64_t{rx[w]} <= h[w] && gval(w, y) > out.value) {
                out.value = gval(w, y);
                out.witness = {x, y, harg[w], garg(w, y), w};
            }
    }
    return out;
}

// tau(G) = iota(G) = max over x of tau_x(G), O(n^2 m).
inline ParamReport thinness_exact(const Graph& g, const DistanceMatrix& d, unsigned threads = 1) {
    std::vector<PointedThinness> per_x(g.n());
    parallel_for(g.n(), threads, [&](std::size_t x) {
        per_x[x] = pointed_thinness(d, g, static_cast<Vertex>(x));
    });
    PointedThinness best = per_x.front();
    for (const auto& p : per_x)
        if (p.value > best.value) best = p;
    return {Param::Tau, HalfInt::from_int(best.value), best.witness, "pointed-thinness-dp"};
}

inline ParamReport thinness_exact(const Graph& g, unsigned threads = 1) {
    return thinness_exact(g, all_pairs_distances(g, threads), threads);
}

// Bounds on tau and sigma implied by one rooted insize value.
struct RhoDerivedBounds {
    std::uint32_t tau_upper = 0;        // tau <= 7 rho + 4
    std::uint32_t tau_upper_coarse = 0; // tau <= 8 rho + 4
    std::uint32_t sigma_upper = 0;      // sigma <= 6 rho + 3
};

inline RhoDerivedBounds bounds_from_rho_for_thinness(std::uint32_t rho) {
    return {7 * rho + 4, 8 * rho + 4, 6 * rho + 3};
}

// One deterministic BFS tree per root.
//   rho_T   = max_u rho_{u,T_u}
//   kappa_T = max over u, v of max{ d(a, u_i) : a in I(u,v), d(u,a) = i }
//             where u_i is the vertex at depth i of the T_u path to v.
// Both tau and sigma are at most rho_T + 2 kappa_T.
struct CollectionParams {
    std::uint32_t rho_t = 0;
    std::uint32_t kappa_t = 0;
    std::uint32_t tau_upper = 0;
    std::uint32_t sigma_upper = 0;
};

inline CollectionParams collection_params(const Graph& g, const DistanceMatrix& d,
                                          unsigned threads = 1) {
    const std::size_t n = g.n();
    std::vector<std::uint32_t> rho(n), kappa(n);
    parallel_for(n, threads, [&](std::size_t ui) {
        const auto u = static_cast<Vertex>(ui);
        const BfsTree t = bfs(g, u);
        rho[ui] = rooted_insize_dense(d, t).rho;
        const AncestorTable& anc = t.ancestors();
        const auto ru = d.row(u);
        std::uint32_t best = 0;
        for (Vertex v = 0; v < n; ++v) {
            const auto rv = d.row(v);
            const auto path = anc.row(v);
            for (Vertex a = 0; a < n; ++a)
                if (std::uint32_t{ru[a]} + rv[a] == ru[v])
                    best = std::max<std::uint32_t>(best, d(a, path[ru[a]]));
        }
        kappa[ui] = best;
    });
    CollectionParams out;
    out.rho_t = *std::max_element(rho.begin(), rho.end());
    out.kappa_t = *std::max_element(kappa.begin(), kappa.end());
    out.tau_upper = out.rho_t + 2 * out.kappa_t;
    out.sigma_upper = out.tau_upper;
    return out;
}

}  // namespace treelike
