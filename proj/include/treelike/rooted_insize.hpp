#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <tuple>
#include <vector>

#include "treelike/bfs_tree.hpp"
#include "treelike/distance.hpp"
#include "treelike/error.hpp"
#include "treelike/graph.hpp"
#include "treelike/half_int.hpp"
#include "treelike/matrix.hpp"
#include "treelike/parallel.hpp"

namespace treelike {

// The pair realizing a rooted insize value. x <= y; r = floor((x|y)_w);
// x_y and y_x are the tree-path vertices of x and y at depth r.
struct InsizeWitness {
    Vertex x = 0;
    Vertex y = 0;
    std::uint32_t r = 0;
    Vertex x_y = 0;
    Vertex y_x = 0;
    std::uint32_t dist = 0;

    friend bool operator==(const InsizeWitness&, const InsizeWitness&) = default;
};

struct RootedInsize {
    std::uint32_t rho = 0;
    InsizeWitness witness;
};

// Certified bounds on delta derived from a rooted insize rho:
// rho <= 4 delta gives the lower bound (rounded up to the half-integer
// lattice delta lives on), delta <= 2 rho + 1 the upper.
struct ApproxBounds {
    std::uint32_t rho = 0;
    HalfInt lower;
    HalfInt upper;
};

inline ApproxBounds bounds_from_rho(std::uint32_t rho) {
    return {rho, HalfInt::from_doubled((std::int64_t{rho} + 1) / 2),
            HalfInt::from_int(2 * std::int64_t{rho} + 1)};
}

namespace detail {

// Strictly better: larger value, or equal value with a lexicographically
// smaller (x, y).
inline bool better(std::uint32_t value, Vertex x, Vertex y, std::int64_t best_value,
                   const InsizeWitness& best) {
    if (std::int64_t{value} != best_value) return std::int64_t{value} > best_value;
    return std::tie(x, y) < std::tie(best.x, best.y);
}

inline void require_matching_tree(const DistanceMatrix& d, const BfsTree& t) {
    if (t.n() != d.n()) throw Error(ErrorCode::TreeMismatch, "tree and matrix sizes differ");
    const auto root_row = d.row(t.root());
    for (Vertex v = 0; v < t.n(); ++v)
        if (t.depth(v) != root_row[v])
            throw Error(ErrorCode::TreeMismatch,
                        "depth of " + std::to_string(v) + " differs from d(root, v)");
}

// Vertices in depth-first preorder of the tree (children ascending).
inline std::vector<Vertex> preorder(const BfsTree& t) {
    auto [offsets, kids] = t.children();
    std::vector<Vertex> order;
    order.reserve(t.n());
    std::vector<Vertex> stack{t.root()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (std::size_t i = offsets[v + 1]; i > offsets[v]; --i) stack.push_back(kids[i - 1]);
    }
    return order;
}

}  // namespace detail

// rho_{w,T}(G) = max over pairs of d(x_y, y_x), O(n^2) with the level-ancestor
// table. Ties go to the lexicographically smallest pair.
inline RootedInsize rooted_insize_dense(const DistanceMatrix& d, const BfsTree& t,
                                        unsigned threads = 1) {
    detail::require_matching_tree(d, t);
    const std::size_t n = d.n();
    const AncestorTable& anc = t.ancestors();
    std::vector<RootedInsize> per_x(n);
    parallel_for(n, threads, [&](std::size_t xi) {
        const auto x = static_cast<Vertex>(xi);
        const auto rx = d.row(x);
        const auto row_x = anc.row(x);
        const std::uint32_t dx = t.depth(x);
        std::int64_t best_value = -1;
        InsizeWitness best;
        for (Vertex y = x; y < n; ++y) {
            const std::uint32_t r = (dx + t.depth(y) - rx[y]) / 2;
            const Vertex a = row_x[r];
            const Vertex b = anc.at(y, r);
            const std::uint32_t value = d(a, b);
            if (std::int64_t{value} > best_value) {
                best_value = value;
                best = {x, y, r, a, b, value};
            }
        }
        per_x[xi] = {static_cast<std::uint32_t>(best_value), best};
    });
    RootedInsize out;
    std::int64_t best_value = -1;
    for (const auto& c : per_x)
        if (std::int64_t{c.rho} > best_value) {
            best_value = c.rho;
            out = c;
        }
    return out;
}

// Same value and witness as the dense routine, from the adjacency lists only:
// one BFS per vertex x, visited in tree preorder, maintaining the path map
// P_x and the map Q_x(v) = d(v, P_x(depth v)) for depth(v) <= depth(x).
// Extra memory is O(n).
inline RootedInsize rooted_insize_sparse(const Graph& g, const BfsTree& t) {
    const std::size_t n = g.n();
    if (t.n() != n) throw Error(ErrorCode::TreeMismatch, "tree and graph sizes differ");
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    const auto order = detail::preorder(t);
    const std::uint32_t height = t.height();

    std::vector<Vertex> path_x(height + 1), path_y(height + 1);
    std::vector<std::uint32_t> q(n, kInf);
    std::vector<std::uint32_t> dist;
    std::vector<Vertex> queue;

    std::int64_t best_value = -1;
    InsizeWitness best;
    for (Vertex x : order) {
        const std::uint32_t dx = t.depth(x);
        path_x[dx] = x;
        bfs_distances(g, x, dist, queue);
        for (Vertex v = 0; v < n; ++v) {
            const std::uint32_t dv = t.depth(v);
            if (dv > dx)
                q[v] = kInf;
            else if (dv == dx)
                q[v] = dist[v];
        }
        for (Vertex y : order) {
            const std::uint32_t dy = t.depth(y);
            path_y[dy] = y;
            const std::uint32_t r = (dx + dy - dist[y]) / 2;
            const Vertex yx = path_y[r];
            const std::uint32_t value = q[yx];
            const Vertex lo = std::min(x, y), hi = std::max(x, y);
            if (detail::better(value, lo, hi, best_value, best)) {
                best_value = value;
                const Vertex xy = path_x[r];
                best = x <= y ? InsizeWitness{x, y, r, xy, yx, value}
                              : InsizeWitness{y, x, r, yx, xy, value};
            }
        }
    }
    return {static_cast<std::uint32_t>(best_value), best};
}

inline RootedInsize rooted_insize_sparse(const Graph& g, Vertex w) {
    return rooted_insize_sparse(g, bfs(g, w));
}

// delta(G) <= 2 rho + 1 <= 8 delta(G) + 1, in O(nm) time and linear space.
inline ApproxBounds approx_hyperbolicity(const Graph& g, Vertex w) {
    return bounds_from_rho(rooted_insize_sparse(g, w).rho);
}

// mu_{w,T}(G): like rho but every depth r <= floor((x|y)_w) is inspected.
// O(n^3); used to cross-check rho.
inline std::uint32_t rooted_thinness_mu(const DistanceMatrix& d, const BfsTree& t) {
    detail::require_matching_tree(d, t);
    const std::size_t n = d.n();
    const AncestorTable& anc = t.ancestors();
    std::uint32_t best = 0;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x; y < n; ++y) {
            const std::uint32_t top = (t.depth(x) + t.depth(y) - d(x, y)) / 2;
            for (std::uint32_t r = 0; r <= top; ++r)
                best = std::max<std::uint32_t>(best, d(anc.at(x, r), anc.at(y, r)));
        }
    return best;
}

template <class M>
concept SquareLookup = requires(const M& m, Vertex u, Vertex v) {
    { m.n() } -> std::convertible_to<std::size_t>;
    { m(u, v) } -> std::convertible_to<std::int64_t>;
};

struct ApproxDistInsize {
    std::uint32_t rho_hat = 0;
    InsizeWitness witness;  // dist holds Dhat(x_y, y_x)
    HalfInt lower;          // delta >= (rho_hat - k) / 4, rounded up to the lattice
    HalfInt upper;          // delta <= 2 rho_hat + k + 1
};

// Rooted insize from distances known only up to an additive error k:
// d <= dhat <= d + k. Depths come from the exact root row. The Gromov
// product is taken with dhat and clamped below at 0.
template <SquareLookup M>
ApproxDistInsize rooted_insize_approx_dist(const M& dhat, std::uint32_t k, const BfsTree& t,
                                           std::span<const std::uint32_t> root_row) {
    const std::size_t n = t.n();
    if (dhat.n() != n || root_row.size() != n)
        throw Error(ErrorCode::InvalidArgument, "approximate matrix size mismatch");
    for (Vertex v = 0; v < n; ++v) {
        if (root_row[v] != t.depth(v))
            throw Error(ErrorCode::TreeMismatch, "root row disagrees with tree depths");
        if (std::int64_t(dhat(t.root(), v)) < root_row[v] ||
            std::int64_t(dhat(v, t.root())) < root_row[v])
            throw Error(ErrorCode::ApproxViolation,
                        "dhat below the exact distance to the root at " + std::to_string(v));
    }
    const AncestorTable& anc = t.ancestors();
    std::int64_t best_value = -1;
    InsizeWitness best;
    for (Vertex x = 0; x < n; ++x) {
        const std::int64_t dx = root_row[x];
        for (Vertex y = x; y < n; ++y) {
            const std::int64_t dy = root_row[y];
            const std::int64_t dxy = dhat(x, y);
            // |d(w,x) - d(w,y)| <= d(x,y) <= dhat(x,y)
            if (dxy < (dx > dy ? dx - dy : dy - dx) || (x != y && dxy < 1))
                throw Error(ErrorCode::ApproxViolation, "dhat(" + std::to_string(x) + "," +
                                                            std::to_string(y) +
                                                            ") is below a certified lower bound");
            const std::int64_t twice = dx + dy - dxy;
            const auto r = static_cast<std::uint32_t>(twice > 0 ? twice / 2 : 0);
            const Vertex a = anc.at(x, r), b = anc.at(y, r);
            const std::int64_t value = dhat(a, b);
            if (value > best_value) {
                best_value = value;
                best = {x, y, r, a, b, static_cast<std::uint32_t>(value)};
            }
        }
    }
    ApproxDistInsize out;
    out.rho_hat = static_cast<std::uint32_t>(best_value);
    out.witness = best;
    const std::int64_t excess = best_value - std::int64_t{k};
    out.lower = HalfInt::from_doubled(excess > 0 ? (excess + 1) / 2 : 0);
    out.upper = HalfInt::from_int(2 * best_value + k + 1);
    return out;
}

// G^k: same vertices, u ~ v whenever 1 <= d(u,v) <= k.
inline Graph power_graph(const Graph& g, std::uint32_t k) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "power must be at least 1");
    const std::size_t n = g.n();
    std::vector<Edge> edges;
    std::vector<std::uint32_t> dist(n, kUnreached);
    std::vector<Vertex> frontier, reached;
    for (Vertex s = 0; s < n; ++s) {
        reached.assign(1, s);
        dist[s] = 0;
        for (std::size_t head = 0; head < reached.size(); ++head) {
            const Vertex v = reached[head];
            if (dist[v] == k) continue;
            for (Vertex u : g.neighbors(v))
                if (dist[u] == kUnreached) {
                    dist[u] = dist[v] + 1;
                    reached.push_back(u);
                }
        }
        for (Vertex v : reached) {
            if (s < v) edges.emplace_back(s, v);
            dist[v] = kUnreached;
        }
    }
    return Graph::from_edges(n, edges);
}

// Distance estimate from G^k and a BFS tree of G:
//   dhat(x,y) = d(x, x(r)) + k + d(y(r), y),  r = r_xy(k),
// where r_xy(k) is the largest r such that x(r') and y(r') are equal or
// adjacent in G^k for every r' <= r (x(r) clamps to x beyond depth(x)).
// When every level agrees, r is unbounded and dhat = k.
// For k >= rho_{w,T}(G), d <= dhat + 1 <= d + k + 1.
inline SquareMatrix<std::uint32_t> distances_from_power(const Graph& gk, const BfsTree& t,
                                                         std::uint32_t k) {
    const std::size_t n = gk.n();
    if (t.n() != n) throw Error(ErrorCode::TreeMismatch, "tree and graph sizes differ");
    constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> adj(n * words, 0);
    for (Vertex u = 0; u < n; ++u) {
        adj[u * words + u / 64] |= std::uint64_t{1} << (u % 64);
        for (Vertex v : gk.neighbors(u)) adj[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    }
    auto close = [&](Vertex a, Vertex b) { return (adj[a * words + b / 64] >> (b % 64)) & 1u; };

    const AncestorTable& anc = t.ancestors();
    const auto order = detail::preorder(t);
    SquareMatrix<std::uint32_t> out(n, 0);
    std::vector<std::uint32_t> first_bad(n, kNever);
    for (Vertex x = 0; x < n; ++x) {
        const std::uint32_t dx = t.depth(x);
        for (Vertex y : order) {
            const std::uint32_t dy = t.depth(y);
            const Vertex p = t.parent(y);
            std::uint32_t fb = p == kNoVertex ? kNever : first_bad[p];
            if (fb == kNever && !close(anc.at_clamped(x, dy), y)) fb = dy;
            first_bad[y] = fb;
            if (dy < dx) continue;  // filled from y's side
            std::uint32_t est = k;
            if (fb != kNever) {
                const std::uint32_t r = fb - 1;
                est = (dx - std::min(r, dx)) + k + (dy - std::min(r, dy));
            }
            out(x, y) = est;
            out(y, x) = est;
        }
    }
    return out;
}

}  // namespace treelike
