#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treelike/bfs_tree.hpp"
#include "treelike/distance.hpp"
#include "treelike/error.hpp"
#include "treelike/graph.hpp"

namespace treelike {

// A generated graph with named vertices and, where the construction
// prescribes one, a BFS tree.
struct Generated {
    Graph graph;
    std::optional<BfsTree> tree;
    std::map<std::string, std::vector<Vertex>> roles;
    std::map<Vertex, std::pair<int, int>> coords;
};

namespace detail {

// Lattice points of a planar grid piece, ids assigned row-major (row r, then column c).
class Lattice {
public:
    Lattice(int c_min, int c_max, int r_min, int r_max)
        : c_min_(c_min), r_min_(r_min), cols_(c_max - c_min + 1), rows_(r_max - r_min + 1),
          id_(static_cast<std::size_t>(cols_ * rows_), kNoVertex) {}

    template <class Keep>
    void assign(Keep keep) {
        for (int r = r_min_; r < r_min_ + rows_; ++r)
            for (int c = c_min_; c < c_min_ + cols_; ++c)
                if (keep(c, r)) {
                    slot(c, r) = static_cast<Vertex>(points_.size());
                    points_.emplace_back(c, r);
                }
    }

    Vertex id(int c, int r) const {
        if (c < c_min_ || r < r_min_ || c >= c_min_ + cols_ || r >= r_min_ + rows_) return kNoVertex;
        return id_[index(c, r)];
    }

    const std::vector<std::pair<int, int>>& points() const { return points_; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex v = 0; v < points_.size(); ++v) {
            auto [c, r] = points_[v];
            if (Vertex u = id(c + 1, r); u != kNoVertex) out.emplace_back(v, u);
            if (Vertex u = id(c, r + 1); u != kNoVertex) out.emplace_back(v, u);
        }
        return out;
    }

private:
    std::size_t index(int c, int r) const {
        return static_cast<std::size_t>((r - r_min_) * cols_ + (c - c_min_));
    }
    Vertex& slot(int c, int r) { return id_[index(c, r)]; }

    int c_min_, r_min_, cols_, rows_;
    std::vector<Vertex> id_;
    std::vector<std::pair<int, int>> points_;
};

inline void require_k(int k, int least) {
    if (k < least)
        throw Error(ErrorCode::InvalidArgument, "k must be at least " + std::to_string(least));
}

inline void require_positive(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "size must be positive");
}

// Uniform double in [0,1) from the top 53 bits; identical on every platform.
inline double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// Staircase grid H_k: the (2k+1) x (2k+1) grid with corner w = (0,0) (column,
// row) minus the k x k block of points with both coordinates above k.
// x = (k, 2k) and y = (2k, k) are the inner corners of the staircase. The
// tree runs along the boundary: w down the left side and along the bottom to
// x, and w along the top and down the right side to y.
inline Generated gen_Hk(int k) {
    detail::require_k(k, 1);
    const int s = 2 * k;
    detail::Lattice lat(0, s, 0, s);
    lat.assign([&](int c, int r) { return !(c > k && r > k); });
    Generated out;
    out.graph = Graph::from_edges(lat.points().size(), lat.edges());

    const Vertex w = lat.id(0, 0), x = lat.id(k, s), y = lat.id(s, k);
    const Vertex xy = lat.id(0, s), yx = lat.id(s, 0);
    const auto dw = bfs_distances(out.graph, w);
    const auto dx = bfs_distances(out.graph, x);
    if (dw[x] != 3u * k || dw[y] != 3u * k || dx[y] != 2u * k)
        throw Error(ErrorCode::InvalidArgument, "staircase grid identities failed");

    std::vector<Vertex> parent(out.graph.n(), kNoVertex);
    for (int r = 1; r <= s; ++r) parent[lat.id(0, r)] = lat.id(0, r - 1);
    for (int c = 1; c <= k; ++c) parent[lat.id(c, s)] = lat.id(c - 1, s);
    for (int c = 1; c <= s; ++c) parent[lat.id(c, 0)] = lat.id(c - 1, 0);
    for (int r = 1; r <= k; ++r) parent[lat.id(s, r)] = lat.id(s, r - 1);
    for (Vertex v = 0; v < out.graph.n(); ++v) {
        if (v == w || parent[v] != kNoVertex) continue;
        for (Vertex u : out.graph.neighbors(v))
            if (dw[u] + 1 == dw[v]) {
                parent[v] = u;
                break;
            }
    }
    out.tree = bfs_tree_from_parents(out.graph, w, parent);
    out.roles = {{"w", {w}}, {"x", {x}}, {"y", {y}}, {"x_y", {xy}}, {"y_x", {yx}}};
    for (Vertex v = 0; v < lat.points().size(); ++v) out.coords[v] = lat.points()[v];
    return out;
}

// Square grid G_k on [-2k, 2k]^2 centered at w. Each vertex's tree parent
// moves one step toward w: along the larger coordinate while it exceeds the
// smaller one in absolute value, vertically on the diagonal.
inline Generated gen_Gk(int k) {
    detail::require_k(k, 1);
    const int s = 2 * k;
    detail::Lattice lat(-s, s, -s, s);
    lat.assign([](int, int) { return true; });
    Generated out;
    out.graph = Graph::from_edges(lat.points().size(), lat.edges());
    const Vertex w = lat.id(0, 0);

    auto toward_zero = [](int v) { return v > 0 ? v - 1 : v + 1; };
    std::vector<Vertex> parent(out.graph.n(), kNoVertex);
    for (Vertex v = 0; v < out.graph.n(); ++v) {
        if (v == w) continue;
        auto [c, r] = lat.points()[v];
        const int a = std::abs(c), b = std::abs(r);
        parent[v] = a <= b ? lat.id(c, toward_zero(r)) : lat.id(toward_zero(c), r);
    }
    out.tree = bfs_tree_from_parents(out.graph, w, parent);
    out.roles = {{"w", {w}}};
    for (Vertex v = 0; v < lat.points().size(); ++v) out.coords[v] = lat.points()[v];
    return out;
}

// H*_k: delete x_y and y_x from H_k, join the neighbors of each deleted
// vertex, and glue two copies of the result at w.
inline Generated gen_HkStar(int k) {
    detail::require_k(k, 2);
    const Generated h = gen_Hk(k);
    const Vertex w = h.roles.at("w")[0];
    const Vertex cut[2] = {h.roles.at("x_y")[0], h.roles.at("y_x")[0]};

    const std::size_t n = h.graph.n();
    std::vector<Vertex> local(n, kNoVertex);
    Vertex next = 0;
    local[w] = next++;
    for (Vertex v = 0; v < n; ++v)
        if (v != w && v != cut[0] && v != cut[1]) local[v] = next++;
    std::vector<Edge> half;
    for (auto [u, v] : h.graph.edges())
        if (local[u] != kNoVertex && local[v] != kNoVertex) half.emplace_back(local[u], local[v]);
    for (Vertex c : cut) {
        auto nb = h.graph.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                half.emplace_back(local[nb[i]], local[nb[j]]);
    }

    const Vertex half_n = next;
    auto second = [&](Vertex v) { return v == 0 ? Vertex{0} : v + half_n - 1; };
    std::vector<Edge> edges = half;
    for (auto [u, v] : half) edges.emplace_back(second(u), second(v));

    Generated out;
    out.graph = Graph::from_edges(2 * std::size_t{half_n} - 1, edges);
    out.roles = {{"w", {0}},
                 {"x", {local[h.roles.at("x")[0]], second(local[h.roles.at("x")[0]])}},
                 {"y", {local[h.roles.at("y")[0]], second(local[h.roles.at("y")[0]])}}};
    return out;
}

inline Graph gen_path(std::size_t n) {
    detail::require_positive(n);
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

inline Graph gen_cycle(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::from_edges(n, edges);
}

inline Graph gen_complete(std::size_t n) {
    detail::require_positive(n);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Center 0 and n - 1 leaves.
inline Graph gen_star(std::size_t n) {
    detail::require_positive(n);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(n, edges);
}

// Vertex v > 0 attaches to a uniformly chosen earlier vertex.
inline Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
    detail::require_positive(n);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
    return Graph::from_edges(n, edges);
}

// G(n,p) conditioned on connectivity: redraws with the same stream until connected.
inline Graph gen_gnp_connected(std::size_t n, double p, std::uint64_t seed,
                               unsigned max_attempts = 10000) {
    detail::require_positive(n);
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (detail::unit_real(rng) < p) edges.emplace_back(u, v);
        try {
            return Graph::from_edges(n, edges);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Disconnected) throw;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "no connected sample found; p too small");
}

struct FamilyParams {
    std::size_t n = 0;
    int k = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// Families by name: hk, gk, hkstar (use k); path, cycle, complete, star,
// random_tree, gnp (use n, p, seed).
inline Generated gen_family(std::string_view tag, const FamilyParams& params) {
    if (tag == "hk") return gen_Hk(params.k);
    if (tag == "gk") return gen_Gk(params.k);
    if (tag == "hkstar") return gen_HkStar(params.k);
    Generated out;
    if (tag == "path") out.graph = gen_path(params.n);
    else if (tag == "cycle") out.graph = gen_cycle(params.n);
    else if (tag == "complete") out.graph = gen_complete(params.n);
    else if (tag == "star") out.graph = gen_star(params.n);
    else if (tag == "random_tree") out.graph = gen_random_tree(params.n, params.seed);
    else if (tag == "gnp" || tag == "gnp_connected") out.graph = gen_gnp_connected(params.n, params.p, params.seed);
    else throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(tag) + "'");
    return out;
}

}  // namespace treelike
