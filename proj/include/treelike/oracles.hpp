#pragma once

// Slow definition-level reference implementations for tests. Nothing here
// reuses the distance kernels or dynamic programs of the fast paths.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <vector>

#include "treelike/cnf.hpp"
#include "treelike/error.hpp"
#include "treelike/graph.hpp"

namespace treelike::oracle {

using Table = std::vector<std::vector<int>>;
using Path = std::vector<Vertex>;

inline Table distances(const Graph& g) {
    const std::size_t n = g.n();
    Table d(n, std::vector<int>(n, -1));
    for (Vertex s = 0; s < n; ++s) {
        std::deque<Vertex> queue{s};
        d[s][s] = 0;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u : g.neighbors(v))
                if (d[s][u] < 0) {
                    d[s][u] = d[s][v] + 1;
                    queue.push_back(u);
                }
        }
    }
    return d;
}

struct GeodesicSet {
    Vertex u = 0, v = 0;
    std::vector<Path> paths;
    std::size_t count() const { return paths.size(); }
};

// Every shortest (u,v)-path, found by walking only to neighbors one step
// closer to v.
inline GeodesicSet enumerate_geodesics(const Table& d, const Graph& g, Vertex u, Vertex v,
                                       std::size_t cap = 1'000'000) {
    GeodesicSet out{u, v, {}};
    Path current{u};
    std::function<void(Vertex)> walk = [&](Vertex at) {
        if (at == v) {
            if (out.paths.size() >= cap)
                throw Error(ErrorCode::TooLarge, "geodesic count exceeds cap");
            out.paths.push_back(current);
            return;
        }
        for (Vertex next : g.neighbors(at))
            if (d[next][v] == d[at][v] - 1) {
                current.push_back(next);
                walk(next);
                current.pop_back();
            }
    };
    walk(u);
    return out;
}

// Calls visit(parent) for every BFS tree rooted at w. parent[w] = kNoVertex.
inline void enumerate_bfs_trees(const Graph& g, Vertex w, std::uint64_t cap,
                                const std::function<void(const std::vector<Vertex>&)>& visit) {
    const std::size_t n = g.n();
    const Table d = distances(g);
    std::vector<std::vector<Vertex>> options(n);
    std::uint64_t total = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (v == w) continue;
        for (Vertex u : g.neighbors(v))
            if (d[w][u] == d[w][v] - 1) options[v].push_back(u);
        if (total > cap / options[v].size())
            throw Error(ErrorCode::TooLarge, "BFS tree count exceeds cap");
        total *= options[v].size();
    }
    std::vector<std::size_t> digit(n, 0);
    std::vector<Vertex> parent(n, kNoVertex);
    for (std::uint64_t t = 0; t < total; ++t) {
        for (Vertex v = 0; v < n; ++v)
            if (v != w) parent[v] = options[v][digit[v]];
        visit(parent);
        for (Vertex v = 0; v < n; ++v) {
            if (v == w) continue;
            if (++digit[v] < options[v].size()) break;
            digit[v] = 0;
        }
    }
}

inline std::uint64_t count_bfs_trees(const Graph& g, Vertex w, std::uint64_t cap) {
    std::uint64_t count = 0;
    enumerate_bfs_trees(g, w, cap, [&](const std::vector<Vertex>&) { ++count; });
    return count;
}

// Exhaustive satisfiability check.
inline bool sat_truth_table(const CnfFormula& phi) {
    if (phi.num_vars > 24) throw Error(ErrorCode::TooLarge, "truth table limited to 24 variables");
    const std::uint32_t limit = std::uint32_t{1} << phi.num_vars;
    for (std::uint32_t assignment = 0; assignment < limit; ++assignment) {
        const bool all = std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const auto& c) {
            return std::any_of(c.begin(), c.end(), [&](int lit) {
                const bool value = (assignment >> (std::abs(lit) - 1)) & 1u;
                return lit > 0 ? value : !value;
            });
        });
        if (all) return true;
    }
    return false;
}

// Twice the Gromov product (a|b)_c.
inline int gromov_x2(const Table& d, Vertex a, Vertex b, Vertex c) {
    return d[a][c] + d[b][c] - d[a][b];
}

inline bool between(const Table& d, Vertex a, Vertex m, Vertex b) {
    return d[a][m] + d[m][b] == d[a][b];
}

// tau_x straight from the definition: y' in I(x,y), z' in I(x,z),
// d(x,y') = d(x,z') <= (y|z)_x, maximize d(y',z').
inline int pointed_thinness(const Table& d, Vertex x) {
    const auto n = static_cast<Vertex>(d.size());
    int best = 0;
    for (Vertex y = 0; y < n; ++y)
        for (Vertex z = 0; z < n; ++z) {
            const int limit_x2 = gromov_x2(d, y, z, x);
            for (Vertex yp = 0; yp < n; ++yp) {
                if (!between(d, x, yp, y) || 2 * d[x][yp] > limit_x2) continue;
                for (Vertex zp = 0; zp < n; ++zp)
                    if (d[x][zp] == d[x][yp] && between(d, x, zp, z)) best = std::max(best, d[yp][zp]);
            }
        }
    return best;
}

inline int thinness(const Table& d) {
    int best = 0;
    for (Vertex x = 0; x < d.size(); ++x) best = std::max(best, pointed_thinness(d, x));
    return best;
}

// Insize over all geodesic triangles: at each corner z, the two sides toward
// x and y are cut at depth floor((x|y)_z).
inline int insize(const Table& d, const Graph& g, std::size_t cap = 1'000'000) {
    const auto n = static_cast<Vertex>(d.size());
    std::vector<std::vector<GeodesicSet>> geo(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) geo[a].push_back(enumerate_geodesics(d, g, a, b, cap));
    int best = 0;
    for (Vertex z = 0; z < n; ++z)
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = 0; y < n; ++y) {
                const int r = gromov_x2(d, x, y, z) / 2;
                for (const Path& p : geo[z][x].paths)
                    for (const Path& q : geo[z][y].paths) best = std::max(best, d[p[r]][q[r]]);
            }
    return best;
}

inline int distance_to_path(const Table& d, Vertex u, const Path& p) {
    int best = d[u][p.front()];
    for (Vertex v : p) best = std::min(best, d[u][v]);
    return best;
}

// Slimness over all geodesic triangles, degenerate ones included. For a side
// [x,y] through u, the worst choice of the other two sides is made
// independently for [x,z] and [z,y].
inline int slimness(const Table& d, const Graph& g, std::size_t cap = 1'000'000) {
    const auto n = static_cast<Vertex>(d.size());
    std::vector<std::vector<GeodesicSet>> geo(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) geo[a].push_back(enumerate_geodesics(d, g, a, b, cap));
    // far[u][a][b]: largest distance from u to some (a,b)-geodesic.
    std::vector<std::vector<std::vector<int>>> far(
        n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b)
                for (const Path& p : geo[a][b].paths)
                    far[u][a][b] = std::max(far[u][a][b], distance_to_path(d, u, p));
    int best = 0;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            for (const Path& side : geo[x][y].paths)
                for (Vertex u : side)
                    for (Vertex z = 0; z < n; ++z)
                        best = std::max(best, std::min(far[u][x][z], far[u][z][y]));
    return best;
}

// rho_{w,T} from its definition, with explicit root paths.
inline int rooted_insize(const Table& d, Vertex w, const std::vector<Vertex>& parent) {
    const auto n = static_cast<Vertex>(d.size());
    std::vector<Path> root_path(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex a = v; a != w; a = parent[a]) root_path[v].push_back(a);
        root_path[v].push_back(w);
        std::reverse(root_path[v].begin(), root_path[v].end());
    }
    int best = 0;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            const int r = gromov_x2(d, x, y, w) / 2;
            best = std::max(best, d[root_path[x][r]][root_path[y][r]]);
        }
    return best;
}

// Minimum (or maximum) of rho_{w,T} over all roots and BFS trees.
inline int extreme_rooted_insize(const Graph& g, bool maximize, std::uint64_t cap_per_root) {
    const Table d = distances(g);
    int best = maximize ? 0 : -1;
    for (Vertex w = 0; w < g.n(); ++w)
        enumerate_bfs_trees(g, w, cap_per_root, [&](const std::vector<Vertex>& parent) {
            const int rho = rooted_insize(d, w, parent);
            if (best < 0 || (maximize ? rho > best : rho < best)) best = rho;
        });
    return best;
}

}  // namespace treelike::oracle
