#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "treelike/error.hpp"
#include "treelike/graph.hpp"
#include "treelike/half_int.hpp"
#include "treelike/parallel.hpp"

namespace treelike {

using Dist = std::uint16_t;
inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Single-source BFS distances. Uses `queue` as scratch (resized to n).
inline void bfs_distances(const Graph& g, Vertex source, std::vector<std::uint32_t>& dist,
                          std::vector<Vertex>& queue) {
    const std::size_t n = g.n();
    dist.assign(n, kUnreached);
    queue.resize(n);
    std::size_t head = 0, tail = 0;
    dist[source] = 0;
    queue[tail++] = source;
    while (head < tail) {
        Vertex v = queue[head++];
        const std::uint32_t next = dist[v] + 1;
        for (Vertex u : g.neighbors(v))
            if (dist[u] == kUnreached) {
                dist[u] = next;
                queue[tail++] = u;
            }
    }
}

inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::uint32_t> dist;
    std::vector<Vertex> queue;
    bfs_distances(g, source, dist, queue);
    return dist;
}

// Dense n x n matrix of shortest-path distances, 16 bits per entry.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    static DistanceMatrix from_entries(std::size_t n, std::vector<Dist> entries) {
        if (entries.size() != n * n)
            throw Error(ErrorCode::InvalidArgument, "distance matrix entry count mismatch");
        DistanceMatrix d;
        d.n_ = n;
        d.entries_ = std::move(entries);
        return d;
    }

    std::size_t n() const { return n_; }
    Dist operator()(Vertex u, Vertex v) const { return entries_[std::size_t{u} * n_ + v]; }
    std::span<const Dist> row(Vertex u) const { return {entries_.data() + std::size_t{u} * n_, n_}; }

    Dist diameter() const {
        Dist best = 0;
        for (Dist d : entries_) best = std::max(best, d);
        return best;
    }

    const std::vector<Dist>& entries() const { return entries_; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    friend DistanceMatrix all_pairs_distances(const Graph&, unsigned);
    std::size_t n_ = 0;
    std::vector<Dist> entries_;
};

// One BFS per source; rows are independent so the result does not depend
// on the thread count.
inline DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads = 1) {
    const std::size_t n = g.n();
    DistanceMatrix d;
    d.n_ = n;
    d.entries_.assign(n * n, 0);
    parallel_for(n, threads, [&](std::size_t s) {
        std::vector<std::uint32_t> dist;
        std::vector<Vertex> queue;
        bfs_distances(g, static_cast<Vertex>(s), dist, queue);
        Dist* out = d.entries_.data() + s * n;
        for (std::size_t v = 0; v < n; ++v) {
            if (dist[v] >= std::numeric_limits<Dist>::max())
                throw Error(ErrorCode::DiameterOverflow, "distance does not fit in 16 bits");
            out[v] = static_cast<Dist>(dist[v]);
        }
    });
    return d;
}

// (y|z)_w = (d(y,w) + d(z,w) - d(y,z)) / 2
inline HalfInt gromov_product(const DistanceMatrix& d, Vertex y, Vertex z, Vertex w) {
    return HalfInt::from_doubled(std::int64_t{d(y, w)} + d(z, w) - d(y, z));
}

// x lies on some shortest (u,v)-path.
inline bool in_interval(const DistanceMatrix& d, Vertex u, Vertex x, Vertex v) {
    return std::uint32_t{d(u, x)} + d(x, v) == d(u, v);
}

// Vertices grouped by distance from a base vertex (counting sort), ascending.
struct LayerOrder {
    std::vector<Vertex> order;

    LayerOrder(const DistanceMatrix& d, Vertex base) {
        const auto row = d.row(base);
        std::size_t top = 0;
        for (Dist v : row) top = std::max<std::size_t>(top, v);
        std::vector<std::size_t> start(top + 2, 0);
        for (Dist v : row) ++start[std::size_t{v} + 1];
        for (std::size_t i = 0; i + 1 < start.size(); ++i) start[i + 1] += start[i];
        order.resize(row.size());
        for (Vertex v = 0; v < row.size(); ++v) order[start[row[v]]++] = v;
    }
};

}  // namespace treelike
