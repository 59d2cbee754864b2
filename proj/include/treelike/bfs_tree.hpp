#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <vector>

#include "treelike/distance.hpp"
#include "treelike/error.hpp"
#include "treelike/graph.hpp"

namespace treelike {

// Level-ancestor table of a rooted tree. Row x has depth(x) + 1 entries and
// row(x)[r] is the vertex of the root-to-x tree path at depth r.
class AncestorTable {
public:
    AncestorTable() = default;

    AncestorTable(std::span<const Vertex> parent, std::span<const std::uint32_t> depth) {
        const std::size_t n = parent.size();
        offsets_.assign(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + depth[v] + 1;
        cells_.resize(offsets_[n]);
        // Fill rows in order of increasing depth so the parent row is ready.
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), Vertex{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return depth[a] < depth[b]; });
        for (Vertex v : order) {
            Vertex* row = cells_.data() + offsets_[v];
            if (parent[v] != kNoVertex) {
                const Vertex* up = cells_.data() + offsets_[parent[v]];
                std::copy(up, up + depth[v], row);
            }
            row[depth[v]] = v;
        }
    }

    Vertex at(Vertex x, std::uint32_t r) const { return cells_[offsets_[x] + r]; }

    // x(r): the path vertex at depth r, or x itself once r reaches depth(x).
    Vertex at_clamped(Vertex x, std::uint32_t r) const {
        const std::size_t len = offsets_[x + 1] - offsets_[x];
        return r + 1 >= len ? x : cells_[offsets_[x] + r];
    }

    std::span<const Vertex> row(Vertex x) const {
        return {cells_.data() + offsets_[x], offsets_[x + 1] - offsets_[x]};
    }

    std::size_t cell_count() const { return cells_.size(); }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> cells_;
};

// Rooted shortest-path spanning tree. Immutable; the ancestor table is built
// on first use and shared between copies.
class BfsTree {
public:
    BfsTree() = default;

    Vertex root() const { return root_; }
    std::size_t n() const { return parent_.size(); }
    Vertex parent(Vertex v) const { return parent_[v]; }
    std::uint32_t depth(Vertex v) const { return depth_[v]; }
    std::span<const Vertex> parents() const { return parent_; }
    std::span<const std::uint32_t> depths() const { return depth_; }

    std::uint32_t height() const {
        std::uint32_t h = 0;
        for (auto d : depth_) h = std::max(h, d);
        return h;
    }

    const AncestorTable& ancestors() const {
        std::call_once(lazy_->once, [&] { lazy_->table = AncestorTable(parent_, depth_); });
        return lazy_->table;
    }

    // Children lists in ascending id order, compressed.
    std::pair<std::vector<std::size_t>, std::vector<Vertex>> children() const {
        const std::size_t n = parent_.size();
        std::vector<std::size_t> offsets(n + 1, 0);
        for (Vertex v = 0; v < n; ++v)
            if (parent_[v] != kNoVertex) ++offsets[parent_[v] + 1];
        for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
        std::vector<Vertex> kids(offsets[n]);
        std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
        for (Vertex v = 0; v < n; ++v)
            if (parent_[v] != kNoVertex) kids[fill[parent_[v]]++] = v;
        return {std::move(offsets), std::move(kids)};
    }

    friend BfsTree bfs(const Graph& g, Vertex root);
    friend BfsTree bfs_tree_from_parents(const Graph& g, Vertex root, std::span<const Vertex> parent);

private:
    struct Lazy {
        std::once_flag once;
        AncestorTable table;
    };

    BfsTree(Vertex root, std::vector<Vertex> parent, std::vector<std::uint32_t> depth)
        : root_(root), parent_(std::move(parent)), depth_(std::move(depth)),
          lazy_(std::make_shared<Lazy>()) {}

    Vertex root_ = kNoVertex;
    std::vector<Vertex> parent_;
    std::vector<std::uint32_t> depth_;
    std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

// Deterministic BFS tree: each vertex hangs off its smallest-id neighbor one
// level closer to the root.
inline BfsTree bfs(const Graph& g, Vertex root) {
    if (root >= g.n()) throw Error(ErrorCode::InvalidArgument, "root out of range");
    auto depth = bfs_distances(g, root);
    std::vector<Vertex> parent(g.n(), kNoVertex);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (v == root) continue;
        for (Vertex u : g.neighbors(v))
            if (depth[u] + 1 == depth[v]) {
                parent[v] = u;
                break;
            }
    }
    return BfsTree(root, std::move(parent), std::move(depth));
}

// Wraps an externally supplied parent array after checking that it is a
// spanning tree whose root paths are geodesics. parent[root] is ignored.
inline BfsTree bfs_tree_from_parents(const Graph& g, Vertex root, std::span<const Vertex> parent) {
    const std::size_t n = g.n();
    if (root >= n) throw Error(ErrorCode::InvalidArgument, "root out of range");
    if (parent.size() != n) throw Error(ErrorCode::NotATree, "parent array has wrong length");
    std::vector<Vertex> par(parent.begin(), parent.end());
    par[root] = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
        if (v == root) continue;
        if (par[v] >= n || par[v] == v)
            throw Error(ErrorCode::NotATree, "vertex " + std::to_string(v) + " has an invalid parent");
        if (!g.adjacent(v, par[v]))
            throw Error(ErrorCode::NotATree,
                        "parent of " + std::to_string(v) + " is not a graph neighbor");
    }
    // Depth by walking to the root; a walk longer than n means a cycle.
    constexpr std::uint32_t kUnknown = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> depth(n, kUnknown);
    depth[root] = 0;
    std::vector<Vertex> chain;
    for (Vertex v = 0; v < n; ++v) {
        chain.clear();
        Vertex cur = v;
        while (depth[cur] == kUnknown) {
            chain.push_back(cur);
            if (chain.size() > n) throw Error(ErrorCode::NotATree, "parent pointers contain a cycle");
            cur = par[cur];
        }
        std::uint32_t dcur = depth[cur];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++dcur;
    }
    auto truth = bfs_distances(g, root);
    for (Vertex v = 0; v < n; ++v)
        if (depth[v] != truth[v])
            throw Error(ErrorCode::NotShortestPathTree,
                        "tree depth of " + std::to_string(v) + " differs from its distance to the root");
    return BfsTree(root, std::move(par), std::move(depth));
}

}  // namespace treelike
