#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "treelike/distance.hpp"
#include "treelike/graph.hpp"

namespace treelike {

// Minimum of rho_{w,T} over roots w and BFS trees T found by a budgeted
// enumeration. With a cutoff only trees with rho <= cutoff are sought and the
// search stops at the first one.
struct MinsizeResult {
    std::optional<std::uint32_t> best;
    // The whole (pruned) space was covered. Without a cutoff, best is then
    // exactly rho_-(G); with a cutoff and no best, rho_-(G) > cutoff.
    bool exhausted = false;
    std::uint64_t leaves = 0;  // complete trees evaluated plus pruned branches
    Vertex root = kNoVertex;
    std::vector<Vertex> parent;
};

struct MaxsizeResult {
    std::uint32_t best = 0;
    bool exhausted = false;
    std::uint64_t leaves = 0;
    Vertex root = kNoVertex;
    std::vector<Vertex> parent;
};

namespace detail {

// Depth-first walk over all BFS trees of one root. Vertices are assigned in
// (depth, id) order; each takes a parent among its neighbors one level up,
// tried in ascending id order. The running rho over assigned vertices is
// monotone, which lets the minimizing search prune.
class TreeWalker {
public:
    TreeWalker(const Graph& g, const DistanceMatrix& d, Vertex root)
        : g_(g), d_(d), root_(root), rows_(g.n()), parent_(g.n(), kNoVertex) {
        const auto drow = d.row(root);
        for (Vertex v = 0; v < g.n(); ++v)
            if (v != root) order_.push_back(v);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return drow[a] < drow[b]; });
        choices_.resize(g.n());
        for (Vertex v : order_)
            for (Vertex u : g.neighbors(v))
                if (drow[u] + 1 == drow[v]) choices_[v].push_back(u);
        rows_[root] = {root};
    }

    // visit(rho, parents) is called on each complete tree and returns false
    // to stop. prune(partial_rho) returning true abandons a branch.
    template <class Visit, class Prune>
    bool run(Visit&& visit, Prune&& prune, std::uint64_t& leaves, std::uint64_t budget) {
        return step(0, 0, visit, prune, leaves, budget);
    }

private:
    template <class Visit, class Prune>
    bool step(std::size_t idx, std::uint32_t partial, Visit& visit, Prune& prune,
              std::uint64_t& leaves, std::uint64_t budget) {
        if (idx == order_.size()) {
            ++leaves;
            return visit(partial, parent_) && leaves < budget;
        }
        const Vertex v = order_[idx];
        const auto dv_row = d_.row(v);
        const std::uint32_t dv = d_(root_, v);
        for (Vertex p : choices_[v]) {
            parent_[v] = p;
            rows_[v] = rows_[p];
            rows_[v].push_back(v);
            std::uint32_t here = partial;
            auto eval = [&](Vertex u) {
                const std::uint32_t du = d_(root_, u);
                const std::uint32_t r = (du + dv - dv_row[u]) / 2;
                here = std::max<std::uint32_t>(here, d_(rows_[u][r], rows_[v][r]));
            };
            eval(root_);
            for (std::size_t j = 0; j < idx; ++j) eval(order_[j]);
            if (prune(here)) {
                if (++leaves >= budget) return false;
                continue;
            }
            if (!step(idx + 1, here, visit, prune, leaves, budget)) return false;
        }
        parent_[v] = kNoVertex;
        return true;
    }

    const Graph& g_;
    const DistanceMatrix& d_;
    Vertex root_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> choices_;
    std::vector<std::vector<Vertex>> rows_;
    std::vector<Vertex> parent_;
};

}  // namespace detail

inline MinsizeResult minsize_search(const Graph& g, std::uint64_t budget,
                                    std::optional<std::uint32_t> cutoff = std::nullopt) {
    const DistanceMatrix d = all_pairs_distances(g);
    MinsizeResult out;
    // Trees with rho >= bound are of no interest.
    std::uint64_t bound = cutoff ? std::uint64_t{*cutoff} + 1
                                 : std::uint64_t{std::numeric_limits<std::uint32_t>::max()} + 1;
    bool stopped = false;
    for (Vertex w = 0; w < g.n() && !stopped; ++w) {
        detail::TreeWalker walker(g, d, w);
        auto prune = [&](std::uint32_t partial) { return partial >= bound; };
        auto visit = [&](std::uint32_t rho, const std::vector<Vertex>& parent) {
            if (rho < bound) {
                bound = rho;
                out.best = rho;
                out.root = w;
                out.parent = parent;
                if (cutoff) return false;
            }
            return true;
        };
        const bool finished = walker.run(visit, prune, out.leaves, budget);
        if (!finished) stopped = true;
    }
    out.exhausted = !stopped;
    return out;
}

inline MaxsizeResult maxsize_over_trees(const Graph& g, std::uint64_t budget) {
    const DistanceMatrix d = all_pairs_distances(g);
    MaxsizeResult out;
    bool stopped = false;
    bool any = false;
    for (Vertex w = 0; w < g.n() && !stopped; ++w) {
        detail::TreeWalker walker(g, d, w);
        auto prune = [](std::uint32_t) { return false; };
        auto visit = [&](std::uint32_t rho, const std::vector<Vertex>& parent) {
            if (!any || rho > out.best) {
                any = true;
                out.best = rho;
                out.root = w;
                out.parent = parent;
            }
            return true;
        };
        if (!walker.run(visit, prune, out.leaves, budget)) stopped = true;
    }
    out.exhausted = !stopped;
    return out;
}

}  // namespace treelike
