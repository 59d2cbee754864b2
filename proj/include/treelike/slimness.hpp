#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "treelike/distance.hpp"
#include "treelike/graph.hpp"
#include "treelike/matrix.hpp"
#include "treelike/parallel.hpp"
#include "treelike/report.hpp"

namespace treelike {

// p_w(y,z): least k with d(w,[y,z]) <= k for every geodesic [y,z].
struct ProjectionTable {
    Vertex w = 0;
    SquareMatrix<Dist> p;
};

inline ProjectionTable projection_table(const DistanceMatrix& d, const Graph& g, Vertex w) {
    const std::size_t n = d.n();
    ProjectionTable out{w, SquareMatrix<Dist>(n)};
    const auto rw = d.row(w);
    auto& p = out.p;
    for (Vertex z = 0; z < n; ++z) {
        const auto rz = d.row(z);
        const LayerOrder layers(d, z);
        for (Vertex y : layers.order) {
            if (y == z) {
                p(y, z) = rw[y];
                continue;
            }
            Dist worst = 0;
            for (Vertex x : g.neighbors(y))
                if (rz[x] + 1 == rz[y]) worst = std::max(worst, p(x, z));
            p(y, z) = std::min(rw[y], worst);
        }
    }
    return out;
}

// Packed rows of bits, one row per vertex.
class BitRows {
public:
    BitRows(std::size_t rows, std::size_t cols)
        : words_((cols + 63) / 64), bits_(rows * words_, 0) {}

    void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
    std::size_t words() const { return words_; }

private:
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

struct SlimTriangle {
    Vertex x = kNoVertex, y = kNoVertex, z = kNoVertex;
    bool found() const { return x != kNoVertex; }
};

// Looks for a triangle (x_1, y_2, z_3) in the tripartite graph for threshold k:
// w in I(x,y), p_w(x,z) > k and p_w(y,z) > k. Returns the lexicographically
// first (x, y, z) over x < y (the graph is symmetric in x and y).
inline SlimTriangle find_slim_triangle(const DistanceMatrix& d, const ProjectionTable& pt,
                                       Dist k) {
    const std::size_t n = d.n();
    const Vertex w = pt.w;
    BitRows high(n, n);
    for (Vertex x = 0; x < n; ++x) {
        if (x == w) continue;
        const auto px = pt.p.row(x);
        for (Vertex z = 0; z < n; ++z)
            if (px[z] > k) high.set(x, z);
    }
    const auto rw = d.row(w);
    const std::size_t words = high.words();
    for (Vertex x = 0; x < n; ++x) {
        if (x == w) continue;
        const auto rx = d.row(x);
        const std::uint64_t* hx = high.row(x);
        if (std::none_of(hx, hx + words, [](std::uint64_t b) { return b != 0; })) continue;
        for (Vertex y = x + 1; y < n; ++y) {
            if (y == w || std::uint32_t{rw[x]} + rw[y] != rx[y]) continue;
            const std::uint64_t* hy = high.row(y);
            for (std::size_t i = 0; i < words; ++i)
                if (const std::uint64_t both = hx[i] & hy[i]) {
                    const auto z = static_cast<Vertex>(i * 64 + std::countr_zero(both));
                    return {x, y, z};
                }
        }
    }
    return {};
}

struct PointedSlimness {
    std::uint32_t value = 0;
    std::vector<Vertex> witness;  // (w, x, y, z)
    unsigned probes = 0;
};

// sigma_w(G): least k whose tripartite graph has no triangle. Doubling from
// 0, then bisection; the witness is the triangle at k = sigma_w - 1.
inline PointedSlimness pointed_slimness(const DistanceMatrix& d, const Graph& g, Vertex w) {
    const ProjectionTable pt = projection_table(d, g, w);
    const auto rw = d.row(w);
    const std::uint32_t ecc = *std::max_element(rw.begin(), rw.end());
    PointedSlimness out{0, {w, w, w, w}, 0};

    SlimTriangle last;
    auto probe = [&](std::uint32_t k) {
        ++out.probes;
        SlimTriangle t = find_slim_triangle(d, pt, static_cast<Dist>(k));
        if (t.found()) last = t;
        return !t.found();
    };
    if (probe(0)) return out;
    // Invariant: lo has a triangle, hi is triangle-free.
    std::uint32_t lo = 0, hi = 1;
    while (hi < ecc && !probe(hi)) {
        lo = hi;
        hi = std::min(ecc, 2 * hi);
    }
    SlimTriangle at_lo = last;
    while (hi - lo > 1) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        if (probe(mid)) {
            hi = mid;
        } else {
            lo = mid;
            at_lo = last;
        }
    }
    out.value = hi;
    out.witness = {w, at_lo.x, at_lo.y, at_lo.z};
    return out;
}

// sigma(G) = max over w of sigma_w(G).
inline ParamReport slimness_exact(const Graph& g, const DistanceMatrix& d, unsigned threads = 1) {
    std::vector<PointedSlimness> per_w(g.n());
    parallel_for(g.n(), threads, [&](std::size_t w) {
        per_w[w] = pointed_slimness(d, g, static_cast<Vertex>(w));
    });
    PointedSlimness best = per_w.front();
    for (const auto& p : per_w)
        if (p.value > best.value) best = p;
    return {Param::Sigma, HalfInt::from_int(best.value), best.witness, "pointed-slimness-bitset"};
}

inline ParamReport slimness_exact(const Graph& g, unsigned threads = 1) {
    return slimness_exact(g, all_pairs_distances(g, threads), threads);
}

}  // namespace treelike
