#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "treelike/distance.hpp"
#include "treelike/parallel.hpp"
#include "treelike/report.hpp"

namespace treelike {

// Twice the four-point defect of (w,x,y,z): largest minus second largest of
// the three pair sums.
inline std::int64_t four_point_defect_x2(const DistanceMatrix& d, Vertex w, Vertex x, Vertex y,
                                         Vertex z) {
    std::int64_t s1 = std::int64_t{d(w, x)} + d(y, z);
    std::int64_t s2 = std::int64_t{d(w, y)} + d(x, z);
    std::int64_t s3 = std::int64_t{d(w, z)} + d(x, y);
    if (s1 < s2) std::swap(s1, s2);
    if (s2 < s3) std::swap(s2, s3);
    if (s1 < s2) std::swap(s1, s2);
    return s1 - s2;
}

// delta(G) by scanning all quadruples w < x < y < z. O(n^4).
inline ParamReport hyperbolicity_exact(const DistanceMatrix& d, unsigned threads = 1) {
    const std::size_t n = d.n();
    struct Best {
        std::int64_t value = -1;
        std::array<Vertex, 4> quad{0, 0, 0, 0};
    };
    std::vector<Best> per_w(n);
    parallel_for(n, threads, [&](std::size_t wi) {
        const auto w = static_cast<Vertex>(wi);
        Best best;
        const auto rw = d.row(w);
        for (Vertex x = w + 1; x < n; ++x) {
            const auto rx = d.row(x);
            const std::int64_t dwx = rw[x];
            for (Vertex y = x + 1; y < n; ++y) {
                const auto ry = d.row(y);
                const std::int64_t dwy = rw[y], dxy = rx[y];
                for (Vertex z = y + 1; z < n; ++z) {
                    std::int64_t s1 = dwx + ry[z];
                    std::int64_t s2 = dwy + rx[z];
                    std::int64_t s3 = rw[z] + dxy;
                    if (s1 < s2) std::swap(s1, s2);
                    if (s2 < s3) std::swap(s2, s3);
                    if (s1 < s2) std::swap(s1, s2);
                    if (s1 - s2 > best.value) {
                        best.value = s1 - s2;
                        best.quad = {w, x, y, z};
                    }
                }
            }
        }
        per_w[wi] = best;
    });
    Best best;
    best.value = 0;
    for (const auto& b : per_w)
        if (b.value > best.value) best = b;
    return {Param::Delta, HalfInt::from_doubled(best.value),
            {best.quad.begin(), best.quad.end()}, "four-point-brute-force"};
}

// delta_w(G) = max over x, y, z of min{(x|z)_w, (y|z)_w} - (x|y)_w, at least 0. O(n^3).
inline ParamReport pointed_hyperbolicity(const DistanceMatrix& d, Vertex w) {
    const std::size_t n = d.n();
    const auto rw = d.row(w);
    std::int64_t best = 0;
    std::array<Vertex, 4> wit{w, w, w, w};
    for (Vertex x = 0; x < n; ++x) {
        const auto rx = d.row(x);
        for (Vertex y = 0; y < n; ++y) {
            const std::int64_t xy = std::int64_t{rw[x]} + rw[y] - rx[y];
            const auto ry = d.row(y);
            for (Vertex z = 0; z < n; ++z) {
                const std::int64_t xz = std::int64_t{rw[x]} + rw[z] - rx[z];
                const std::int64_t yz = std::int64_t{rw[y]} + rw[z] - ry[z];
                const std::int64_t gap = std::min(xz, yz) - xy;
                if (gap > best) {
                    best = gap;
                    wit = {w, x, y, z};
                }
            }
        }
    }
    return {Param::DeltaW, HalfInt::from_doubled(best), {wit.begin(), wit.end()},
            "pointed-four-point-brute-force"};
}

// kappa(G): for each pair u < v, group I(u,v) by distance from u and take the
// largest distance inside a group.
inline ParamReport interval_thinness(const DistanceMatrix& d, unsigned threads = 1) {
    const std::size_t n = d.n();
    struct Best {
        std::int64_t value = 0;
        std::array<Vertex, 4> wit{0, 0, 0, 0};
    };
    std::vector<Best> per_u(n);
    parallel_for(n, threads, [&](std::size_t ui) {
        const auto u = static_cast<Vertex>(ui);
        const auto ru = d.row(u);
        Best best;
        std::vector<std::vector<Vertex>> layers;
        for (Vertex v = u + 1; v < n; ++v) {
            const auto rv = d.row(v);
            const Dist duv = ru[v];
            layers.assign(std::size_t{duv} + 1, {});
            for (Vertex a = 0; a < n; ++a)
                if (std::uint32_t{ru[a]} + rv[a] == duv) layers[ru[a]].push_back(a);
            for (const auto& layer : layers)
                for (std::size_t i = 0; i < layer.size(); ++i) {
                    const auto ra = d.row(layer[i]);
                    for (std::size_t j = i + 1; j < layer.size(); ++j)
                        if (ra[layer[j]] > best.value) {
                            best.value = ra[layer[j]];
                            best.wit = {u, v, layer[i], layer[j]};
                        }
                }
        }
        per_u[ui] = best;
    });
    Best best;
    for (const auto& b : per_u)
        if (b.value > best.value) best = b;
    return {Param::Kappa, HalfInt::from_int(best.value), {best.wit.begin(), best.wit.end()},
            "interval-layer-scan"};
}

}  // namespace treelike
