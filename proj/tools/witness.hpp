#pragma once

#include <string>

#include "treelike/treelike.hpp"

namespace cli {

using namespace treelike;

// Recomputes a reported value from its witness using only distances and the
// defining formula. Returns an empty string when it checks out.
inline std::string check_witness(const ParamReport& r, const DistanceMatrix& d, const Graph& g,
                                 const BfsTree* tree) {
    const auto& q = r.witness;
    const std::int64_t want = r.value.doubled();
    auto size_is = [&](std::size_t k) { return q.size() == k; };
    auto in_range = [&] {
        for (Vertex v : q)
            if (v >= d.n()) return false;
        return true;
    };
    if (!in_range()) return "witness vertex out of range";
    switch (r.parameter) {
        case Param::Delta:
            if (!size_is(4)) return "delta witness must have 4 vertices";
            if (four_point_defect_x2(d, q[0], q[1], q[2], q[3]) != want) return "four-point defect differs";
            return {};
        case Param::DeltaW: {
            if (!size_is(4)) return "delta_w witness must have 4 vertices";
            const std::int64_t xz = gromov_product(d, q[1], q[3], q[0]).doubled();
            const std::int64_t yz = gromov_product(d, q[2], q[3], q[0]).doubled();
            const std::int64_t xy = gromov_product(d, q[1], q[2], q[0]).doubled();
            if (std::max<std::int64_t>(0, std::min(xz, yz) - xy) != want) return "pointed defect differs";
            return {};
        }
        case Param::Kappa:
            if (!size_is(4)) return "kappa witness must have 4 vertices";
            if (!in_interval(d, q[0], q[2], q[1]) || !in_interval(d, q[0], q[3], q[1]))
                return "kappa witness leaves the interval";
            if (d(q[0], q[2]) != d(q[0], q[3])) return "kappa witness not on one layer";
            if (2 * std::int64_t{d(q[2], q[3])} != want) return "kappa distance differs";
            return {};
        case Param::Tau:
            if (!size_is(5)) return "tau witness must have 5 vertices";
            if (!in_interval(d, q[0], q[3], q[1]) || !in_interval(d, q[0], q[4], q[2]))
                return "tau witness leaves the sides";
            if (d(q[0], q[3]) != d(q[0], q[4])) return "tau witness not equidistant";
            if (2 * std::int64_t{d(q[0], q[3])} > gromov_product(d, q[1], q[2], q[0]).doubled())
                return "tau witness beyond the tripod center";
            if (2 * std::int64_t{d(q[3], q[4])} != want) return "tau distance differs";
            return {};
        case Param::Sigma: {
            if (!size_is(4)) return "sigma witness must have 4 vertices";
            if (want == 0) return {};
            if (!in_interval(d, q[1], q[0], q[2])) return "sigma witness: w not on a geodesic x-y";
            const ProjectionTable pt = projection_table(d, g, q[0]);
            if (2 * std::int64_t{std::min(pt.p(q[1], q[3]), pt.p(q[2], q[3]))} != want)
                return "sigma distance differs";
            return {};
        }
        case Param::Rho:
        case Param::Mu: {
            if (!size_is(5) || tree == nullptr) return "rho witness must have 5 vertices and a tree";
            const std::int64_t top = gromov_product(d, q[1], q[2], q[0]).floor();
            const AncestorTable& anc = tree->ancestors();
            if (q[0] != tree->root()) return "rho witness root differs from the tree root";
            const auto check_at = [&](std::int64_t depth) {
                return anc.at(q[1], static_cast<std::uint32_t>(depth)) == q[3] &&
                       anc.at(q[2], static_cast<std::uint32_t>(depth)) == q[4];
            };
            bool placed = check_at(top);
            if (r.parameter == Param::Mu)
                for (std::int64_t at = 0; at < top && !placed; ++at) placed = check_at(at);
            if (!placed) return "rho witness vertices are not tree ancestors below the center";
            if (2 * std::int64_t{d(q[3], q[4])} != want) return "rho distance differs";
            return {};
        }
        default:
            return {};
    }
}

}  // namespace cli
