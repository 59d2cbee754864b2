#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treelike/error.hpp"

namespace treelike {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

using Edge = std::pair<Vertex, Vertex>;

// Immutable connected undirected simple graph in compressed adjacency form.
// Neighbor lists are sorted ascending.
class Graph {
public:
    Graph() = default;

    // Validates and normalizes: rejects self-loops, drops duplicate edges,
    // rejects disconnected input.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
        if (n == 0) throw Error(ErrorCode::Empty, "graph has no vertices");
        std::vector<Edge> normalized;
        normalized.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
            if (u == v)
                throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
            normalized.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(normalized.begin(), normalized.end());
        normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

        Graph g;
        g.offsets_.assign(n + 1, 0);
        for (auto [u, v] : normalized) {
            ++g.offsets_[u + 1];
            ++g.offsets_[v + 1];
        }
        for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
        g.neighbors_.resize(g.offsets_[n]);
        std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
        for (auto [u, v] : normalized) {
            g.neighbors_[fill[u]++] = v;
            g.neighbors_[fill[v]++] = u;
        }
        for (std::size_t v = 0; v < n; ++v)
            std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                      g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
        g.m_ = normalized.size();

        if (!g.connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
        return g;
    }

    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
        return from_edges(n, std::span<const Edge>(edges));
    }

    std::size_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t m() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool adjacent(Vertex u, Vertex v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Each edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
    }

private:
    bool connected() const {
        const std::size_t count = n();
        std::vector<char> seen(count, 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        return reached == count;
    }

    std::vector<std::size_t> offsets_;
    std::vector<Vertex> neighbors_;
    std::size_t m_ = 0;
};

struct ParsedGraph {
    Graph graph;
    // original_ids[v] is the id used in the input for vertex v.
    std::vector<std::uint64_t> original_ids;
};

// Edge-list text: one "u v" pair per line, '#' starts a comment line.
// Ids are remapped to 0..k-1 in increasing order of the input ids.
inline ParsedGraph parse_edge_list(std::string_view text) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream in(line);
        std::string a, b, extra;
        if (!(in >> a >> b) || (in >> extra))
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected \"u v\"");
        auto to_id = [&](const std::string& tok) {
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw Error(ErrorCode::Parse,
                            "line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'");
            try {
                return static_cast<std::uint64_t>(std::stoull(tok));
            } catch (const std::exception&) {
                throw Error(ErrorCode::Parse,
                            "line " + std::to_string(line_no) + ": vertex id out of range");
            }
        };
        std::uint64_t u = to_id(a), v = to_id(b);
        if (u == v)
            throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": self-loop");
        raw.emplace_back(u, v);
    }
    if (raw.empty()) throw Error(ErrorCode::Empty, "edge list contains no edges");

    std::map<std::uint64_t, Vertex> remap;
    for (auto [u, v] : raw) {
        remap.emplace(u, 0);
        remap.emplace(v, 0);
    }
    if (remap.size() >= kNoVertex) throw Error(ErrorCode::TooLarge, "too many vertices");
    ParsedGraph out;
    out.original_ids.reserve(remap.size());
    for (auto& [id, idx] : remap) {
        idx = static_cast<Vertex>(out.original_ids.size());
        out.original_ids.push_back(id);
    }
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.emplace_back(remap[u], remap[v]);
    out.graph = Graph::from_edges(remap.size(), edges);
    return out;
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# n=" << g.n() << " m=" << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace treelike
