#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "treelike/error.hpp"
#include "treelike/generators.hpp"
#include "treelike/graph.hpp"

namespace treelike {

// DIMACS-style CNF: variables 1..num_vars, literal -v is the negation of v.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

inline std::string to_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& c : phi.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

inline CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = false;
    long declared = 0;
    CnfFormula phi;
    std::vector<int> current;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first[0] == 'c' || first[0] == '%') continue;
        if (first == "p") {
            std::string fmt;
            long vars = -1;
            if (header) fail("duplicate header");
            if (!(tokens >> fmt >> vars >> declared) || fmt != "cnf" || vars < 0 || declared < 0)
                fail("malformed header, expected 'p cnf <vars> <clauses>'");
            phi.num_vars = static_cast<int>(vars);
            header = true;
            continue;
        }
        if (!header) fail("clause before 'p cnf' header");
        tokens.clear();
        tokens.str(line);
        std::string tok;
        while (tokens >> tok) {
            char* end = nullptr;
            const long lit = std::strtol(tok.c_str(), &end, 10);
            if (*end != '\0') fail("bad literal '" + tok + "'");
            if (lit == 0) {
                if (current.empty()) fail("empty clause");
                phi.clauses.push_back(current);
                current.clear();
            } else {
                if (std::labs(lit) > phi.num_vars) fail("literal out of range: " + tok);
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!header) throw Error(ErrorCode::Parse, "missing 'p cnf' header");
    if (!current.empty()) throw Error(ErrorCode::Parse, "last clause is not terminated by 0");
    if (static_cast<long>(phi.clauses.size()) != declared)
        throw Error(ErrorCode::Parse, "header declares " + std::to_string(declared) + " clauses, found " +
                                          std::to_string(phi.clauses.size()));
    if (phi.clauses.empty()) throw Error(ErrorCode::Parse, "formula has no clauses");
    return phi;
}

namespace detail {

// Literal order: by variable, positive before negative.
inline bool literal_less(int a, int b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a > b;
}

inline bool strict_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() &&
           std::includes(b.begin(), b.end(), a.begin(), a.end(), literal_less);
}

inline std::size_t overlap(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t count = 0;
    for (int lit : a) count += std::binary_search(b.begin(), b.end(), lit, literal_less);
    return count;
}

inline bool needs_splitting(const std::vector<std::vector<int>>& cs) {
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (std::size_t k = j + 1; k < cs.size(); ++k) {
            if (overlap(cs[j], cs[k]) != 0) continue;
            bool bridged = false;
            for (std::size_t p = 0; p < cs.size() && !bridged; ++p)
                bridged = overlap(cs[p], cs[j]) == 1 && overlap(cs[p], cs[k]) == 1;
            if (!bridged) return true;
        }
    return false;
}

}  // namespace detail

// First violated structural condition required by the reduction, or empty.
inline std::string reduction_violation(const CnfFormula& phi) {
    std::vector<std::vector<int>> cs = phi.clauses;
    for (auto& c : cs) std::sort(c.begin(), c.end(), detail::literal_less);
    std::set<int> seen;
    for (const auto& c : cs) {
        if (c.size() < 2) return "clause with fewer than two literals";
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (std::abs(c[i]) == std::abs(c[i + 1]))
                return "clause repeats a variable";
        seen.insert(c.begin(), c.end());
    }
    for (int v = 1; v <= phi.num_vars; ++v)
        if (!seen.count(v) || !seen.count(-v))
            return "literal of variable " + std::to_string(v) + " occurs in no clause";
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (std::size_t k = 0; k < cs.size(); ++k)
            if (j != k && detail::strict_subset(cs[j], cs[k])) return "clause strictly contained in another";
    for (std::size_t j = 0; j < cs.size(); ++j) {
        bool disjoint = false;
        for (std::size_t k = 0; k < cs.size() && !disjoint; ++k)
            disjoint = k != j && detail::overlap(cs[j], cs[k]) == 0;
        if (!disjoint) return "clause meets every other clause";
    }
    if (detail::needs_splitting(cs)) return "disjoint clause pair without a bridging clause";
    return {};
}

struct PreprocessResult {
    enum class Status { Reduced, Satisfiable, Unsatisfiable };
    Status status = Status::Reduced;
    CnfFormula formula;  // meaningful when status == Reduced
};

// Rewrites phi into an equisatisfiable formula meeting every condition checked
// by reduction_violation, or settles satisfiability on the way.
inline PreprocessResult preprocess_cnf(const CnfFormula& phi) {
    using Status = PreprocessResult::Status;
    std::vector<std::vector<int>> cs = phi.clauses;
    int num_vars = phi.num_vars;

    for (bool changed = true; changed;) {
        changed = false;

        // Normalize literals, drop tautologies, drop repeated clauses.
        std::vector<std::vector<int>> kept;
        for (auto c : cs) {
            std::sort(c.begin(), c.end(), detail::literal_less);
            c.erase(std::unique(c.begin(), c.end()), c.end());
            bool tautology = false;
            for (std::size_t i = 0; i + 1 < c.size(); ++i) tautology |= c[i] == -c[i + 1];
            if (tautology || std::find(kept.begin(), kept.end(), c) != kept.end()) {
                changed = true;
                continue;
            }
            kept.push_back(std::move(c));
        }
        cs = std::move(kept);
        if (cs.empty()) return {Status::Satisfiable, {}};

        // Assign literals forced by unit clauses or occurring with one polarity.
        std::set<int> present;
        for (const auto& c : cs) present.insert(c.begin(), c.end());
        int forced = 0;
        for (const auto& c : cs)
            if (c.size() == 1) {
                forced = c[0];
                break;
            }
        if (forced == 0)
            for (int lit : present)
                if (!present.count(-lit)) {
                    forced = lit;
                    break;
                }
        if (forced != 0) {
            std::vector<std::vector<int>> next;
            for (auto& c : cs) {
                if (std::find(c.begin(), c.end(), forced) != c.end()) continue;
                c.erase(std::remove(c.begin(), c.end(), -forced), c.end());
                if (c.empty()) return {Status::Unsatisfiable, {}};
                next.push_back(std::move(c));
            }
            cs = std::move(next);
            changed = true;
            continue;
        }

        // Drop clauses that strictly contain another clause.
        std::vector<std::vector<int>> minimal;
        for (std::size_t j = 0; j < cs.size(); ++j) {
            bool superset = false;
            for (std::size_t k = 0; k < cs.size() && !superset; ++k)
                superset = k != j && detail::strict_subset(cs[k], cs[j]);
            if (superset) changed = true;
            else minimal.push_back(cs[j]);
        }
        cs = std::move(minimal);
    }

    // Renumber the surviving variables 1..n in order of first index.
    std::set<int> used;
    for (const auto& c : cs)
        for (int lit : c) used.insert(std::abs(lit));
    std::map<int, int> rename;
    for (int v : used) rename.emplace(v, static_cast<int>(rename.size()) + 1);
    for (auto& c : cs)
        for (int& lit : c) lit = lit > 0 ? rename[lit] : -rename[-lit];
    num_vars = static_cast<int>(rename.size());

    // A clause meeting every other clause is satisfied together with them by
    // making all of its literals true.
    for (std::size_t j = 0; j < cs.size(); ++j) {
        bool meets_all = true;
        for (std::size_t k = 0; k < cs.size() && meets_all; ++k)
            meets_all = k == j || detail::overlap(cs[j], cs[k]) != 0;
        if (meets_all) return {Status::Satisfiable, {}};
    }

    if (detail::needs_splitting(cs)) {
        const int x = num_vars + 1, y = num_vars + 2;
        std::vector<std::vector<int>> split;
        for (const auto& c : cs) {
            auto with_pos = c;
            with_pos.insert(with_pos.end(), {x, y});
            auto with_neg = c;
            with_neg.insert(with_neg.end(), {-x, -y});
            split.push_back(std::move(with_pos));
            split.push_back(std::move(with_neg));
        }
        split.push_back({-x, y});
        split.push_back({x, -y});
        cs = std::move(split);
        num_vars += 2;
    }
    return {Status::Reduced, {num_vars, std::move(cs)}};
}

// Vertex layout of the reduction graph: w, then v_1..v_2n, then the literal
// vertices l_1..l_2n (l_{2i-1} = x_i, l_{2i} = not x_i), then the clauses.
struct SatGraphLayout {
    int num_vars = 0;
    std::size_t num_clauses = 0;

    Vertex w() const { return 0; }
    Vertex v(int i) const { return static_cast<Vertex>(i); }  // i in 1..2n
    Vertex literal_index(int lit) const { return static_cast<Vertex>(lit > 0 ? 2 * lit - 1 : -2 * lit); }
    Vertex literal(int lit) const { return static_cast<Vertex>(2 * num_vars) + literal_index(lit); }
    Vertex clause(std::size_t j) const { return static_cast<Vertex>(4 * num_vars + 1 + j); }
    std::size_t n() const { return 4 * static_cast<std::size_t>(num_vars) + 1 + num_clauses; }
};

inline Generated sat_to_graph(const CnfFormula& phi) {
    if (std::string why = reduction_violation(phi); !why.empty())
        throw Error(ErrorCode::PreprocessRequired, "formula must be preprocessed: " + why);
    const SatGraphLayout at{phi.num_vars, phi.clauses.size()};
    const int n2 = 2 * phi.num_vars;
    std::vector<Edge> edges;
    for (int i = 1; i <= n2; ++i) {
        edges.emplace_back(at.w(), at.v(i));
        for (int j = i + 1; j <= n2; ++j) edges.emplace_back(at.v(i), at.v(j));
        edges.emplace_back(at.v(i), static_cast<Vertex>(n2 + i));
    }
    for (int a = 1; a <= phi.num_vars; ++a)
        for (int b = a + 1; b <= phi.num_vars; ++b)
            for (int sa : {1, -1})
                for (int sb : {1, -1}) edges.emplace_back(at.literal(sa * a), at.literal(sb * b));
    std::vector<std::vector<int>> cs = phi.clauses;
    for (auto& c : cs) std::sort(c.begin(), c.end(), detail::literal_less);
    for (std::size_t j = 0; j < cs.size(); ++j) {
        for (int lit : cs[j]) edges.emplace_back(at.literal(lit), at.clause(j));
        for (std::size_t k = j + 1; k < cs.size(); ++k)
            if (detail::overlap(cs[j], cs[k]) == 1) edges.emplace_back(at.clause(j), at.clause(k));
    }

    Generated out;
    out.graph = Graph::from_edges(at.n(), edges);
    auto& roles = out.roles;
    roles["w"] = {at.w()};
    for (int i = 1; i <= n2; ++i) {
        roles["V"].push_back(at.v(i));
        roles["X"].push_back(static_cast<Vertex>(n2 + i));
    }
    for (std::size_t j = 0; j < cs.size(); ++j) roles["C"].push_back(at.clause(j));
    return out;
}

}  // namespace treelike
