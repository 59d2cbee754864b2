#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "suites.hpp"
#include "treelike/oracles.hpp"
#include "treelike/treelike.hpp"
#include "witness.hpp"

using namespace treelike;
using nlohmann::json;

namespace {

enum Exit : int {
    kOk = 0,
    kViolation = 1,
    kBadInput = 2,
    kTooLarge = 3,
    kInvariant = 4,
    kDisagree = 5,
};

struct Failure {
    int code;
    std::string message;
};

// Default refusal sizes for the exact algorithms; --force overrides.
constexpr std::size_t kMaxDelta = 400;
constexpr std::size_t kMaxCubic = 1500;
constexpr std::size_t kMaxSigma = 1200;

struct Source {
    std::string input;
    std::string labels;
    std::string family;
    FamilyParams params;
};

struct Loaded {
    Generated gen;
    json descriptor;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kBadInput, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Failure{kBadInput, "cannot write " + path};
}

Loaded load(const Source& src) {
    Loaded out;
    if (!src.input.empty()) {
        ParsedGraph p = parse_edge_list(read_file(src.input));
        out.gen.graph = std::move(p.graph);
        out.descriptor = {{"file", src.input}, {"original_ids", p.original_ids}};
        if (!src.labels.empty()) {
            json lab;
            try {
                lab = json::parse(read_file(src.labels));
            } catch (const json::exception& e) {
                throw Failure{kBadInput, src.labels + ": " + e.what()};
            }
            if (lab.contains("roles")) out.gen.roles = lab["roles"].get<std::map<std::string, std::vector<Vertex>>>();
            if (lab.contains("tree")) {
                std::vector<Vertex> parent;
                for (const auto& v : lab["tree"]["parent"]) parent.push_back(v.is_null() ? kNoVertex : v.get<Vertex>());
                out.gen.tree = bfs_tree_from_parents(out.gen.graph, lab["tree"]["root"].get<Vertex>(), parent);
            }
            out.descriptor["labels"] = src.labels;
        }
    } else if (!src.family.empty()) {
        FamilyParams fp = src.params;
        if (fp.n == 0 && fp.k > 0) fp.n = static_cast<std::size_t>(fp.k);
        out.gen = gen_family(src.family, fp);
        out.descriptor = {{"family", src.family}};
        if (src.family == "hk" || src.family == "gk" || src.family == "hkstar") out.descriptor["k"] = fp.k;
        else out.descriptor.update({{"n", fp.n}, {"p", fp.p}, {"seed", fp.seed}});
    } else {
        throw Failure{kBadInput, "give --input FILE or --family NAME"};
    }
    out.descriptor["vertices"] = out.gen.graph.n();
    out.descriptor["edges"] = out.gen.graph.m();
    return out;
}

void add_source_options(CLI::App* app, Source& src) {
    auto* input = app->add_option("--input", src.input, "edge-list file");
    auto* family = app->add_option("--family", src.family, "hk, gk, hkstar, path, cycle, complete, star, random_tree, gnp");
    input->excludes(family);
    app->add_option("--labels", src.labels, "labels file written by generate (tree and roles)")->needs(input);
    app->add_option("--k", src.params.k, "family size parameter");
    app->add_option("--n", src.params.n, "vertex count for simple families (defaults to k)");
    app->add_option("--p", src.params.p, "edge probability for gnp");
    app->add_option("--seed", src.params.seed, "random seed");
}

json entry(const ParamReport& r, double seconds) {
    return {{"param", to_string(r.parameter)},
            {"value", r.value.to_string()},
            {"value_x2", r.value.doubled()},
            {"witness", r.witness},
            {"algorithm", r.algorithm},
            {"wall_time", seconds}};
}

template <class F>
auto timed(double& seconds, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

ParamReport rho_report(const RootedInsize& r, Vertex root, Param p, const char* algorithm) {
    return {p,
            HalfInt::from_int(r.rho),
            {root, r.witness.x, r.witness.y, r.witness.x_y, r.witness.y_x},
            algorithm};
}

// analyze ------------------------------------------------------------------

struct AnalyzeOptions {
    Source src;
    std::string param = "approx";
    Vertex root = 0;
    bool root_given = false;
    bool text = false;
    unsigned threads = 1;
    bool force = false;
};

void refuse_above(std::size_t n, std::size_t limit, const std::string& what, bool force) {
    if (!force && n > limit)
        throw Failure{kTooLarge, what + " refuses n = " + std::to_string(n) + " > " + std::to_string(limit) +
                                     " (use --force)"};
}

json run_analyze(const AnalyzeOptions& opt) {
    static const std::vector<std::string> known{"delta", "delta-w", "rho",            "mu",        "tau",
                                                "sigma", "kappa",   "rho-collection", "all-exact", "approx"};
    if (std::find(known.begin(), known.end(), opt.param) == known.end())
        throw Failure{kBadInput, "unknown --param " + opt.param};
    Loaded in = load(opt.src);
    const Graph& g = in.gen.graph;
    const std::size_t n = g.n();
    const Vertex root = opt.root_given || !in.gen.tree ? opt.root : in.gen.tree->root();
    if (root >= n) throw Failure{kBadInput, "--root out of range"};

    const bool all = opt.param == "all-exact";
    auto wants = [&](const char* p) { return all || opt.param == p; };
    if (wants("delta")) refuse_above(n, kMaxDelta, "delta", opt.force);
    if (wants("delta-w") || wants("kappa") || wants("rho-collection") || wants("tau"))
        refuse_above(n, kMaxCubic, opt.param, opt.force);
    if (wants("sigma")) refuse_above(n, kMaxSigma, "sigma", opt.force);

    // The generator's own tree when it is rooted at --root, the deterministic one otherwise.
    const bool prescribed = in.gen.tree && in.gen.tree->root() == root;
    const BfsTree tree = prescribed ? *in.gen.tree : bfs(g, root);

    json doc;
    doc["input"] = in.descriptor;
    doc["results"] = json::array();
    doc["tree"] = {{"root", root}, {"source", prescribed ? "generator" : "bfs-smallest-id-parent"}};

    const bool needs_matrix = opt.param != "approx" && opt.param != "rho";
    DistanceMatrix d;
    if (needs_matrix) d = all_pairs_distances(g, opt.threads);

    std::vector<std::pair<ParamReport, double>> reports;
    double secs = 0;
    RootedInsize rho;
    if (wants("rho") || wants("mu") || opt.param == "approx") {
        rho = timed(secs, [&] { return rooted_insize_sparse(g, tree); });
        reports.emplace_back(rho_report(rho, root, Param::Rho, "rooted-insize-sparse"), secs);
        const ApproxBounds b = bounds_from_rho(rho.rho);
        const RhoDerivedBounds t = bounds_from_rho_for_thinness(rho.rho);
        doc["bounds"] = {{"rho", rho.rho},
                         {"lower", b.lower.to_string()},
                         {"upper", b.upper.to_string()},
                         {"lower_x2", b.lower.doubled()},
                         {"upper_x2", b.upper.doubled()},
                         {"tau_upper", t.tau_upper},
                         {"sigma_upper", t.sigma_upper}};
    }
    if (wants("mu")) {
        const std::uint32_t mu = timed(secs, [&] { return rooted_thinness_mu(d, tree); });
        ParamReport r = rho_report(rho, root, Param::Mu, "rooted-thinness-scan");
        r.value = HalfInt::from_int(mu);
        reports.emplace_back(r, secs);
    }
    if (wants("delta")) reports.emplace_back(timed(secs, [&] { return hyperbolicity_exact(d, opt.threads); }), secs);
    if (wants("delta-w")) reports.emplace_back(timed(secs, [&] { return pointed_hyperbolicity(d, root); }), secs);
    if (wants("tau")) reports.emplace_back(timed(secs, [&] { return thinness_exact(g, d, opt.threads); }), secs);
    if (wants("sigma")) reports.emplace_back(timed(secs, [&] { return slimness_exact(g, d, opt.threads); }), secs);
    if (wants("kappa")) reports.emplace_back(timed(secs, [&] { return interval_thinness(d, opt.threads); }), secs);
    if (wants("rho-collection")) {
        const CollectionParams cp = timed(secs, [&] { return collection_params(g, d, opt.threads); });
        doc["collection"] = {{"rho_T", cp.rho_t},
                             {"kappa_T", cp.kappa_t},
                             {"tau_upper", cp.tau_upper},
                             {"sigma_upper", cp.sigma_upper},
                             {"wall_time", secs}};
    }

    for (const auto& [r, s] : reports) {
        std::string problem;
        if (r.parameter == Param::Rho && !needs_matrix) {
            // No distance matrix on the approximate path: check against BFS rows.
            const auto& q = r.witness;
            const std::uint32_t depth = (tree.depth(q[1]) + tree.depth(q[2]) - bfs_distances(g, q[1])[q[2]]) / 2;
            if (tree.ancestors().at(q[1], depth) != q[3] || tree.ancestors().at(q[2], depth) != q[4])
                problem = "rho witness vertices are not the tree ancestors at the center";
            else if (bfs_distances(g, q[3])[q[4]] != r.value.floor())
                problem = "rho distance differs";
        } else {
            problem = cli::check_witness(r, d, g, &tree);
        }
        if (!problem.empty())
            throw Failure{kInvariant, std::string("witness for ") + to_string(r.parameter) + " failed: " + problem};
        doc["results"].push_back(entry(r, s));
    }
    return doc;
}

void print_text(const json& doc) {
    std::cout << "input:";
    for (auto& [k, v] : doc["input"].items())
        if (k != "original_ids") std::cout << ' ' << k << '=' << v.dump();
    std::cout << '\n';
    for (const auto& r : doc["results"]) {
        std::cout << r["param"].get<std::string>() << " = " << r["value"].get<std::string>() << "  witness [";
        bool first = true;
        for (const auto& v : r["witness"]) {
            std::cout << (first ? "" : " ") << v.get<Vertex>();
            first = false;
        }
        std::cout << "]  " << r["algorithm"].get<std::string>() << '\n';
    }
    if (doc.contains("bounds"))
        std::cout << "delta in [" << doc["bounds"]["lower"].get<std::string>() << ", "
                  << doc["bounds"]["upper"].get<std::string>() << "]\n";
    if (doc.contains("collection")) {
        const auto& c = doc["collection"];
        std::cout << "rho_T = " << c["rho_T"] << ", kappa_T = " << c["kappa_T"] << ", tau, sigma <= " << c["tau_upper"]
                  << '\n';
    }
}

// generate -----------------------------------------------------------------

json labels(const Generated& gen, const json& descriptor) {
    json out;
    out["input"] = descriptor;
    out["roles"] = gen.roles;
    json coords = json::object();
    for (const auto& [v, c] : gen.coords) coords[std::to_string(v)] = {c.first, c.second};
    out["coords"] = coords;
    if (gen.tree) {
        json parents = json::array();
        for (Vertex p : gen.tree->parents()) parents.push_back(p == kNoVertex ? json(nullptr) : json(p));
        out["tree"] = {{"root", gen.tree->root()}, {"parent", parents}};
    }
    return out;
}

int run_generate(const Source& src, const std::string& prefix) {
    const Loaded in = load(src);
    write_file(prefix + ".edges", to_edge_list(in.gen.graph));
    write_file(prefix + ".labels.json", labels(in.gen, in.descriptor).dump(2) + "\n");
    std::cout << json{{"edges", prefix + ".edges"}, {"labels", prefix + ".labels.json"},
                      {"vertices", in.gen.graph.n()}, {"edge_count", in.gen.graph.m()}}
                     .dump(2)
              << '\n';
    return kOk;
}

// reduce-sat ---------------------------------------------------------------

constexpr std::uint64_t kCheckBudget = 200'000'000;

int run_reduce_sat(const std::string& cnf_path, const std::string& prefix, bool check) {
    const CnfFormula phi = parse_dimacs(read_file(cnf_path));
    const PreprocessResult pre = preprocess_cnf(phi);
    json doc;
    doc["input"] = {{"cnf", cnf_path}, {"variables", phi.num_vars}, {"clauses", phi.clauses.size()}};
    const char* status = pre.status == PreprocessResult::Status::Reduced       ? "reduced"
                         : pre.status == PreprocessResult::Status::Satisfiable ? "satisfiable"
                                                                               : "unsatisfiable";
    doc["preprocess"] = status;

    std::optional<Generated> gphi;
    if (pre.status == PreprocessResult::Status::Reduced) {
        doc["preprocessed"] = to_dimacs(pre.formula);
        gphi = sat_to_graph(pre.formula);
        doc["vertices"] = gphi->graph.n();
        if (!prefix.empty()) {
            write_file(prefix + ".edges", to_edge_list(gphi->graph));
            json lab = labels(*gphi, doc["input"]);
            lab["preprocessed"] = doc["preprocessed"];
            write_file(prefix + ".labels.json", lab.dump(2) + "\n");
        }
    }
    int code = kOk;
    if (check) {
        if (phi.num_vars > 24) throw Failure{kTooLarge, "--check-tiny needs at most 24 variables"};
        const bool truth = oracle::sat_truth_table(phi);
        bool small_minsize = pre.status == PreprocessResult::Status::Satisfiable;
        if (gphi) {
            const MinsizeResult m = minsize_search(gphi->graph, kCheckBudget, 1);
            if (!m.best && !m.exhausted) throw Failure{kTooLarge, "tree enumeration budget exhausted"};
            small_minsize = m.best.has_value();
            if (m.best) doc["tree"] = {{"root", m.root}, {"rho", *m.best}};
        }
        const bool agree = truth == small_minsize;
        doc["verdict"] = {{"satisfiable", truth}, {"minsize_leq_1", small_minsize}, {"agree", agree}};
        if (!agree) code = kDisagree;
    }
    std::cout << doc.dump(2) << '\n';
    return code;
}

// verify -------------------------------------------------------------------

int run_verify(const std::string& suite, const cli::SuiteOptions& opt, const std::string& out_dir) {
    cli::SuiteResult r;
    if (suite == "inequalities") r = cli::suite_inequalities(opt);
    else if (suite == "oracles") r = cli::suite_oracles(opt);
    else if (suite == "grids") r = cli::suite_grids(opt);
    else if (suite == "sat") r = cli::suite_sat(opt);
    else throw Failure{kBadInput, "unknown suite " + suite};

    json doc{{"suite", suite}, {"graphs", r.graphs}, {"checks", r.checks}, {"violations", r.violations.size()}};
    json files = json::array();
    constexpr std::size_t kMaxWritten = 10;
    for (std::size_t i = 0; i < r.violations.size() && i < kMaxWritten; ++i) {
        const auto& v = r.violations[i];
        const std::string base = (std::filesystem::path(out_dir) /
                                  ("counterexample-" + suite + "-" + std::to_string(i))).string();
        json ctx = v.context;
        if (v.graph) {
            write_file(base + ".edges", to_edge_list(*v.graph));
            ctx["edges"] = base + ".edges";
        }
        write_file(base + ".json", ctx.dump(2) + "\n");
        files.push_back(base + ".json");
    }
    if (!files.empty()) doc["counterexamples"] = files;
    doc["status"] = r.violations.empty() ? "pass" : "fail";
    std::cout << doc.dump(2) << '\n';
    return r.violations.empty() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree-likeness parameters of unweighted graphs"};
    app.require_subcommand(1);

    AnalyzeOptions an;
    auto* analyze = app.add_subcommand("analyze", "compute parameters of one graph");
    add_source_options(analyze, an.src);
    analyze->add_option("--param", an.param,
                        "delta, delta-w, rho, mu, tau, sigma, kappa, rho-collection, all-exact, approx");
    analyze->add_option("--root", an.root, "BFS root (default 0, or the root of a --labels tree)");
    auto* json_flag = analyze->add_flag("--json", "JSON output (default)");
    analyze->add_flag("--text", an.text, "plain text output")->excludes(json_flag);
    analyze->add_option("--threads", an.threads, "worker threads")->check(CLI::PositiveNumber);
    analyze->add_flag("--force", an.force, "lift the size limits of the exact algorithms");

    Source gen_src;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "write a family member as edge list plus labels");
    add_source_options(generate, gen_src);
    generate->add_option("--out", gen_out, "output prefix")->required();

    std::string cnf, sat_out;
    bool check_tiny = false;
    auto* reduce = app.add_subcommand("reduce-sat", "build the minsize reduction graph of a CNF");
    reduce->add_option("--cnf", cnf, "DIMACS file")->required();
    reduce->add_option("--out", sat_out, "output prefix");
    reduce->add_flag("--check-tiny", check_tiny, "compare exhaustive minsize with a truth table");

    std::string suite, out_dir = ".";
    cli::SuiteOptions sopt;
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", suite, "inequalities, oracles, grids, sat")->required();
    verify->add_option("--seeds", sopt.seeds, "number of random cases");
    verify->add_option("--max-n", sopt.max_n, "largest random graph");
    verify->add_option("--threads", sopt.threads, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--out-dir", out_dir, "where counterexamples are written");

    try {
        app.parse(argc, argv);
        an.root_given = analyze->count("--root") > 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*analyze) {
            const json doc = run_analyze(an);
            if (an.text) print_text(doc);
            else std::cout << doc.dump(2) << '\n';
            return kOk;
        }
        if (*generate) return run_generate(gen_src, gen_out);
        if (*reduce) return run_reduce_sat(cnf, sat_out, check_tiny);
        if (*verify) return run_verify(suite, sopt, out_dir);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::TooLarge:
            case ErrorCode::DiameterOverflow: return kTooLarge;
            default: return kBadInput;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInvariant;
    }
    return kOk;
}
