#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "treelike/treelike.hpp"
#include "witness.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(TREELIKE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args) {
    const Run r = run(args);
    EXPECT_EQ(r.code, 0) << args;
    return json::parse(r.out);
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("treelike-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    fs::path dir_;
};

const json* find_param(const json& doc, const std::string& name) {
    for (const auto& r : doc["results"])
        if (r["param"] == name) return &r;
    return nullptr;
}

}  // namespace

TEST_F(Cli, RhoOnStaircaseGrid) {
    const json doc = run_json("analyze --family hk --k 2 --param rho --root 0");
    const json* rho = find_param(doc, "rho");
    ASSERT_NE(rho, nullptr);
    EXPECT_EQ((*rho)["value"], "8");
    EXPECT_EQ((*rho)["value_x2"], 16);
    EXPECT_EQ((*rho)["witness"].size(), 5u);
    EXPECT_EQ(doc["tree"]["source"], "generator");
}

TEST_F(Cli, PathIsZeroEverywhere) {
    const json doc = run_json("analyze --family path --k 5 --param all-exact");
    EXPECT_GE(doc["results"].size(), 7u);
    for (const auto& r : doc["results"]) {
        EXPECT_EQ(r["value"], "0") << r["param"];
        EXPECT_EQ(r["value_x2"], 0);
    }
    EXPECT_EQ(doc["collection"]["rho_T"], 0);
}

TEST_F(Cli, ApproxBoundsFromFile) {
    const std::string g = write("g.edges", treelike::to_edge_list(treelike::gen_gnp_connected(40, 0.1, 5)));
    const json doc = run_json("analyze --input " + g + " --param approx");
    ASSERT_EQ(doc["results"].size(), 1u);
    const int rho = doc["bounds"]["rho"];
    EXPECT_EQ(doc["results"][0]["value_x2"], 2 * rho);
    // rho / 4 rounded up to a multiple of 1/2, and 2 rho + 1; both doubled.
    EXPECT_EQ(doc["bounds"]["lower_x2"], (rho + 1) / 2);
    EXPECT_EQ(doc["bounds"]["upper_x2"], 2 * (2 * rho + 1));
    const auto d = treelike::all_pairs_distances(treelike::gen_gnp_connected(40, 0.1, 5));
    const auto delta = treelike::hyperbolicity_exact(d).value.doubled();
    EXPECT_LE(doc["bounds"]["lower_x2"].get<std::int64_t>(), delta);
    EXPECT_LE(delta, doc["bounds"]["upper_x2"].get<std::int64_t>());
}

TEST_F(Cli, ValueStringMatchesDoubled) {
    const json doc = run_json("analyze --family cycle --n 5 --param all-exact");
    for (const auto& r : doc["results"]) {
        const std::int64_t x2 = r["value_x2"];
        EXPECT_EQ(r["value"], treelike::HalfInt::from_doubled(x2).to_string());
    }
    EXPECT_EQ(find_param(doc, "delta")->at("value"), "0.5");
}

TEST_F(Cli, ThreadsDoNotChangeResults) {
    auto strip = [](json doc) {
        for (auto& r : doc["results"]) r.erase("wall_time");
        doc.erase("collection");
        return doc;
    };
    const std::string args = "analyze --family gnp --n 60 --p 0.08 --seed 11 --param all-exact";
    EXPECT_EQ(strip(run_json(args + " --threads 1")).dump(), strip(run_json(args + " --threads 4")).dump());
}

TEST_F(Cli, GenerateAndRoundTrip) {
    ASSERT_EQ(run("generate --family gk --k 1 --out " + path("gk1")).code, 0);
    std::ifstream labels(path("gk1.labels.json"));
    const json lab = json::parse(labels);
    EXPECT_EQ(lab["tree"]["parent"].size(), 25u);
    EXPECT_EQ(lab["roles"]["w"][0], lab["tree"]["root"]);

    const json doc =
        run_json("analyze --input " + path("gk1.edges") + " --labels " + path("gk1.labels.json") + " --param all-exact");
    EXPECT_EQ(doc["input"]["vertices"], 25);
    EXPECT_EQ(doc["tree"]["source"], "generator");
    EXPECT_LE(find_param(doc, "rho")->at("value_x2").get<int>(), 4);
    EXPECT_EQ(find_param(doc, "delta")->at("value"), "4");

    ASSERT_EQ(run("generate --family cycle --n 5 --out " + path("c5")).code, 0);
    std::ifstream edges(path("c5.edges"));
    std::string text((std::istreambuf_iterator<char>(edges)), {});
    EXPECT_EQ(treelike::parse_edge_list(text).graph, treelike::gen_cycle(5));
}

TEST_F(Cli, ReduceSat) {
    const std::string fig = write("fig.cnf", "c exclusive or\np cnf 2 2\n1 2 0\n-1 -2 0\n");
    const json doc = run_json("reduce-sat --cnf " + fig + " --out " + path("fig") + " --check-tiny");
    EXPECT_EQ(doc["verdict"]["agree"], true);
    EXPECT_EQ(doc["verdict"]["satisfiable"], true);
    EXPECT_EQ(doc["vertices"], 23);
    EXPECT_TRUE(fs::exists(path("fig.edges")));

    const std::string unsat = write("u.cnf", "p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n");
    const json u = run_json("reduce-sat --cnf " + unsat + " --check-tiny");
    EXPECT_EQ(u["verdict"]["agree"], true);
    EXPECT_EQ(u["verdict"]["satisfiable"], false);

    EXPECT_EQ(run("reduce-sat --cnf " + write("bad.cnf", "1 2 0\n")).code, 2);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run("analyze --input " + write("loop.edges", "0 0\n") + " --param rho").code, 2);
    EXPECT_EQ(run("analyze --input " + write("split.edges", "0 1\n2 3\n") + " --param rho").code, 2);
    EXPECT_EQ(run("analyze --input " + path("missing.edges")).code, 2);
    EXPECT_EQ(run("analyze --family path --k 3 --param nope").code, 2);
    EXPECT_EQ(run("analyze --family path --n 401 --param delta").code, 3);
    EXPECT_EQ(run("analyze --family path --n 1201 --param sigma").code, 3);
    EXPECT_EQ(run("analyze --family path --n 1501 --param all-exact").code, 3);
    EXPECT_EQ(run("generate --family hk --k 0 --out " + path("x")).code, 2);
    EXPECT_EQ(run("verify --suite nope").code, 2);
}

TEST_F(Cli, VerifySuites) {
    EXPECT_EQ(run_json("verify --suite grids --seeds 2")["status"], "pass");
    EXPECT_EQ(run_json("verify --suite oracles --seeds 20 --max-n 9")["status"], "pass");
    EXPECT_EQ(run_json("verify --suite inequalities --seeds 10 --max-n 20")["status"], "pass");
    EXPECT_EQ(run_json("verify --suite sat --seeds 4")["status"], "pass");
}

TEST(WitnessCheck, RejectsTamperedWitnesses) {
    using namespace treelike;
    const Generated h = gen_Hk(2);
    const DistanceMatrix d = all_pairs_distances(h.graph);
    std::vector<ParamReport> reports{hyperbolicity_exact(d), pointed_hyperbolicity(d, 0), interval_thinness(d),
                                     thinness_exact(h.graph, d), slimness_exact(h.graph, d)};
    const RootedInsize rho = rooted_insize_dense(d, *h.tree);
    reports.push_back({Param::Rho, HalfInt::from_int(rho.rho),
                       {0, rho.witness.x, rho.witness.y, rho.witness.x_y, rho.witness.y_x}, "dense"});
    for (ParamReport r : reports) {
        EXPECT_EQ(cli::check_witness(r, d, h.graph, &*h.tree), "") << to_string(r.parameter);
        r.value = r.value + HalfInt::from_int(1);
        EXPECT_NE(cli::check_witness(r, d, h.graph, &*h.tree), "") << to_string(r.parameter);
    }
}
