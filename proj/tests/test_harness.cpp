#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "vbplab/harness.hpp"

using namespace vbplab;
namespace fs = std::filesystem;

namespace {

fs::path scratch()
{
    auto dir = fs::temp_directory_path() / ("vbplab_harness_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& text)
{
    auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

int cli(const std::string& args, std::string* out = nullptr)
{
    auto out_path = (scratch() / "stdout.txt").string();
    std::string cmd = std::string(VBPLAB_CLI) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (out) {
        std::ifstream in(out_path);
        *out = std::string(std::istreambuf_iterator<char>(in), {});
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(Verify, PassesByDefault)
{
    VerifyConfig cfg;
    auto rep = verify_suite(cfg);
    EXPECT_TRUE(rep.pass()) << testing::PrintToString(rep.failed());
    EXPECT_EQ(rep.invariants.size(), 12u);
    cfg.max_n = 4;
    EXPECT_TRUE(verify_suite(cfg).pass());
}

TEST(Verify, DetectsCorruptedReduction)
{
    VerifyConfig cfg;
    cfg.samples = 10;
    auto drop_back_edges = [](const Graph& g) {
        std::vector<OnlineVertexEvent> ev;
        for (Vertex v = 1; v <= g.n(); ++v)
            ev.push_back({v, {}});
        return coloring_to_vbp(g.n(), ev);
    };
    auto rep = verify_suite(cfg, drop_back_edges);
    EXPECT_FALSE(rep.pass());
    auto failed = rep.failed();
    EXPECT_NE(std::find(failed.begin(), failed.end(), "reduction_equivalence"), failed.end());
    EXPECT_NE(std::find(failed.begin(), failed.end(), "subset_equivalence"), failed.end());
    auto j = verify_report_json(cfg, rep);
    EXPECT_FALSE(j["pass"].get<bool>());
    EXPECT_TRUE(j["invariants"]["reduction_equivalence"].contains("first_violation"));
}

TEST(Bench, FirstFitOnCrown)
{
    BenchConfig cfg;
    cfg.algorithm = "first-fit";
    cfg.instance.kind = "crown";
    cfg.instance.k = 5;
    auto rep = bench(cfg);
    const auto& trial = rep["trials"][0];
    EXPECT_EQ(trial["bins"], 5);
    EXPECT_EQ(trial["opt"], 2);
    EXPECT_EQ(trial["gap"], "5/2");
    EXPECT_EQ(rep["aggregates"]["max_gap"], "5/2");
    EXPECT_TRUE(rep["aggregates"]["within_first_fit_bound"].get<bool>());
}

TEST(Bench, FirstFitOnVbpFile)
{
    BenchConfig cfg;
    cfg.instance.kind = "file";
    cfg.instance.path = write_file("basis.vbp", "vbp 3 3\n1 0 0\n0 1 0\n0 0 1\n");
    auto rep = bench(cfg);
    EXPECT_EQ(rep["trials"][0]["bins"], 1);
    EXPECT_EQ(rep["trials"][0]["gap"], "1");
}

TEST(Bench, GreedyAndAlgorithmB)
{
    BenchConfig cfg;
    cfg.algorithm = "greedy";
    cfg.instance.kind = "gnp";
    cfg.instance.n = 8;
    cfg.trials = 5;
    auto rep = bench(cfg);
    EXPECT_EQ(rep["trials"].size(), 5u);
    EXPECT_NE(rep["trials"][0]["seed"], rep["trials"][1]["seed"]);

    cfg.algorithm = "algorithm-b";
    cfg.instance.kind = "crown";
    cfg.instance.k = 3;
    cfg.t = 16;
    cfg.trials = 20;
    auto b = bench(cfg);
    EXPECT_TRUE(b["aggregates"]["pass"].get<bool>());
    EXPECT_EQ(b["aggregates"]["infeasible"], 0);
    EXPECT_EQ(b, bench(cfg));
}

TEST(Bench, RejectsUnknownAlgorithm)
{
    BenchConfig cfg;
    cfg.algorithm = "best-fit";
    EXPECT_THROW(bench(cfg), InputError);
    RunConfig run;
    run.algorithm = "greedy";
    run.path = write_file("w.vbp", "vbp 1 1\n1\n");
    EXPECT_THROW(run_single(run), InputError);
}

TEST(Csv, FlattensAggregates)
{
    json rep{{"aggregates", {{"bins", {{"max", 3}}}, {"max_gap", "3/2"}}}};
    EXPECT_EQ(aggregates_csv(rep), "key,value\nbins.max,3\nmax_gap,3/2\n");
}

TEST(Cli, ExitCodes)
{
    std::string out;
    EXPECT_EQ(cli("gen cycle --n 5", &out), 0);
    EXPECT_NE(out.find("g 5 5"), std::string::npos);
    auto c5 = write_file("c5.graph", out);

    EXPECT_EQ(cli("run fractional " + c5 + " --no-timing", &out), 0);
    EXPECT_EQ(json::parse(out)["result"]["chi_f"], "5/2");

    EXPECT_EQ(cli("reduce " + c5, &out), 0);
    EXPECT_EQ(out.rfind("vbp 5 5\n1 0 0 0 0\n1/5 1 0 0 0\n", 0), 0u);

    EXPECT_EQ(cli("verify --max-n 4 --samples 5"), 0);
    EXPECT_EQ(cli("bench first-fit --instance crown --k 3 --format csv", &out), 0);
    EXPECT_EQ(out.rfind("key,value\n", 0), 0u);

    EXPECT_EQ(cli("run greedy " + (scratch() / "missing.graph").string()), 2);
    EXPECT_EQ(cli("run greedy " + write_file("bad.graph", "g 2 1\ne 1 1\n")), 2);
    EXPECT_EQ(cli("bench nope"), 2);
    EXPECT_EQ(cli("run opt " + write_file("big.vbp", "vbp 3 1\n1\n1\n1\n") + " --max-items 2"), 3);
}
