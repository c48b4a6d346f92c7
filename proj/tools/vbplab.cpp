// vbplab: command-line front end for the coloring / copies-coloring / vector
// bin packing laboratory.
//
// Exit codes: 0 success, 1 invariant or protocol failure, 2 input error,
// 3 resource limit exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vbplab/harness.hpp"

namespace {

using namespace vbplab;

struct Globals {
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    unsigned jobs = 1;
    std::string format = "json";
    std::size_t max_n = 0;  // 0: command default
    std::size_t max_items = kDefaultItemLimit;
    bool timing = true;
    std::string output;
};

void emit(const Globals& g, json report, double wall_ms)
{
    if (g.timing)
        report["wall_time_ms"] = wall_ms;
    std::string text = g.format == "csv" ? aggregates_csv(report) : report.dump(2) + "\n";
    if (g.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(g.output);
        require_input(static_cast<bool>(out), "cannot write '" + g.output + "'");
        out << text;
    }
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    require_input(static_cast<bool>(out), "cannot write '" + path + "'");
    out << text;
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"vbplab: online coloring, copies-coloring and vector bin packing laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string("vbplab ") + kToolVersion);

    Globals glob;
    app.add_option("--seed", glob.seed, "Master seed for every random stream");
    app.add_option("--trials", glob.trials, "Number of trials")->check(CLI::PositiveNumber);
    app.add_option("--jobs", glob.jobs, "Worker threads for independent trials")->check(CLI::PositiveNumber);
    app.add_option("--format", glob.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--max-n", glob.max_n, "Exact-oracle vertex limit (verify: largest graph size)")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-items", glob.max_items, "Exact bin-packing item limit")->check(CLI::PositiveNumber);
    app.add_flag("!--no-timing", glob.timing, "Omit wall_time_ms from reports");
    app.add_option("-o,--output", glob.output, "Write output to a file instead of stdout");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph (or reduced VBP) instance file");
    InstanceSpec gen_spec;
    int gen_t = 0;
    bool gen_vbp = false;
    gen->add_option("kind", gen_spec.kind, "Graph family")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "complete", "empty", "crown", "gnp"}));
    gen->add_option("--n", gen_spec.n, "Vertex count");
    gen->add_option("--k", gen_spec.k, "Crown half-size");
    gen->add_option("--p", gen_spec.p, "Edge probability (gnp)");
    gen->add_option("--t", gen_t, "Copies per vertex; adds a 't' header (or reduces with copies under --vbp)");
    gen->add_flag("--vbp", gen_vbp, "Emit the reduced VBP instance instead of the graph");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Reduce a graph (copies) instance to a VBP instance file");
    std::string reduce_in;
    int reduce_t = 0;
    reduce->add_option("input", reduce_in, "Graph file")->required();
    reduce->add_option("--t", reduce_t, "Copies per vertex (overrides the file's 't' header)");

    // run
    auto* run = app.add_subcommand("run", "Run one algorithm or oracle on an instance file");
    RunConfig run_cfg;
    run->add_option("algorithm", run_cfg.algorithm, "Algorithm or oracle")
        ->required()
        ->check(CLI::IsMember(
            {"greedy", "greedy-ccp", "first-fit", "algorithm-b", "chromatic", "fractional", "opt", "sandwich"}));
    run->add_option("input", run_cfg.path, "Graph or VBP file")->required();
    run->add_option("--t", run_cfg.t, "Copies per vertex");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the invariant suite on small exhaustive and seeded graphs");
    VerifyConfig ver_cfg;
    verify->add_option("--samples", ver_cfg.samples, "Seeded random graphs in addition to the exhaustive corpus");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark an online algorithm against exact oracles");
    BenchConfig bench_cfg;
    bench_cmd->add_option("algorithm", bench_cfg.algorithm, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"first-fit", "greedy", "fresh", "algorithm-b"}));
    bench_cmd->add_option("--instance", bench_cfg.instance.kind, "Instance family, or 'file'")
        ->check(CLI::IsMember({"file", "cycle", "path", "complete", "empty", "crown", "gnp"}));
    bench_cmd->add_option("--file", bench_cfg.instance.path, "Instance file (implies --instance file)");
    bench_cmd->add_option("--n", bench_cfg.instance.n, "Vertex count");
    bench_cmd->add_option("--k", bench_cfg.instance.k, "Crown half-size");
    bench_cmd->add_option("--p", bench_cfg.instance.p, "Edge probability (gnp)");
    bench_cmd->add_option("--t", bench_cfg.t, "Copies per vertex");
    bench_cmd->add_option("--inner", bench_cfg.inner, "Copies algorithm simulated by algorithm-b")
        ->check(CLI::IsMember({"greedy-ccp", "first-fit"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (*gen) {
            Graph g = generate_graph(gen_spec, glob.seed);
            std::ostringstream os;
            if (gen_vbp)
                write_vbp_file(os, gen_t > 1 ? ccp_to_vbp(CopiesInstance(g, gen_t)) : coloring_to_vbp(g));
            else
                write_graph_file(os, g, gen_t);
            write_text(glob.output, os.str());
            return 0;
        }
        if (*reduce) {
            auto gf = load_graph_file(reduce_in);
            int t = reduce_t > 0 ? reduce_t : std::max(1, gf.t);
            require_input(gf.graph.n() >= 1, "cannot reduce an empty graph");
            std::ostringstream os;
            write_vbp_file(os, ccp_to_vbp(CopiesInstance(gf.graph, t)));
            write_text(glob.output, os.str());
            return 0;
        }
        if (*run) {
            run_cfg.seed = glob.seed;
            if (glob.max_n)
                run_cfg.max_n = glob.max_n;
            run_cfg.max_items = glob.max_items;
            emit(glob, run_single(run_cfg), elapsed_ms(start));
            return 0;
        }
        if (*verify) {
            ver_cfg.seed = glob.seed;
            ver_cfg.max_items = glob.max_items;
            if (glob.max_n)
                ver_cfg.max_n = static_cast<int>(glob.max_n);
            auto rep = verify_suite(ver_cfg);
            emit(glob, verify_report_json(ver_cfg, rep), elapsed_ms(start));
            for (const auto& name : rep.failed())
                std::cerr << "invariant failed: " << name << "\n";
            return rep.pass() ? 0 : 1;
        }
        if (*bench_cmd) {
            if (!bench_cfg.instance.path.empty())
                bench_cfg.instance.kind = "file";
            bench_cfg.seed = glob.seed;
            bench_cfg.trials = glob.trials;
            bench_cfg.jobs = glob.jobs;
            if (glob.max_n)
                bench_cfg.max_n = glob.max_n;
            bench_cfg.max_items = glob.max_items;
            json rep = bench(bench_cfg);
            emit(glob, rep, elapsed_ms(start));
            const auto& agg = rep["aggregates"];
            bool ok = agg.value("pass", true) && agg.value("within_first_fit_bound", true);
            return ok ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ProtocolError& e) {
        std::cerr << "protocol error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
