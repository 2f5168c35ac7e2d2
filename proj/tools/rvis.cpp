// Command-line front end: instance generation, single solves, invariant verification and benchmarks.
//
// Exit codes: 0 success, 1 configuration or input error, 2 invariant breach found by `verify`.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rvis/harness/dimacs.hpp"
#include "rvis/harness/experiment.hpp"
#include "rvis/harness/verify.hpp"
#include "rvis/layers.hpp"

namespace fs = std::filesystem;
using namespace rvis;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBreach = 2;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
}

// key=value; the value is read as JSON when it parses (numbers, arrays), otherwise as a string.
Json parse_assignments(const std::string& family, const std::vector<std::string>& assignments) {
    Json spec = Json::object();
    spec["family"] = family;
    for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("expected key=value, got '" + a + "'");
        const std::string key = a.substr(0, eq);
        const std::string value = a.substr(eq + 1);
        Json parsed = Json::parse(value, nullptr, false);
        spec[key] = parsed.is_discarded() ? Json(value) : parsed;
    }
    return spec;
}

int run_gen(const std::string& family, const std::vector<std::string>& params, const std::string& output) {
    const Json spec = parse_assignments(family, params);
    const Instance inst = build_instance(spec);
    const VertexWeights* w = inst.weights ? &*inst.weights : nullptr;
    write_output(output, write_dimacs(inst.graph, w, spec.dump()));
    return kExitOk;
}

struct SolveOptions {
    std::string file;
    std::string algo;
    std::string variant;
    std::vector<std::string> rhos;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::string format = "table";
    bool no_oracle = false;
    bool show_set = false;
    bool timing = false;
};

int run_solve(const SolveOptions& o) {
    ExperimentConfig config;
    config.master_seed = o.seed;
    config.trials = o.trials;
    config.oracle = !o.no_oracle;
    config.timing = o.timing;
    for (const auto& r : o.rhos) {
        try {
            config.rhos.push_back(parse_rational(r));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("bad --rho: ") + e.what());
        }
    }
    const AlgorithmSpec algo{o.algo, o.variant};
    validate_algorithm(algo);
    const auto format = parse_report_format(o.format);
    Json spec = Json::object();
    spec["file"] = o.file;
    const Instance inst = build_instance(spec);
    const ExperimentResult result = run_single(inst, algo, config);
    if (o.show_set && result.solution) {
        std::cout << "s";
        for (Vertex v : result.solution->members()) std::cout << ' ' << v + 1;
        std::cout << '\n';
    }
    std::cout << emit_report({result}, format);
    return kExitOk;
}

int run_verify(const std::string& dir, std::uint64_t seed, bool quiet) {
    if (!fs::is_directory(dir)) throw ConfigError("'" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".dimacs" || ext == ".col" || ext == ".clq")) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::size_t failures = 0;
    std::size_t checks = 0;
    for (const auto& path : files) {
        DimacsInstance inst;
        try {
            inst = read_dimacs_file(path.string());
        } catch (const ParseError& e) {
            throw ConfigError(path.string() + ": " + e.what());
        }
        for (const auto& warning : inst.warnings) std::cerr << path.string() << ": warning: " << warning << '\n';
        const VertexWeights* w = inst.weights ? &*inst.weights : nullptr;
        for (const auto& outcome : verify_instance(inst.graph, w, seed)) {
            ++checks;
            if (!outcome.passed) ++failures;
            if (!outcome.passed || !quiet) {
                std::cout << (outcome.passed ? "PASS " : "FAIL ") << path.filename().string() << ' ' << outcome.check;
                if (!outcome.detail.empty()) std::cout << ": " << outcome.detail;
                std::cout << '\n';
            }
        }
    }
    std::cout << files.size() << " instances, " << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? kExitOk : kExitBreach;
}

int run_bench(const std::string& config_path, const std::string& format, const std::string& output) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open '" + config_path + "'");
    const Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ConfigError("'" + config_path + "' is not valid JSON");
    const ExperimentConfig config = parse_config(j, fs::path(config_path).parent_path());
    const auto fmt = parse_report_format(format);
    write_output(output, emit_report(run_experiment(config), fmt));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independent set approximations with recoverable-value guarantees"};
    app.require_subcommand(1);

    std::string family;
    std::vector<std::string> params;
    std::string output;
    auto* gen = app.add_subcommand("gen", "Write a generated instance in DIMACS format");
    gen->add_option("family", family, "Generator family (cycle, gnp, regular, layered_counterexample, ...)")
        ->required();
    gen->add_option("params", params, "Generator parameters as key=value (e.g. n=10 p=0.3 seed=7)");
    gen->add_option("-o,--output", output, "Output file (stdout by default)");

    SolveOptions solve_opts;
    auto* solve = app.add_subcommand("solve", "Run one algorithm on a DIMACS file");
    solve->add_option("file", solve_opts.file, "DIMACS instance")->required();
    solve->add_option("--algo", solve_opts.algo, "Algorithm name")->required();
    solve->add_option("--variant", solve_opts.variant, "Algorithm variant (e.g. g3_hr for plg)");
    solve->add_option("--rho", solve_opts.rhos, "Recoverable-value parameter p/q (repeatable)");
    solve->add_option("--seed", solve_opts.seed, "Master seed");
    solve->add_option("--trials", solve_opts.trials, "Trials for randomized algorithms");
    solve->add_option("--format", solve_opts.format, "json, csv or table");
    solve->add_flag("--no-oracle", solve_opts.no_oracle, "Skip the exact optimum");
    solve->add_flag("--show-set", solve_opts.show_set, "Print the returned set (1-indexed)");
    solve->add_flag("--timing", solve_opts.timing, "Report wall-clock duration");

    std::string verify_dir;
    std::uint64_t verify_seed = 0;
    bool quiet = false;
    auto* verify = app.add_subcommand("verify", "Run the oracle-backed invariant suite on every .dimacs, .col or .clq file in a directory");
    verify->add_option("dir", verify_dir, "Directory of DIMACS files")->required();
    verify->add_option("--seed", verify_seed, "Seed for sampled permutations");
    verify->add_flag("-q,--quiet", quiet, "Only print failures and the summary");

    std::string config_path;
    std::string bench_format = "json";
    std::string bench_output;
    auto* bench = app.add_subcommand("bench", "Run an experiment config and emit a report");
    bench->add_option("config", config_path, "Experiment config (JSON)")->required();
    bench->add_option("--format", bench_format, "json, csv or table");
    bench->add_option("-o,--output", bench_output, "Report file (stdout by default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*gen) return run_gen(family, params, output);
        if (*solve) return run_solve(solve_opts);
        if (*verify) return run_verify(verify_dir, verify_seed, quiet);
        if (*bench) return run_bench(config_path, bench_format, bench_output);
    } catch (const InvariantBreach& e) {
        std::cerr << "invariant breach: " << e.what() << '\n';
        return kExitBreach;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}
