#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "corpus.hpp"
#include "rvis/generators.hpp"
#include "rvis/harness/dimacs.hpp"
#include "rvis/harness/experiment.hpp"
#include "rvis/harness/verify.hpp"

using namespace rvis;
using namespace rvis::testing;
namespace fs = std::filesystem;

namespace {

ExperimentConfig config_from(std::string_view text) { return parse_config(Json::parse(text)); }

struct ScratchDir {
    fs::path path;
    ScratchDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("rvis-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~ScratchDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args, const fs::path& out) {
    const std::string cmd = std::string(RVIS_CLI) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("DIMACS examples") {
    CHECK(parse_dimacs("p edge 2 1\ne 1 2\n").graph == gen_path(2));
    const auto c5 = parse_dimacs("c five\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    CHECK(c5.graph == gen_cycle(5));
    CHECK(c5.warnings.empty());
    CHECK_FALSE(c5.weights.has_value());

    const auto dup = parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n");
    CHECK(dup.graph.edge_count() == 2);

    const auto mismatch = parse_dimacs("p edge 3 5\ne 1 2\n");
    CHECK(mismatch.warnings.size() == 1);
}

TEST_CASE("DIMACS errors carry the line number") {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_dimacs(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("e 1 2\np edge 2 1\n") == 1);
    CHECK(line_of("c x\np edge 2 1\ne 1 3\n") == 3);
    CHECK(line_of("p edge 2 1\ne 2 2\n") == 2);
    CHECK(line_of("p edge 2 1\np edge 2 1\n") == 2);
    CHECK(line_of("p edge 2 0\nw 1 -1/2\n") == 2);
    CHECK(line_of("p edge 2 0\nx 1\n") == 2);
    CHECK(line_of("c only a comment\n") > 0);
}

TEST_CASE("DIMACS round trip") {
    auto graphs = random_graphs(100, 0, 14, 401);
    for (const auto& ng : named_graphs()) graphs.push_back(ng.graph);
    std::uint64_t seed = 0;
    for (const auto& g : graphs) {
        const auto plain = parse_dimacs(write_dimacs(g, nullptr, "round trip"));
        CHECK(plain.graph == g);
        CHECK(plain.warnings.empty());

        const VertexWeights w = random_weights(g.vertex_count(), ++seed);
        const auto weighted = parse_dimacs(write_dimacs(g, &w));
        CHECK(weighted.graph == g);
        if (g.vertex_count() > 0) {
            REQUIRE(weighted.weights.has_value());
            CHECK(*weighted.weights == w);
        }
    }
}

TEST_CASE("small experiments") {
    const auto c5 = run_experiment(config_from(R"({"instances":[{"family":"cycle","n":5}],"algorithms":["greedy"]})"));
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].size == 2);
    CHECK(c5[0].oracle == Rational(2));
    CHECK(c5[0].ratio == Rational(1));

    const auto layered = run_experiment(config_from(
        R"({"instances":[{"family":"layered_counterexample","k":2,"d":3}],"algorithms":["greedy","lp_plus_greedy"]})"));
    REQUIRE(layered.size() == 2);
    CHECK(layered[0].size == 3);
    CHECK(layered[1].size == 3);
}

TEST_CASE("randomized experiment on K3,8") {
    const auto r = run_experiment(config_from(
        R"({"instances":[{"family":"complete_bipartite","a":3,"b":8}],
            "algorithms":[{"name":"plg","variant":"g3_hr"}],"trials":10000,"master_seed":7,"rho":["3/2"]})"));
    REQUIRE(r.size() == 1);
    REQUIRE(r[0].stats.has_value());
    const TrialStats& s = *r[0].stats;
    CHECK(s.trials == 10000);
    CHECK(s.first_trial == 0);
    CHECK(s.last_trial == 9999);
    CHECK(s.ci_low <= s.ci_high);
    CHECK(s.ci_high >= 30.0 / 7.0);
    CHECK(*r[0].ratio <= 1);
    REQUIRE(r[0].recoverable_value.size() == 1);
    CHECK(r[0].recoverable_value[0].value == Rational(8) * Rational(3, 2) / 4);
}

TEST_CASE("configuration errors come before any run") {
    CHECK_THROWS_AS(run_experiment(config_from(
                        R"({"instances":[{"family":"cycle","n":5}],"algorithms":["greedy","no_such_algo"]})")),
                    ConfigError);
    CHECK_THROWS_AS(run_experiment(config_from(R"({"instances":[{"family":"moebius","n":5}],"algorithms":["greedy"]})")),
                    ConfigError);
    CHECK_THROWS_AS(config_from(R"({"instances":[],"algorithms":[],"trails":3})"), ConfigError);
    CHECK_THROWS_AS(run_experiment(config_from(
                        R"({"instances":[{"family":"cycle","n":5}],"algorithms":[{"name":"plg","variant":"g5"}]})")),
                    ConfigError);
}

TEST_CASE("reports") {
    CHECK(parse_json_report(emit_report({}, ReportFormat::Json)).empty());
    CHECK_FALSE(emit_report({}, ReportFormat::Csv).empty());

    const char* cfg = R"({"instances":[{"family":"gnp","n":12,"p":0.3,"seed":3},{"family":"petersen"}],
        "algorithms":["greedy","avg2",{"name":"plg","variant":"g4_after_2elim"},"fast_randomized"],
        "trials":50,"master_seed":11,"rho":["1","7/3"]})";
    const auto first = run_experiment(config_from(cfg));
    const std::string a = emit_report(first, ReportFormat::Json);
    const std::string b = emit_report(run_experiment(config_from(cfg)), ReportFormat::Json);
    CHECK(a == b);
    CHECK(a.find("\"exact\"") != std::string::npos);
    CHECK(a.find("\"decimal\"") != std::string::npos);
    CHECK(a.find("\"ci99\"") != std::string::npos);

    const auto back = parse_json_report(a);
    REQUIRE(back.size() == first.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        ExperimentResult expected = first[i];
        expected.solution.reset();
        CHECK(back[i] == expected);
        CHECK(back[i].stats.has_value() == is_randomized({first[i].algorithm, first[i].variant}));
    }
    CHECK(emit_report(first, ReportFormat::Table).find("greedy") != std::string::npos);
    CHECK_THROWS(parse_report_format("xml"));
}

TEST_CASE("verification suite passes on valid instances") {
    auto graphs = random_graphs(30, 2, 12, 409);
    for (const auto& g : sparse_corpus(20, 12, 411)) graphs.push_back(g);
    std::uint64_t seed = 0;
    for (const auto& g : graphs) {
        const VertexWeights w = random_weights(g.vertex_count(), ++seed);
        for (const VertexWeights* wp : {static_cast<const VertexWeights*>(nullptr), &w}) {
            const auto outcomes = verify_instance(g, wp, seed);
            CHECK_FALSE(outcomes.empty());
            for (const auto& o : outcomes) {
                INFO(o.check << ": " << o.detail);
                CHECK(o.passed);
            }
        }
    }
}

TEST_CASE("command line exit codes") {
    ScratchDir dir;
    const fs::path out = dir.path / "out.txt";
    const fs::path c5 = dir.path / "c5.dimacs";
    REQUIRE(run_cli("gen cycle n=5 -o " + c5.string(), out) == 0);
    CHECK(parse_dimacs(slurp(c5)).graph == gen_cycle(5));

    CHECK(run_cli("solve " + c5.string() + " --algo greedy --format json", out) == 0);
    const auto results = parse_json_report(slurp(out));
    REQUIRE(results.size() == 1);
    CHECK(results[0].size == 2);

    CHECK(run_cli("solve " + c5.string() + " --algo nonsense", out) == 1);
    CHECK(run_cli("frobnicate", out) == 1);

    const fs::path cfg = dir.path / "bench.json";
    std::ofstream(cfg) << R"({"instances":[{"file":"c5.dimacs"}],"algorithms":["greedy","avg2"]})";
    CHECK(run_cli("bench " + cfg.string() + " --format json", out) == 0);
    CHECK(parse_json_report(slurp(out)).size() == 2);

    CHECK(run_cli("verify " + dir.path.string() + " -q", out) == 0);
}
