#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rvis/graph.hpp"
#include "rvis/kcolored.hpp"

namespace rvis {

/// Bad configuration: unknown names, missing or ill-typed fields, unreadable instance files.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

struct InstanceDescriptor {
    std::string family;  // generator name, or "file"
    Json parameters = Json::object();
    std::optional<std::uint64_t> seed;

    friend bool operator==(const InstanceDescriptor&, const InstanceDescriptor&) = default;
};

struct Instance {
    InstanceDescriptor descriptor;
    Graph graph;
    std::optional<VertexWeights> weights;
    std::optional<Coloring> coloring;
};

/// Builds an instance from {"file": path} or {"family": name, ...parameters}. Relative paths resolve
/// against `base_dir`. Families: cycle, path, complete, star, petersen, complete_bipartite, gnp,
/// regular, cycles_and_paths, random_tree, unicyclic, layered_counterexample, rvlp_tight, k_colored,
/// hardness_product (with a nested "base" instance). Throws ConfigError.
Instance build_instance(const Json& spec, const std::filesystem::path& base_dir = {});

struct AlgorithmSpec {
    std::string name;
    std::string variant;  // empty when the algorithm has none
};

bool is_randomized(const AlgorithmSpec& a);
std::vector<std::string> algorithm_names();

/// Throws ConfigError for an unknown algorithm or variant.
void validate_algorithm(const AlgorithmSpec& a);

struct ExperimentConfig {
    std::vector<Json> instances;
    std::vector<AlgorithmSpec> algorithms;
    std::vector<Rational> rhos;
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    bool oracle = true;
    Vertex oracle_limit = 40;
    bool timing = false;
    std::filesystem::path base_dir;
};

/// Reads {"instances": [...], "algorithms": [name | {"name", "variant"}], "rho": ["p/q", ...],
/// "trials": t, "master_seed": s, "oracle": bool, "oracle_limit": n, "timing": bool}.
ExperimentConfig parse_config(const Json& j, const std::filesystem::path& base_dir = {});

struct TrialStats {
    std::size_t trials = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t first_trial = 0;
    std::uint64_t last_trial = 0;
    Rational mean_weight;
    double stddev = 0;
    double ci_low = 0;   // 99% normal interval on the mean weight
    double ci_high = 0;

    friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

struct RecoverableValueEntry {
    Rational rho;
    Rational value;  // maximum over independent sets of the recoverable value at rho

    friend bool operator==(const RecoverableValueEntry&, const RecoverableValueEntry&) = default;
};

struct ExperimentResult {
    InstanceDescriptor instance;
    Vertex vertices = 0;
    std::size_t edges = 0;
    std::string algorithm;
    std::string variant;
    Rational size;    // set size, or its trial mean
    Rational weight;  // set weight, or its trial mean
    std::optional<Rational> oracle;
    std::optional<Rational> ratio;  // weight / oracle
    std::vector<RecoverableValueEntry> recoverable_value;
    std::optional<TrialStats> stats;
    std::optional<double> duration_ms;
    /// Members of the returned set for deterministic algorithms (not serialized).
    std::optional<IndependentSet> solution;

    friend bool operator==(const ExperimentResult&, const ExperimentResult&) = default;
};

/// Runs one algorithm on one instance. Trial t of a randomized algorithm uses trial_seed(master_seed, t),
/// so every instance/algorithm pair sees the same seed sequence.
ExperimentResult run_single(const Instance& inst, const AlgorithmSpec& algo, const ExperimentConfig& config);

/// Builds every instance and checks every algorithm name before running anything.
std::vector<ExperimentResult> run_experiment(const ExperimentConfig& config);

/// The set an algorithm returns for one seed.
IndependentSet run_algorithm(const Instance& inst, const AlgorithmSpec& algo, std::uint64_t seed);

enum class ReportFormat { Json, Csv, Table };
ReportFormat parse_report_format(std::string_view name);

Json to_json(const ExperimentResult& r);
ExperimentResult result_from_json(const Json& j);
std::string emit_report(const std::vector<ExperimentResult>& results, ReportFormat format);
std::vector<ExperimentResult> parse_json_report(std::string_view text);

}  // namespace rvis
