#include "rvis/harness/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "rvis/avg2.hpp"
#include "rvis/classic.hpp"
#include "rvis/generators.hpp"
#include "rvis/halfint_lp.hpp"
#include "rvis/harness/dimacs.hpp"
#include "rvis/layers.hpp"
#include "rvis/oracle.hpp"
#include "rvis/plg.hpp"
#include "rvis/random.hpp"

namespace rvis {

namespace {

constexpr double kZ99 = 2.576;

template <typename T>
T field(const Json& spec, const char* key) {
    if (!spec.contains(key)) throw ConfigError(std::string("instance spec is missing '") + key + "'");
    try {
        return spec.at(key).get<T>();
    } catch (const Json::exception&) {
        throw ConfigError(std::string("instance field '") + key + "' has the wrong type");
    }
}

template <typename T>
T field_or(const Json& spec, const char* key, T fallback) {
    return spec.contains(key) ? field<T>(spec, key) : fallback;
}

Json parameters_without_family(const Json& spec) {
    Json out = Json::object();
    for (auto it = spec.begin(); it != spec.end(); ++it) {
        if (it.key() != "family") out[it.key()] = it.value();
    }
    return out;
}

// Runs `solve` on the non-isolated part and adds every isolated vertex back.
template <typename Solve>
IndependentSet with_isolated(const Graph& g, Solve&& solve) {
    std::vector<Vertex> isolated;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.vertex_count(); ++v) (g.degree(v) == 0 ? isolated : rest).push_back(v);
    if (isolated.empty()) return solve(g, std::vector<Vertex>{});
    const DerivedGraph core = induced_subgraph(g, rest);
    std::vector<Vertex> members(isolated);
    const IndependentSet inner = solve(core.graph, core.to_parent);
    for (Vertex v : inner.members()) members.push_back(core.to_parent[v]);
    return IndependentSet(std::move(members));
}

const std::map<std::string, std::vector<std::string>, std::less<>>& algorithm_table() {
    static const std::map<std::string, std::vector<std::string>, std::less<>> table{
        {"greedy", {}},
        {"weighted_greedy", {"max_ratio", "min_ratio"}},
        {"lp_plus_greedy", {}},
        {"rv_lp_round", {}},
        {"avg2", {}},
        {"degeneracy_greedy", {}},
        {"best_pair", {}},
        {"lp_largest_class", {}},
        {"exact", {}},
        {"plg", {"g3_hr", "g4_after_2elim", "g3_avg2"}},
        {"fast_randomized", {}},
        {"random_permutation", {}},
        {"degeneracy_pipeline", {}},
    };
    return table;
}

Json rational_json(const Rational& r) {
    Json j = Json::object();
    j["exact"] = to_string(r);
    j["decimal"] = to_double(r);
    return j;
}

Rational rational_from_json(const Json& j) { return parse_rational(j.at("exact").get<std::string>()); }

}  // namespace

Instance build_instance(const Json& spec, const std::filesystem::path& base_dir) {
    if (!spec.is_object()) throw ConfigError("instance spec must be an object");
    Instance inst;
    if (spec.contains("file")) {
        const std::filesystem::path path = base_dir / field<std::string>(spec, "file");
        DimacsInstance parsed;
        try {
            parsed = read_dimacs_file(path.string());
        } catch (const ParseError& e) {
            throw ConfigError(path.string() + ": " + e.what());
        } catch (const std::runtime_error& e) {
            throw ConfigError(e.what());
        }
        inst.descriptor.family = "file";
        inst.descriptor.parameters["file"] = field<std::string>(spec, "file");
        inst.graph = std::move(parsed.graph);
        inst.weights = std::move(parsed.weights);
        return inst;
    }
    const auto family = field<std::string>(spec, "family");
    inst.descriptor.family = family;
    inst.descriptor.parameters = parameters_without_family(spec);
    if (spec.contains("seed")) inst.descriptor.seed = field<std::uint64_t>(spec, "seed");
    const std::uint64_t seed = inst.descriptor.seed.value_or(0);

    try {
        if (family == "cycle") {
            inst.graph = gen_cycle(field<Vertex>(spec, "n"));
        } else if (family == "path") {
            inst.graph = gen_path(field<Vertex>(spec, "n"));
        } else if (family == "complete") {
            inst.graph = gen_complete(field<Vertex>(spec, "n"));
        } else if (family == "star") {
            inst.graph = gen_star(field<Vertex>(spec, "leaves"));
        } else if (family == "petersen") {
            inst.graph = gen_petersen();
        } else if (family == "complete_bipartite") {
            inst.graph = gen_random(CompleteBipartite{field<Vertex>(spec, "a"), field<Vertex>(spec, "b")}, seed);
        } else if (family == "gnp") {
            inst.graph = gen_random(Gnp{field<Vertex>(spec, "n"), field<double>(spec, "p")}, seed);
        } else if (family == "regular") {
            inst.graph = gen_random(Regular{field<Vertex>(spec, "n"), field<int>(spec, "d")}, seed);
        } else if (family == "cycles_and_paths") {
            inst.graph = gen_random(CyclesAndPaths{field_or<std::vector<Vertex>>(spec, "cycles", {}),
                                                   field_or<std::vector<Vertex>>(spec, "paths", {})},
                                    seed);
        } else if (family == "random_tree") {
            inst.graph = gen_random_tree(field<Vertex>(spec, "n"), seed);
        } else if (family == "unicyclic") {
            inst.graph = gen_random_unicyclic(field<Vertex>(spec, "n"), seed);
        } else if (family == "layered_counterexample") {
            inst.graph = gen_layered_counterexample(field<int>(spec, "k"), field<int>(spec, "d"));
        } else if (family == "rvlp_tight") {
            auto wg = gen_rvlp_tight(field<int>(spec, "k"));
            inst.graph = std::move(wg.graph);
            inst.weights = std::move(wg.weights);
        } else if (family == "k_colored") {
            auto cg = gen_k_colored(field<Vertex>(spec, "n"), field<int>(spec, "k"), field<double>(spec, "p"), seed);
            inst.graph = std::move(cg.graph);
            inst.coloring = std::move(cg.coloring);
        } else if (family == "hardness_product") {
            if (!spec.contains("base")) throw ConfigError("hardness_product needs a 'base' instance");
            const Instance base = build_instance(spec.at("base"), base_dir);
            auto p = gen_hardness_product(base.graph, field<int>(spec, "k"));
            inst.graph = std::move(p.graph);
            inst.coloring = std::move(p.coloring);
        } else {
            throw ConfigError("unknown instance family '" + family + "'");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError("instance '" + family + "': " + e.what());
    }
    return inst;
}

std::vector<std::string> algorithm_names() {
    std::vector<std::string> out;
    for (const auto& [name, variants] : algorithm_table()) out.push_back(name);
    return out;
}

bool is_randomized(const AlgorithmSpec& a) {
    return a.name == "plg" || a.name == "fast_randomized" || a.name == "random_permutation" ||
           a.name == "degeneracy_pipeline";
}

void validate_algorithm(const AlgorithmSpec& a) {
    const auto it = algorithm_table().find(a.name);
    if (it == algorithm_table().end()) throw ConfigError("unknown algorithm '" + a.name + "'");
    const auto& variants = it->second;
    if (variants.empty()) {
        if (!a.variant.empty()) throw ConfigError("algorithm '" + a.name + "' takes no variant");
        return;
    }
    if (!a.variant.empty() && std::find(variants.begin(), variants.end(), a.variant) == variants.end()) {
        throw ConfigError("unknown variant '" + a.variant + "' for algorithm '" + a.name + "'");
    }
}

ExperimentConfig parse_config(const Json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::set<std::string> known{"instances", "algorithms", "rho",          "trials",
                                             "master_seed", "oracle",   "oracle_limit", "timing"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known.count(it.key())) throw ConfigError("unknown config key '" + it.key() + "'");
    }
    ExperimentConfig c;
    c.base_dir = base_dir;
    try {
        if (!j.contains("instances") || !j.at("instances").is_array()) {
            throw ConfigError("config needs an 'instances' array");
        }
        for (const auto& spec : j.at("instances")) c.instances.push_back(spec);
        if (!j.contains("algorithms") || !j.at("algorithms").is_array()) {
            throw ConfigError("config needs an 'algorithms' array");
        }
        for (const auto& a : j.at("algorithms")) {
            AlgorithmSpec spec;
            if (a.is_string()) {
                spec.name = a.get<std::string>();
            } else {
                spec.name = a.at("name").get<std::string>();
                spec.variant = a.value("variant", std::string());
            }
            validate_algorithm(spec);
            c.algorithms.push_back(std::move(spec));
        }
        for (const auto& r : j.value("rho", Json::array())) {
            try {
                c.rhos.push_back(r.is_string() ? parse_rational(r.get<std::string>()) : Rational(r.get<long long>()));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("bad rho value: ") + e.what());
            }
        }
        c.trials = j.value("trials", std::size_t{1});
        c.master_seed = j.value("master_seed", std::uint64_t{0});
        c.oracle = j.value("oracle", true);
        c.oracle_limit = j.value("oracle_limit", Vertex{40});
        c.timing = j.value("timing", false);
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if (c.trials == 0) throw ConfigError("'trials' must be positive");
    return c;
}

IndependentSet run_algorithm(const Instance& inst, const AlgorithmSpec& algo, std::uint64_t seed) {
    const Graph& g = inst.graph;
    const VertexWeights w = inst.weights.value_or(VertexWeights::unit(g.vertex_count()));
    const std::string& name = algo.name;

    if (name == "greedy") return greedy(g);
    if (name == "weighted_greedy") {
        return weighted_greedy(g, w, algo.variant == "min_ratio" ? GreedyRule::MinRatio : GreedyRule::MaxRatio);
    }
    if (name == "lp_plus_greedy") return lp_plus_greedy(g);
    if (name == "rv_lp_round") {
        return with_isolated(g, [&](const Graph& h, const std::vector<Vertex>& to_parent) {
            return rv_lp_round(h, to_parent.empty() ? w : w.restrict_to(to_parent));
        });
    }
    if (name == "avg2") return solve_avg2(g).set;
    if (name == "degeneracy_greedy") return degeneracy_order_greedy(g);
    if (name == "best_pair" || name == "lp_largest_class") {
        const Coloring c = inst.coloring.value_or(greedy_coloring(g));
        return name == "best_pair" ? best_pair_approx(g, c) : lp_largest_class_approx(g, c);
    }
    if (name == "exact") return mwis_exact(g, w);
    if (name == "plg") return plg(g, seed, parse_plg_variant(algo.variant.empty() ? "g3_hr" : algo.variant));
    if (name == "fast_randomized") {
        return with_isolated(g, [&](const Graph& h, const std::vector<Vertex>& to_parent) {
            return fast_randomized_mwis(h, to_parent.empty() ? w : w.restrict_to(to_parent), seed);
        });
    }
    if (name == "random_permutation") return random_permutation_is(g, seed);
    if (name == "degeneracy_pipeline") {
        return with_isolated(g, [&](const Graph& h, const std::vector<Vertex>&) {
            return h.vertex_count() == 0 ? IndependentSet() : degeneracy_pipeline(h, seed);
        });
    }
    throw ConfigError("unknown algorithm '" + name + "'");
}

ExperimentResult run_single(const Instance& inst, const AlgorithmSpec& algo, const ExperimentConfig& config) {
    const Graph& g = inst.graph;
    const VertexWeights w = inst.weights.value_or(VertexWeights::unit(g.vertex_count()));
    ExperimentResult r;
    r.instance = inst.descriptor;
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    r.algorithm = algo.name;
    r.variant = algo.variant;

    const auto start = std::chrono::steady_clock::now();
    if (is_randomized(algo)) {
        TrialStats s;
        s.trials = config.trials;
        s.master_seed = config.master_seed;
        s.first_trial = 0;
        s.last_trial = config.trials - 1;
        Rational size_sum = 0;
        Rational weight_sum = 0;
        double sum = 0;
        double sum_sq = 0;
        for (std::size_t t = 0; t < config.trials; ++t) {
            const IndependentSet set = run_algorithm(inst, algo, trial_seed(config.master_seed, t));
            require_independent(g, set, algo.name.c_str());
            const Rational weight = total_weight(set, w);
            size_sum += set.size();
            weight_sum += weight;
            const double x = to_double(weight);
            sum += x;
            sum_sq += x * x;
        }
        const double t = static_cast<double>(config.trials);
        const double mean = sum / t;
        const double var = config.trials > 1 ? std::max(0.0, (sum_sq - t * mean * mean) / (t - 1)) : 0.0;
        s.stddev = std::sqrt(var);
        const double half_width = kZ99 * s.stddev / std::sqrt(t);
        s.mean_weight = weight_sum / Rational(config.trials);
        s.ci_low = to_double(s.mean_weight) - half_width;
        s.ci_high = to_double(s.mean_weight) + half_width;
        r.size = size_sum / Rational(config.trials);
        r.weight = s.mean_weight;
        r.stats = s;
    } else {
        IndependentSet set = run_algorithm(inst, algo, config.master_seed);
        require_independent(g, set, algo.name.c_str());
        r.size = set.size();
        r.weight = total_weight(set, w);
        r.solution = std::move(set);
    }
    const auto stop = std::chrono::steady_clock::now();
    if (config.timing) r.duration_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    if (config.oracle && g.vertex_count() <= config.oracle_limit) {
        OracleLimits limits;
        limits.branch_and_bound = config.oracle_limit;
        r.oracle = mwis_value(g, &w, limits);
        if (*r.oracle > 0) {
            r.ratio = r.weight / *r.oracle;
            if (*r.ratio > 1) {
                throw InvariantBreach(algo.name + " exceeded the exact optimum on " + r.instance.family);
            }
        }
        for (const auto& rho : config.rhos) {
            std::vector<Rational> credited(g.vertex_count());
            for (Vertex v = 0; v < g.vertex_count(); ++v) credited[v] = w[v] * capped_share(rho, g.degree(v));
            const VertexWeights cw(std::move(credited));
            r.recoverable_value.push_back({rho, mwis_value(g, &cw, limits)});
        }
    }
    return r;
}

std::vector<ExperimentResult> run_experiment(const ExperimentConfig& config) {
    for (const auto& a : config.algorithms) validate_algorithm(a);
    std::vector<Instance> instances;
    for (const auto& spec : config.instances) instances.push_back(build_instance(spec, config.base_dir));
    std::vector<ExperimentResult> out;
    for (const auto& inst : instances) {
        for (const auto& algo : config.algorithms) out.push_back(run_single(inst, algo, config));
    }
    return out;
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "table") return ReportFormat::Table;
    throw ConfigError("unknown report format '" + std::string(name) + "'");
}

Json to_json(const ExperimentResult& r) {
    Json j = Json::object();
    Json inst = Json::object();
    inst["family"] = r.instance.family;
    inst["parameters"] = r.instance.parameters;
    inst["seed"] = r.instance.seed ? Json(*r.instance.seed) : Json(nullptr);
    inst["vertices"] = r.vertices;
    inst["edges"] = r.edges;
    j["instance"] = inst;
    j["algorithm"] = r.algorithm;
    j["variant"] = r.variant;
    j["size"] = rational_json(r.size);
    j["weight"] = rational_json(r.weight);
    j["oracle"] = r.oracle ? rational_json(*r.oracle) : Json(nullptr);
    j["ratio"] = r.ratio ? rational_json(*r.ratio) : Json(nullptr);
    Json rv = Json::array();
    for (const auto& e : r.recoverable_value) {
        Json entry = Json::object();
        entry["rho"] = rational_json(e.rho);
        entry["value"] = rational_json(e.value);
        rv.push_back(entry);
    }
    j["recoverable_value"] = rv;
    if (r.stats) {
        Json s = Json::object();
        s["trials"] = r.stats->trials;
        s["master_seed"] = r.stats->master_seed;
        s["seed_range"] = Json::array({r.stats->first_trial, r.stats->last_trial});
        s["mean"] = rational_json(r.stats->mean_weight);
        s["stddev"] = r.stats->stddev;
        s["ci99"] = Json::array({r.stats->ci_low, r.stats->ci_high});
        j["trials"] = s;
    } else {
        j["trials"] = nullptr;
    }
    if (r.duration_ms) j["duration_ms"] = *r.duration_ms;
    return j;
}

ExperimentResult result_from_json(const Json& j) {
    ExperimentResult r;
    const Json& inst = j.at("instance");
    r.instance.family = inst.at("family").get<std::string>();
    r.instance.parameters = inst.at("parameters");
    if (!inst.at("seed").is_null()) r.instance.seed = inst.at("seed").get<std::uint64_t>();
    r.vertices = inst.at("vertices").get<Vertex>();
    r.edges = inst.at("edges").get<std::size_t>();
    r.algorithm = j.at("algorithm").get<std::string>();
    r.variant = j.at("variant").get<std::string>();
    r.size = rational_from_json(j.at("size"));
    r.weight = rational_from_json(j.at("weight"));
    if (!j.at("oracle").is_null()) r.oracle = rational_from_json(j.at("oracle"));
    if (!j.at("ratio").is_null()) r.ratio = rational_from_json(j.at("ratio"));
    for (const auto& e : j.at("recoverable_value")) {
        r.recoverable_value.push_back({rational_from_json(e.at("rho")), rational_from_json(e.at("value"))});
    }
    if (!j.at("trials").is_null()) {
        const Json& s = j.at("trials");
        TrialStats t;
        t.trials = s.at("trials").get<std::size_t>();
        t.master_seed = s.at("master_seed").get<std::uint64_t>();
        t.first_trial = s.at("seed_range").at(0).get<std::uint64_t>();
        t.last_trial = s.at("seed_range").at(1).get<std::uint64_t>();
        t.mean_weight = rational_from_json(s.at("mean"));
        t.stddev = s.at("stddev").get<double>();
        t.ci_low = s.at("ci99").at(0).get<double>();
        t.ci_high = s.at("ci99").at(1).get<double>();
        r.stats = t;
    }
    if (j.contains("duration_ms")) r.duration_ms = j.at("duration_ms").get<double>();
    return r;
}

std::vector<ExperimentResult> parse_json_report(std::string_view text) {
    const Json doc = Json::parse(text);
    std::vector<ExperimentResult> out;
    for (const auto& j : doc.at("results")) out.push_back(result_from_json(j));
    return out;
}

namespace {

std::string format_decimal(double x) {
    std::ostringstream out;
    out << std::setprecision(10) << x;
    return out.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string rv_summary(const ExperimentResult& r, bool decimal) {
    std::string out;
    for (const auto& e : r.recoverable_value) {
        if (!out.empty()) out += ';';
        out += to_string(e.rho) + "=" + (decimal ? format_decimal(to_double(e.value)) : to_string(e.value));
    }
    return out;
}

std::vector<std::string> row_cells(const ExperimentResult& r) {
    auto opt = [](const std::optional<Rational>& x, bool decimal) -> std::string {
        if (!x) return "";
        return decimal ? format_decimal(to_double(*x)) : to_string(*x);
    };
    return {
        r.instance.family,
        r.instance.parameters.dump(),
        r.instance.seed ? std::to_string(*r.instance.seed) : "",
        std::to_string(r.vertices),
        std::to_string(r.edges),
        r.algorithm,
        r.variant,
        to_string(r.size),
        format_decimal(to_double(r.size)),
        to_string(r.weight),
        format_decimal(to_double(r.weight)),
        opt(r.oracle, false),
        opt(r.oracle, true),
        opt(r.ratio, false),
        opt(r.ratio, true),
        rv_summary(r, false),
        rv_summary(r, true),
        r.stats ? std::to_string(r.stats->trials) : "",
        r.stats ? format_decimal(r.stats->ci_low) : "",
        r.stats ? format_decimal(r.stats->ci_high) : "",
        r.stats ? std::to_string(r.stats->master_seed) : "",
        r.stats ? std::to_string(r.stats->first_trial) + "-" + std::to_string(r.stats->last_trial) : "",
        r.duration_ms ? format_decimal(*r.duration_ms) : "",
    };
}

const std::vector<std::string> kColumns{
    "family",      "parameters",   "seed",           "vertices",   "edges",         "algorithm",
    "variant",     "size",         "size_decimal",   "weight",     "weight_decimal", "oracle",
    "oracle_decimal", "ratio",     "ratio_decimal",  "rv",         "rv_decimal",    "trials",
    "ci99_low",    "ci99_high",    "master_seed",    "trial_range", "duration_ms",
};

}  // namespace

std::string emit_report(const std::vector<ExperimentResult>& results, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: {
            Json doc = Json::object();
            doc["results"] = Json::array();
            for (const auto& r : results) doc["results"].push_back(to_json(r));
            return doc.dump(2) + "\n";
        }
        case ReportFormat::Csv: {
            std::ostringstream out;
            for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
            out << '\n';
            for (const auto& r : results) {
                const auto cells = row_cells(r);
                for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
                out << '\n';
            }
            return out.str();
        }
        case ReportFormat::Table: {
            // Compact human view: a subset of the CSV columns, padded.
            const std::vector<std::size_t> shown{0, 3, 4, 5, 6, 7, 9, 11, 14, 15, 17, 18, 19};
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header;
            for (std::size_t c : shown) header.push_back(kColumns[c]);
            rows.push_back(header);
            for (const auto& r : results) {
                const auto cells = row_cells(r);
                std::vector<std::string> row;
                for (std::size_t c : shown) row.push_back(cells[c]);
                rows.push_back(std::move(row));
            }
            std::vector<std::size_t> width(shown.size(), 0);
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
            }
            std::ostringstream out;
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
                    out << (i + 1 < row.size() ? "  " : "");
                }
                out << '\n';
            }
            return out.str();
        }
    }
    return {};
}

}  // namespace rvis
