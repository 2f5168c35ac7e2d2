#include "rvis/plg.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "rvis/avg2.hpp"
#include "rvis/classic.hpp"
#include "rvis/layers.hpp"
#include "rvis/random.hpp"

namespace rvis {

std::string_view to_string(PlgVariant v) {
    switch (v) {
        case PlgVariant::G3_HR: return "g3_hr";
        case PlgVariant::G4_after_2elim: return "g4_after_2elim";
        case PlgVariant::G3_avg2: return "g3_avg2";
    }
    return "unknown";
}

PlgVariant parse_plg_variant(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "g3_hr") return PlgVariant::G3_HR;
    if (lower == "g4_after_2elim") return PlgVariant::G4_after_2elim;
    if (lower == "g3_avg2") return PlgVariant::G3_avg2;
    throw std::invalid_argument("unknown PLG variant '" + std::string(name) + "'");
}

std::vector<Vertex> compose_remap(const ReductionTrace& trace) {
    std::vector<Vertex> map(trace.original_vertex_count());
    for (Vertex v = 0; v < trace.original_vertex_count(); ++v) map[v] = v;
    for (const auto& step : trace.steps()) {
        for (auto& x : map) {
            if (x != kRemoved) x = step.remap[x];
        }
    }
    return map;
}

namespace {

template <typename Solver>
IndependentSet solve_prefix(const Graph& g, std::span<const Vertex> permutation, int k, Solver&& solver) {
    const LayerDecomposition d = layer_decompose(g, permutation);
    const DerivedGraph prefix = prefix_graph(g, d, k);
    return solver(prefix.graph).mapped(prefix.to_parent);
}

std::vector<Vertex> restrict_permutation(const ReductionTrace& trace, std::span<const Vertex> permutation) {
    const auto map = compose_remap(trace);
    const Vertex reduced_n = trace.reduced_graph().vertex_count();
    // One fixed representative per reduced vertex (its lowest-id preimage); ordering the reduced
    // vertices by their representatives keeps the restricted order uniform.
    std::vector<Vertex> representative(reduced_n, kRemoved);
    for (Vertex v = 0; v < trace.original_vertex_count(); ++v) {
        if (map[v] != kRemoved && representative[map[v]] == kRemoved) representative[map[v]] = v;
    }
    std::vector<bool> is_representative(trace.original_vertex_count(), false);
    for (Vertex r : representative) is_representative[r] = true;
    std::vector<Vertex> out;
    out.reserve(reduced_n);
    for (Vertex v : permutation) {
        if (is_representative[v]) out.push_back(map[v]);
    }
    return out;
}

}  // namespace

IndependentSet plg(const Graph& g, std::span<const Vertex> permutation, PlgVariant variant) {
    if (static_cast<Vertex>(permutation.size()) != g.vertex_count()) {
        throw std::invalid_argument("plg: permutation length differs from vertex count");
    }
    switch (variant) {
        case PlgVariant::G3_HR: {
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (g.degree(v) < 2) {
                    throw std::invalid_argument("plg g3_hr: vertex " + std::to_string(v) + " has degree " +
                                                std::to_string(g.degree(v)) + " (< 2); reduce the graph first");
                }
            }
            return solve_prefix(g, permutation, 3, lp_plus_greedy);
        }
        case PlgVariant::G4_after_2elim: {
            const ReductionResult reduced = reduce_low_degree(g, nullptr, {ReductionMode::MIS, Rational(7, 3), true});
            const auto order = restrict_permutation(reduced.trace, permutation);
            return lift(reduced.trace, solve_prefix(reduced.graph, order, 4, lp_plus_greedy));
        }
        case PlgVariant::G3_avg2: {
            const ReductionResult reduced = reduce_low_degree(g, nullptr, {ReductionMode::MIS, Rational(7, 3), false});
            const auto order = restrict_permutation(reduced.trace, permutation);
            auto avg2 = [](const Graph& h) { return solve_avg2(h).set; };
            return lift(reduced.trace, solve_prefix(reduced.graph, order, 3, avg2));
        }
    }
    throw std::invalid_argument("plg: unknown variant");
}

IndependentSet plg(const Graph& g, std::uint64_t seed, PlgVariant variant) {
    const auto perm = random_permutation(g.vertex_count(), seed);
    return plg(g, perm, variant);
}

}  // namespace rvis
