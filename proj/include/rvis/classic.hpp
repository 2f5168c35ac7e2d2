#pragma once

#include <cstdint>

#include "rvis/graph.hpp"
#include "rvis/halfint_lp.hpp"

namespace rvis {

/// Minimum-degree greedy: repeatedly take a vertex of minimum degree in the remaining graph
/// (lowest id on ties) and delete it with its neighbours.
IndependentSet greedy(const Graph& g);

enum class GreedyRule {
    /// Take the vertex maximizing w_v/(d_v+1). Guarantees weight >= sum_V w_v/(d(v)+1).
    MaxRatio,
    /// Take the vertex minimizing w_v/(d_v+1). Kept for comparison; it does not carry the bound
    /// (a single edge with weights 3 and 1 already breaks it).
    MinRatio,
};

/// Weighted greedy with degrees recomputed in the remaining graph each round; lowest id on ties.
IndependentSet weighted_greedy(const Graph& g, const VertexWeights& w, GreedyRule rule = GreedyRule::MaxRatio);

/// Vertices that precede all their neighbours in a permutation (layer 1).
IndependentSet first_layer(const Graph& g, std::span<const Vertex> permutation);
/// first_layer of a uniformly random permutation drawn from `seed`.
IndependentSet random_permutation_is(const Graph& g, std::uint64_t seed);

/// ONE of the canonical half-integral LP optimum plus greedy on the HALF-induced subgraph.
IndependentSet lp_plus_greedy(const Graph& g);

}  // namespace rvis
