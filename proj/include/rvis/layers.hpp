#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rvis/graph.hpp"

namespace rvis {

/// Thrown when a structural certificate that must hold by construction fails.
class InvariantBreach : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A vertex order and, per vertex, 1 + the number of its neighbours placed earlier.
struct LayerDecomposition {
    std::vector<Vertex> permutation;
    std::vector<Vertex> position;  // inverse of permutation
    std::vector<int> layer;
};

LayerDecomposition layer_decompose(const Graph& g, std::span<const Vertex> permutation);
/// Uniformly random order drawn from `seed`.
LayerDecomposition layer_decompose(const Graph& g, std::uint64_t seed);

/// G_k: the subgraph induced on vertices of layer <= k, with its certificate checked
/// (acyclic for k <= 2, (k-1)-degenerate in general). Throws InvariantBreach on failure.
DerivedGraph prefix_graph(const Graph& g, const LayerDecomposition& d, int k);

/// Degeneracy by repeated minimum-degree peeling. `order`, if given, receives the peeling order.
int degeneracy(const Graph& g, std::vector<Vertex>* order = nullptr);

bool is_forest(const Graph& g);

/// Exact maximum-weight independent set of a forest (two-state tree DP per component).
/// Throws std::invalid_argument if g contains a cycle.
IndependentSet forest_mwis(const Graph& g, const VertexWeights& w);

/// Optimal independent set of G_2 for a random order drawn from `seed`.
/// Requires minimum degree >= 1; include isolated vertices before calling.
IndependentSet fast_randomized_mwis(const Graph& g, const VertexWeights& w, std::uint64_t seed);
IndependentSet fast_randomized_mwis(const Graph& g, const VertexWeights& w, std::span<const Vertex> permutation);

using InnerSolver = std::function<IndependentSet(const Graph&)>;

/// Greedy along the smallest-last (degeneracy) order: scan vertices in peeling order and take each
/// one that has no chosen neighbour.
IndependentSet degeneracy_order_greedy(const Graph& g);

/// Slot for a semidefinite-programming inner solver on bounded-degeneracy graphs. No implementation
/// is provided; calling it throws std::logic_error.
IndependentSet sdp_inner_solver(const Graph& g);

/// Applies `inner` to G_{delta+1} (delta = minimum degree) of a random order drawn from `seed`.
/// Requires delta >= 1.
IndependentSet degeneracy_pipeline(const Graph& g, std::uint64_t seed, const InnerSolver& inner = degeneracy_order_greedy);

}  // namespace rvis
