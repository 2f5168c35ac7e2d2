#pragma once

#include <optional>
#include <vector>

#include "rvis/graph.hpp"
#include "rvis/layers.hpp"

namespace rvis {

/// A proper colouring with classes 0..k-1.
struct Coloring {
    int k = 0;
    std::vector<int> color;
};

/// Throws GraphError naming an edge whose endpoints share a class (or a class id outside [0, k)).
void validate_coloring(const Graph& g, const Coloring& c);

/// First-fit in id order.
Coloring greedy_coloring(const Graph& g);

/// First-fit colouring of a prefix graph G_k, visiting vertices in permutation order.
/// `prefix` must come from prefix_graph(g, d, k). Throws InvariantBreach if more than k colours are needed.
Coloring color_from_permutation(const DerivedGraph& prefix, const LayerDecomposition& d, int k);

/// Maximum matching of a bipartite graph (Hopcroft-Karp). mate[v] is v's partner or kRemoved.
/// `right_side[v]` marks the side of v. Throws GraphError on an edge inside one side.
std::vector<Vertex> bipartite_matching(const Graph& g, const std::vector<bool>& right_side);

/// Maximum independent set of a bipartite graph from a maximum matching and alternating
/// reachability; its size is n minus the matching size.
IndependentSet bipartite_mis_exact(const Graph& g, const std::vector<bool>& right_side);

/// A 2-colouring if the graph is bipartite.
std::optional<std::vector<bool>> bipartition(const Graph& g);

/// Best exact solution over all pairs of colour classes (lexicographic pair order on ties).
IndependentSet best_pair_approx(const Graph& g, const Coloring& c);

/// ONE of the canonical half-integral LP optimum plus the largest colour class within HALF
/// (lowest class id on ties).
IndependentSet lp_largest_class_approx(const Graph& g, const Coloring& c);

}  // namespace rvis
