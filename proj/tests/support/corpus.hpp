#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rvis/generators.hpp"
#include "rvis/graph.hpp"

namespace rvis::testing {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Small hand-picked graphs: K2, cycles C3..C12, paths, cliques, stars, K_{3,3}, K_{3,7}, K_{3,8},
/// the Petersen graph, and a few disjoint unions.
std::vector<NamedGraph> named_graphs();

/// All graphs up to isomorphism on 1..max_n vertices (max_n <= 8), cached.
const std::vector<Graph>& all_graphs_up_to(Vertex max_n);
/// Connected members of all_graphs_up_to(max_n).
std::vector<Graph> connected_graphs_up_to(Vertex max_n);

/// G(n, p) samples with n uniform in [n_min, n_max] and p uniform in [0.1, 0.7].
std::vector<Graph> random_graphs(std::size_t count, Vertex n_min, Vertex n_max, std::uint64_t seed);

/// Random graphs with minimum degree >= min_degree (rejection sampling), n in [n_min, n_max].
std::vector<Graph> random_graphs_min_degree(std::size_t count, int min_degree, Vertex n_min, Vertex n_max,
                                            std::uint64_t seed);

/// Average degree <= 2 families: cycles C3..C12, paths, disjoint unions of them, and `random_count`
/// random unicyclic/forest mixtures, all with at most max_n vertices.
std::vector<Graph> sparse_corpus(std::size_t random_count, Vertex max_n, std::uint64_t seed);

/// Random positive rational weights p/q with 1 <= p <= 12, 1 <= q <= 4.
VertexWeights random_weights(Vertex n, std::uint64_t seed);

/// Properly k-colored random instances, k in {3, 4, 5}, n in [4, max_n].
std::vector<ColoredGraph> colored_corpus(std::size_t count, Vertex max_n, std::uint64_t seed);

/// Independent reference: maximum independent-set weight by plain subset enumeration.
Rational brute_force_mwis(const Graph& g, const VertexWeights& w);
inline std::size_t brute_force_alpha(const Graph& g) {
    return static_cast<std::size_t>(numerator(brute_force_mwis(g, VertexWeights::unit(g.vertex_count()))));
}

/// Independent reference: best {0, 1/2, 1} assignment with x_u + x_v <= 1 on every edge.
Rational brute_force_half_lp(const Graph& g, const VertexWeights& w);

/// Exact fraction of all n! permutations that place v in the first k layers. Permutations are grouped
/// by the set S of vertices preceding v: each S accounts for |S|! (n-1-|S|)! of them.
Rational capture_fraction(const Graph& g, Vertex v, int k);

}  // namespace rvis::testing
