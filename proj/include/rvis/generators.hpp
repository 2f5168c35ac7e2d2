#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rvis/graph.hpp"
#include "rvis/kcolored.hpp"

namespace rvis {

/// k copies of every vertex; classes are the copy indices, ids laid out class-major
/// (copy i of v is i*n + v). Copies in classes 0..k-2 mirror the edges of g between distinct
/// classes; class k-1 is matched to each other class by v_{k-1} ~ v_i.
struct HardnessProduct {
    Graph graph;
    Coloring coloring;
    Vertex base_vertices = 0;
    int k = 0;

    Vertex copy(Vertex v, int cls) const { return cls * base_vertices + v; }
};

/// Throws std::invalid_argument for k < 3.
HardnessProduct gen_hardness_product(const Graph& g, int k);

/// Exchange argument on a product: every base vertex ends up with either all copies in classes
/// 0..k-2 or its class-(k-1) copy. The result is independent and no smaller than the input.
IndependentSet normalize_product_solution(const HardnessProduct& p, const IndependentSet& s);

/// Three layers: k roots, each with d private children; each child with d-1 private grandchildren;
/// the d*k*(d-1) grandchildren form a clique. Roots get the lowest ids, then children, then the clique.
Graph gen_layered_counterexample(int k, int d);

/// Ids of the middle layer of gen_layered_counterexample(k, d).
std::vector<Vertex> layered_counterexample_middle(int k, int d);

struct WeightedGraph {
    Graph graph;
    VertexWeights weights;
};

/// A k-clique (ids 0..k-1, weight 2k/(k+1)) joined completely to k independent vertices (weight 1).
WeightedGraph gen_rvlp_tight(int k);

// Benchmark families.
struct Gnp {
    Vertex n;
    double p;
};
struct Regular {
    Vertex n;
    int d;
};
struct CompleteBipartite {
    Vertex a;
    Vertex b;
};
struct CyclesAndPaths {
    std::vector<Vertex> cycles;  // lengths, each >= 3
    std::vector<Vertex> paths;   // vertex counts, each >= 1
};

using RandomFamily = std::variant<Gnp, Regular, CompleteBipartite, CyclesAndPaths>;

/// Seeded instance of a family. Invalid parameters throw std::invalid_argument.
/// Regular graphs use the pairing model, rejecting loops and multi-edges.
Graph gen_random(const RandomFamily& family, std::uint64_t seed);

Graph gen_cycle(Vertex n);
Graph gen_path(Vertex n);
Graph gen_complete(Vertex n);
Graph gen_complete_bipartite(Vertex a, Vertex b);
Graph gen_star(Vertex leaves);
Graph gen_petersen();
Graph disjoint_union(std::span<const Graph> parts);

/// Uniform random labelled tree (Pruefer sequence).
Graph gen_random_tree(Vertex n, std::uint64_t seed);
/// Random tree plus one extra edge closing a cycle (n >= 3).
Graph gen_random_unicyclic(Vertex n, std::uint64_t seed);

/// Random vertex classes, then each pair from different classes joined with probability p.
struct ColoredGraph {
    Graph graph;
    Coloring coloring;
};
ColoredGraph gen_k_colored(Vertex n, int k, double p, std::uint64_t seed);

/// All graphs on n vertices up to isomorphism (n <= 8), one canonical representative each.
std::vector<Graph> all_graphs(Vertex n, bool connected_only = false);

bool is_connected(const Graph& g);

}  // namespace rvis
