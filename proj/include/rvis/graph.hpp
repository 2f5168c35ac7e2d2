#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rvis/rational.hpp"

namespace rvis {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kRemoved = -1;

/// Thrown for malformed graph input; carries the offending pair.
class GraphError : public std::invalid_argument {
public:
    GraphError(const std::string& what, Edge offending)
        : std::invalid_argument(what), offending_(offending) {}
    Edge offending() const { return offending_; }

private:
    Edge offending_;
};

/// Thrown when a vertex set that must be independent is not.
class IndependenceViolation : public std::invalid_argument {
public:
    IndependenceViolation(const std::string& what, Edge witness)
        : std::invalid_argument(what), witness_(witness) {}
    Edge witness() const { return witness_; }

private:
    Edge witness_;
};

/// Immutable simple undirected graph. Adjacency lists are sorted and duplicate-free.
class Graph {
public:
    Graph() = default;

    Vertex vertex_count() const { return static_cast<Vertex>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adjacency_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const& { return adjacency_[v]; }
    std::span<const Vertex> neighbors(Vertex v) const&& = delete;
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    int min_degree() const;
    int max_degree() const;
    /// 2|E|/n; zero for the empty graph.
    Rational average_degree() const;

    /// Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(Vertex n, std::span<const Edge> edges);
    friend Graph quotient_graph(const Graph& g, std::span<const Vertex> old_to_new, Vertex new_n);

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Builds a simple graph. Duplicate pairs collapse; self-loops and out-of-range endpoints throw GraphError.
Graph build_graph(Vertex n, std::span<const Edge> edges);
inline Graph build_graph(Vertex n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Relabels vertices through old_to_new (kRemoved drops a vertex; several old ids may share a new id).
/// Edges that become loops are dropped and parallel edges collapse.
Graph quotient_graph(const Graph& g, std::span<const Vertex> old_to_new, Vertex new_n);

/// A graph derived from a parent graph together with the id correspondence.
struct DerivedGraph {
    Graph graph;
    std::vector<Vertex> to_parent;    // new id -> parent id (the survivor, for merged vertices)
    std::vector<Vertex> from_parent;  // parent id -> new id or kRemoved
};

/// Subgraph induced on `keep`. New ids follow increasing parent id.
DerivedGraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
DerivedGraph induced_subgraph(const Graph& g, const std::vector<bool>& keep_mask);

/// Graph with `drop` removed (ids compacted in increasing order).
DerivedGraph remove_vertices(const Graph& g, std::span<const Vertex> drop);

/// Replaces non-adjacent v and w by one vertex adjacent to N(v) ∪ N(w). The merged vertex
/// occupies the compacted slot of `survivor` (which must be v or w). Throws if v, w adjacent.
DerivedGraph merge_vertices(const Graph& g, Vertex v, Vertex w, Vertex survivor);
inline DerivedGraph merge_vertices(const Graph& g, Vertex v, Vertex w) {
    return merge_vertices(g, v, w, std::min(v, w));
}

/// Non-negative rational vertex weights.
class VertexWeights {
public:
    VertexWeights() = default;
    explicit VertexWeights(std::vector<Rational> w);
    static VertexWeights unit(Vertex n);

    Vertex size() const { return static_cast<Vertex>(w_.size()); }
    const Rational& operator[](Vertex v) const { return w_[v]; }
    std::span<const Rational> values() const& { return w_; }
    std::span<const Rational> values() const&& = delete;
    bool is_unit() const;

    /// Weights of the listed parent vertices, in order.
    VertexWeights restrict_to(std::span<const Vertex> to_parent) const;

    friend bool operator==(const VertexWeights&, const VertexWeights&) = default;

private:
    std::vector<Rational> w_;
};

/// Sorted, duplicate-free vertex list. Independence is checked against a graph on demand.
class IndependentSet {
public:
    IndependentSet() = default;
    explicit IndependentSet(std::vector<Vertex> members);

    std::span<const Vertex> members() const& { return members_; }
    std::span<const Vertex> members() const&& = delete;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;

    /// Maps member ids through a table (e.g. DerivedGraph::to_parent).
    IndependentSet mapped(std::span<const Vertex> table) const;

    friend bool operator==(const IndependentSet&, const IndependentSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// First edge inside `s`, if any.
std::optional<Edge> find_conflict(const Graph& g, const IndependentSet& s);
bool is_independent(const Graph& g, const IndependentSet& s);
/// Throws IndependenceViolation with a witnessing edge.
void require_independent(const Graph& g, const IndependentSet& s, const char* context);
bool is_maximal(const Graph& g, const IndependentSet& s);

Rational total_weight(const IndependentSet& s, const VertexWeights& w);

/// min(1, rho / (d + 1))
Rational capped_share(const Rational& rho, int degree);

struct RVReport {
    Rational rho;
    IndependentSet reference_set;
    std::vector<std::pair<Vertex, Rational>> per_vertex;
    Rational total;
};

/// Recoverable value of `i` in `g`: sum over members of w_v * min(1, rho/(d(v)+1)).
/// Unweighted unless `w` is supplied. Throws IndependenceViolation when `i` is not independent.
RVReport recoverable_value(const Graph& g, const IndependentSet& i, const Rational& rho,
                           const VertexWeights* w = nullptr);

/// Sum over s of min(1, k/(d(v)+1)): the expected number of members of s that land
/// in the first k layers of a uniformly random permutation.
Rational expected_capture(const Graph& g, std::span<const Vertex> s, int k);

/// Sum over V of w_v/(d(v)+1).
Rational degree_weighted_sum(const Graph& g, const VertexWeights& w);

}  // namespace rvis
