#pragma once

#include <cstdint>
#include <vector>

#include "rvis/graph.hpp"

namespace rvis {

enum class HalfValue : std::uint8_t { Zero = 0, Half = 1, One = 2 };

/// Optimal solution of max sum w_i x_i s.t. x_i + x_j <= 1, 0 <= x <= 1, with every x_i in {0, 1/2, 1}.
struct HalfIntegralSolution {
    std::vector<HalfValue> assignment;
    Rational objective;
    std::vector<Vertex> zero;
    std::vector<Vertex> half;
    std::vector<Vertex> one;

    Rational value(Vertex v) const { return Rational(static_cast<int>(assignment[v]), 2); }
};

/// Exact optimum via minimum cut on the bipartite double cover.
///
/// The cut taken is the one whose source side is smallest (residual reachability), and any
/// ZERO vertex without a ONE neighbour is then lifted to HALF. The result is feasible, optimal,
/// and every ZERO vertex has a neighbour in ONE.
HalfIntegralSolution nt_solve(const Graph& g, const VertexWeights& w);

/// Feasibility plus the ZERO-covered-by-ONE property.
bool satisfies_repair_property(const Graph& g, const HalfIntegralSolution& s);
bool is_feasible(const Graph& g, const HalfIntegralSolution& s);

/// Rounds the recoverable-value LP: solve with weights w_i/(d(i)+1), keep ONE, drop ZERO, and run
/// weighted greedy (original weights) on the HALF-induced subgraph.
/// Throws std::invalid_argument if g has an isolated vertex.
IndependentSet rv_lp_round(const Graph& g, const VertexWeights& w);

/// Optimum of the recoverable-value LP (objective of nt_solve on weights w_i/(d(i)+1)).
Rational rv_lp_value(const Graph& g, const VertexWeights& w);

}  // namespace rvis
