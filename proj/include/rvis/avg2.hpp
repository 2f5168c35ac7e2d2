#pragma once

#include <vector>

#include "rvis/graph.hpp"
#include "rvis/reductions.hpp"

namespace rvis {

/// Split of V into V1 (still being simplified) and V2 (moved out), over the rewired graph.
struct Partition12 {
    std::vector<bool> in_v1;
    std::vector<Vertex> v1;
    std::vector<Vertex> v2;
    /// The input graph after all rewirings (same vertex ids as the input).
    Graph rewired;
    DerivedGraph h1;  // rewired[V1]
    DerivedGraph h2;  // rewired[V2]
    /// One designated vertex per 0/1/2-elimination and the ONE vertices of each NT step.
    /// Together they form I2.
    std::vector<Vertex> designated;
};

struct Avg2Simplification {
    Partition12 partition;
    /// Events acting on H1; trace.reduced_graph() is the terminal H1 (compacted ids).
    ReductionTrace trace;
    /// Compacted terminal-H1 id -> input vertex id.
    std::vector<Vertex> h1_to_input;
};

/// Runs 0-, 1-, 2-elimination and NT fixing on H1 until none applies, always the lowest-numbered
/// applicable rule on the lowest-id vertex. In the non-triangle 2-elimination the lower-id
/// neighbour moves to V2 and the higher-id neighbour inherits its V1 edges.
Avg2Simplification simplify(const Graph& g);

struct Avg2Result {
    IndependentSet set;
    /// True when the input has average degree <= 2 and the 7/9 ratio applies.
    bool guaranteed = false;
    std::size_t greedy_part = 0;      // |I1|
    std::size_t designated_part = 0;  // |I2|
};

/// Simplify, run greedy on the terminal H1, and lift back to the input graph.
Avg2Result solve_avg2(const Graph& g);

/// 4x^2 + 2y^2 - 2x - 12xy - 9y + 7
Rational g_poly(const Rational& x, const Rational& y);

}  // namespace rvis
