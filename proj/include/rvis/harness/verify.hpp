#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rvis/graph.hpp"

namespace rvis {

struct CheckOutcome {
    std::string check;
    bool passed = true;
    std::string detail;
};

struct VerifyLimits {
    Vertex half_integral = 12;  // brute-force LP comparison
    Vertex oracle = 40;         // exact optimum comparisons
    int permutation_samples = 8;
};

/// Oracle-backed invariant suite for one instance: LP optimality and repair property, reduction
/// soundness in both modes, the LP-rounding and LP+greedy bounds, the sparse-graph ratio, prefix
/// graph certificates, and independence of every returned set. Checks whose preconditions do not
/// hold on `g` are skipped (and not listed).
std::vector<CheckOutcome> verify_instance(const Graph& g, const VertexWeights* w = nullptr, std::uint64_t seed = 0,
                                          VerifyLimits limits = {});

}  // namespace rvis
