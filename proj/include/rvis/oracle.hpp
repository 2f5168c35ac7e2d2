#pragma once

#include <stdexcept>

#include "rvis/graph.hpp"

namespace rvis {

/// Raised when an exact routine is asked to solve an instance beyond its size limit.
class SizeLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

struct OracleLimits {
    Vertex branch_and_bound = 40;  // hard ceiling is 64 (bitset width)
    Vertex enumeration = 20;
    Vertex half_integral = 12;
};

/// Maximum-weight independent set by branch and bound. Among optima, the lexicographically
/// smallest member list is returned. Unit weights when `w` is null.
IndependentSet mwis_exact(const Graph& g, const VertexWeights* w = nullptr, OracleLimits limits = {});
inline IndependentSet mwis_exact(const Graph& g, const VertexWeights& w, OracleLimits limits = {}) {
    return mwis_exact(g, &w, limits);
}

/// Optimum weight only (no lexicographic extraction).
Rational mwis_value(const Graph& g, const VertexWeights* w = nullptr, OracleLimits limits = {});

/// Independence number.
inline std::size_t independence_number(const Graph& g) { return mwis_exact(g).size(); }

/// Full 2^n enumeration. Same tie rule as mwis_exact.
IndependentSet mwis_enumerate(const Graph& g, const VertexWeights* w = nullptr, OracleLimits limits = {});

/// Maximum of sum w_i x_i over x in {0, 1/2, 1}^n with x_i + x_j <= 1 on every edge (3^n enumeration).
Rational lp_half_bruteforce(const Graph& g, const VertexWeights& w, OracleLimits limits = {});

/// Independent set maximizing sum w_v/(d(v)+1); unit weights when `w` is null.
IndependentSet rv_maximizer(const Graph& g, const VertexWeights* w = nullptr, OracleLimits limits = {});

}  // namespace rvis
