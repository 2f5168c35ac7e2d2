#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "rvis/graph.hpp"
#include "rvis/reductions.hpp"

namespace rvis {

enum class PlgVariant {
    /// G_3 solved by LP+greedy. Input must have minimum degree >= 2.
    G3_HR,
    /// Full 0/1/2-elimination first (minimum degree >= 3), then G_4 solved by LP+greedy, then lift.
    G4_after_2elim,
    /// 0/1-elimination first (minimum degree >= 2), then G_3 solved by solve_avg2, then lift.
    G3_avg2,
};

std::string_view to_string(PlgVariant v);
/// Accepts "g3_hr", "g4_after_2elim", "g3_avg2" (case-insensitive). Throws std::invalid_argument.
PlgVariant parse_plg_variant(std::string_view name);

/// Permute, LP, Greedy. The permutation is over the vertices of `g`; for the reducing variants it is
/// restricted to the reduced graph (each reduced vertex ordered by its lowest-id original preimage).
IndependentSet plg(const Graph& g, std::span<const Vertex> permutation, PlgVariant variant);
IndependentSet plg(const Graph& g, std::uint64_t seed, PlgVariant variant);

/// For each original vertex, its id in the trace's reduced graph (kRemoved if eliminated).
std::vector<Vertex> compose_remap(const ReductionTrace& trace);

}  // namespace rvis
