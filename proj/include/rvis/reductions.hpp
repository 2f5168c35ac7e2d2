#pragma once

#include <span>
#include <variant>
#include <vector>

#include "rvis/graph.hpp"

namespace rvis {

// Elimination events. Vertex ids refer to the graph just before the event.

/// Degree-0 vertex removed; lifting adds it back.
struct Isolated {
    Vertex v;
};
/// Degree-1 vertex u and its neighbour v removed; lifting adds u.
struct PendantUnweighted {
    Vertex u;
    Vertex v;
};
/// Degree-1 vertex u removed, the weight of its neighbour v lowered by `transferred` (== w_u < w_v).
/// Lifting adds u unless v is in the solution.
struct PendantWeighted {
    Vertex u;
    Vertex v;
    Rational transferred;
};
/// Degree-2 vertex u whose neighbours v, w are adjacent; all three removed, lifting adds u.
struct TriangleDeg2 {
    Vertex u;
    Vertex v;
    Vertex w;
};
/// Degree-2 vertex u removed and its non-adjacent neighbours v, w merged into one vertex placed in the
/// slot of `survivor` (v or w), with id `merged` afterwards. Lifting: merged in solution -> {v, w}; else add u.
struct MergeDeg2 {
    Vertex u;
    Vertex v;
    Vertex w;
    Vertex survivor;
    Vertex merged;
};
/// Vertices fixed to integral values by the half-integral LP; `one` is added back by lifting.
struct NTFix {
    std::vector<Vertex> one;
    std::vector<Vertex> zero;
};

using ReductionEvent = std::variant<Isolated, PendantUnweighted, PendantWeighted, TriangleDeg2, MergeDeg2, NTFix>;

struct ReductionStep {
    ReductionEvent event;
    std::vector<Vertex> remap;  // pre-event id -> post-event id, kRemoved if gone
    Vertex size_after = 0;
};

/// Ordered elimination log plus the graph it ends in.
class ReductionTrace {
public:
    ReductionTrace() = default;
    ReductionTrace(Vertex original_vertex_count, std::vector<ReductionStep> steps, Graph reduced,
                   VertexWeights reduced_weights)
        : original_vertex_count_(original_vertex_count),
          steps_(std::move(steps)),
          reduced_(std::move(reduced)),
          reduced_weights_(std::move(reduced_weights)) {}

    Vertex original_vertex_count() const { return original_vertex_count_; }
    std::span<const ReductionStep> steps() const { return steps_; }
    const Graph& reduced_graph() const { return reduced_; }
    const VertexWeights& reduced_weights() const { return reduced_weights_; }

private:
    Vertex original_vertex_count_ = 0;
    std::vector<ReductionStep> steps_;
    Graph reduced_;
    VertexWeights reduced_weights_;
};

enum class ReductionMode { MIS, MWIS };

struct ReductionOptions {
    ReductionMode mode = ReductionMode::MIS;
    /// Target recoverable value. 2-elimination is only sound for rho <= 10/3 and is skipped above it.
    Rational rho = Rational(7, 3);
    bool two_elimination = true;
};

struct ReductionResult {
    Graph graph;
    VertexWeights weights;
    ReductionTrace trace;
};

/// Applies the low-degree rules until none applies, always acting on the lowest-id vertex of the
/// lowest eligible degree. MWIS mode uses the degree-0/1 rules (weighted pendant rule) and ends
/// with minimum degree >= 2; MIS mode also applies 2-elimination and ends with minimum degree >= 3.
/// MIS mode requires unit weights (null `w` means unit).
ReductionResult reduce_low_degree(const Graph& g, const VertexWeights* w = nullptr, ReductionOptions options = {});

/// Result of applying a single event.
struct AppliedEvent {
    Graph graph;
    VertexWeights weights;
    std::vector<Vertex> remap;
};

/// Applies one event, validating that its preconditions hold in `g`. Throws std::invalid_argument otherwise.
AppliedEvent apply_event(const Graph& g, const VertexWeights& w, const ReductionEvent& event);

/// Replays the steps forward from an original graph.
ReductionResult replay(const Graph& original, const VertexWeights& w, std::span<const ReductionStep> steps);

/// Maps a solution of the graph after `step` to one of the graph before it.
IndependentSet lift_step(const ReductionStep& step, const IndependentSet& after);

/// Lifts a solution of trace.reduced_graph() to the original graph.
/// Throws IndependenceViolation if `reduced_solution` is not independent in the reduced graph.
IndependentSet lift(const ReductionTrace& trace, const IndependentSet& reduced_solution);

/// Exact size gained by lifting (one per elimination event, |one| per NT fix).
std::size_t lift_credit(const ReductionTrace& trace);

/// Recoverable-value bookkeeping of an unweighted reduction for a reference set I of the original
/// graph: I is pushed through the events (a merged vertex is kept only when both merged vertices
/// are in I), each event credits what lifting will add, and the remainder is valued in the
/// reduced graph.
struct ReductionAccounting {
    std::size_t credits = 0;
    IndependentSet pushed;   // image of I in the reduced graph
    Rational reduced_value;  // recoverable value of `pushed` in the reduced graph
    Rational accounted;      // credits + reduced_value
    Rational target;         // sum over I of 1 (degree <= 2) or min(1, rho/(d+1)) (degree >= 3)
};

ReductionAccounting account_recoverable_value(const Graph& original, const ReductionTrace& trace,
                                              const IndependentSet& reference, const Rational& rho);

/// The change in recoverable value when two degree-(dv, dw) members are merged into one of degree d_merged.
Rational merge_value_loss(const Rational& rho, int dv, int dw, int d_merged);

}  // namespace rvis
