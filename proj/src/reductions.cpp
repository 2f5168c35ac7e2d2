#include "rvis/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

namespace rvis {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad_event(const std::string& what) { throw std::invalid_argument("reduction event: " + what); }

void require_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count()) bad_event("vertex " + std::to_string(v) + " does not exist");
}

AppliedEvent drop(const Graph& g, const VertexWeights& w, std::span<const Vertex> removed) {
    DerivedGraph d = remove_vertices(g, removed);
    return {std::move(d.graph), w.restrict_to(d.to_parent), std::move(d.from_parent)};
}

}  // namespace

AppliedEvent apply_event(const Graph& g, const VertexWeights& w, const ReductionEvent& event) {
    return std::visit(
        overloaded{
            [&](const Isolated& e) {
                require_vertex(g, e.v);
                if (g.degree(e.v) != 0) bad_event("Isolated on a vertex of positive degree");
                const Vertex removed[] = {e.v};
                return drop(g, w, removed);
            },
            [&](const PendantUnweighted& e) {
                require_vertex(g, e.u);
                if (g.degree(e.u) != 1 || g.neighbors(e.u)[0] != e.v) bad_event("PendantUnweighted precondition");
                const Vertex removed[] = {e.u, e.v};
                return drop(g, w, removed);
            },
            [&](const PendantWeighted& e) {
                require_vertex(g, e.u);
                if (g.degree(e.u) != 1 || g.neighbors(e.u)[0] != e.v) bad_event("PendantWeighted precondition");
                if (e.transferred != w[e.u] || !(w[e.u] < w[e.v])) bad_event("PendantWeighted weight precondition");
                const Vertex removed[] = {e.u};
                AppliedEvent out = drop(g, w, removed);
                std::vector<Rational> nw(out.weights.values().begin(), out.weights.values().end());
                nw[out.remap[e.v]] -= e.transferred;
                out.weights = VertexWeights(std::move(nw));
                return out;
            },
            [&](const TriangleDeg2& e) {
                require_vertex(g, e.u);
                if (g.degree(e.u) != 2 || !g.has_edge(e.u, e.v) || !g.has_edge(e.u, e.w) || !g.has_edge(e.v, e.w)) {
                    bad_event("TriangleDeg2 precondition");
                }
                const Vertex removed[] = {e.u, e.v, e.w};
                return drop(g, w, removed);
            },
            [&](const MergeDeg2& e) {
                require_vertex(g, e.u);
                if (g.degree(e.u) != 2 || !g.has_edge(e.u, e.v) || !g.has_edge(e.u, e.w) || g.has_edge(e.v, e.w)) {
                    bad_event("MergeDeg2 precondition");
                }
                if (e.survivor != e.v && e.survivor != e.w) bad_event("MergeDeg2 survivor must be v or w");
                if (!w.is_unit()) bad_event("MergeDeg2 requires unit weights");
                const Vertex absorbed = e.survivor == e.v ? e.w : e.v;
                std::vector<Vertex> remap(g.vertex_count(), kRemoved);
                std::vector<Vertex> to_parent;
                for (Vertex x = 0; x < g.vertex_count(); ++x) {
                    if (x == e.u || x == absorbed) continue;
                    remap[x] = static_cast<Vertex>(to_parent.size());
                    to_parent.push_back(x);
                }
                remap[absorbed] = remap[e.survivor];
                if (remap[e.survivor] != e.merged) bad_event("MergeDeg2 merged id mismatch");
                Graph next = quotient_graph(g, remap, static_cast<Vertex>(to_parent.size()));
                return AppliedEvent{std::move(next), w.restrict_to(to_parent), std::move(remap)};
            },
            [&](const NTFix& e) {
                std::vector<Vertex> removed = e.one;
                removed.insert(removed.end(), e.zero.begin(), e.zero.end());
                for (Vertex v : removed) require_vertex(g, v);
                return drop(g, w, removed);
            },
        },
        event);
}

ReductionResult reduce_low_degree(const Graph& g, const VertexWeights* w, ReductionOptions options) {
    VertexWeights weights = w ? *w : VertexWeights::unit(g.vertex_count());
    if (weights.size() != g.vertex_count()) throw std::invalid_argument("reduce_low_degree: weight length mismatch");
    if (options.mode == ReductionMode::MIS && !weights.is_unit()) {
        throw std::invalid_argument("reduce_low_degree: MIS mode requires unit weights");
    }
    const bool two_elimination =
        options.mode == ReductionMode::MIS && options.two_elimination && options.rho <= Rational(10, 3);

    Graph current = g;
    std::vector<ReductionStep> steps;
    for (;;) {
        Vertex pick = kRemoved;
        int pick_degree = 3;
        for (Vertex v = 0; v < current.vertex_count(); ++v) {
            const int d = current.degree(v);
            if (d < pick_degree) {
                pick = v;
                pick_degree = d;
                if (d == 0) break;
            }
        }
        if (pick == kRemoved || (pick_degree == 2 && !two_elimination)) break;

        ReductionEvent event;
        if (pick_degree == 0) {
            event = Isolated{pick};
        } else if (pick_degree == 1) {
            const Vertex v = current.neighbors(pick)[0];
            if (options.mode == ReductionMode::MWIS && weights[pick] < weights[v]) {
                event = PendantWeighted{pick, v, weights[pick]};
            } else {
                event = PendantUnweighted{pick, v};
            }
        } else {
            const Vertex v = current.neighbors(pick)[0];
            const Vertex x = current.neighbors(pick)[1];
            if (current.has_edge(v, x)) {
                event = TriangleDeg2{pick, v, x};
            } else {
                // Lower-id neighbour survives; after removing pick and x its slot shifts down by
                // one for each of them that precedes it.
                const Vertex merged = v - (pick < v ? 1 : 0);
                event = MergeDeg2{pick, v, x, v, merged};
            }
        }
        AppliedEvent applied = apply_event(current, weights, event);
        steps.push_back({std::move(event), std::move(applied.remap), applied.graph.vertex_count()});
        current = std::move(applied.graph);
        weights = std::move(applied.weights);
    }
    ReductionTrace trace(g.vertex_count(), std::move(steps), current, weights);
    return {std::move(current), std::move(weights), std::move(trace)};
}

ReductionResult replay(const Graph& original, const VertexWeights& w, std::span<const ReductionStep> steps) {
    Graph current = original;
    VertexWeights weights = w;
    std::vector<ReductionStep> copied;
    for (const auto& step : steps) {
        AppliedEvent applied = apply_event(current, weights, step.event);
        if (applied.remap != step.remap) throw std::invalid_argument("replay: remap differs from the recorded one");
        copied.push_back(step);
        current = std::move(applied.graph);
        weights = std::move(applied.weights);
    }
    ReductionTrace trace(original.vertex_count(), std::move(copied), current, weights);
    return {std::move(current), std::move(weights), std::move(trace)};
}

IndependentSet lift_step(const ReductionStep& step, const IndependentSet& after) {
    std::vector<std::vector<Vertex>> preimages(step.size_after);
    for (Vertex old = 0; old < static_cast<Vertex>(step.remap.size()); ++old) {
        if (step.remap[old] != kRemoved) preimages[step.remap[old]].push_back(old);
    }
    std::vector<Vertex> before;
    for (Vertex x : after.members()) {
        for (Vertex p : preimages.at(x)) before.push_back(p);
    }
    std::visit(overloaded{
                   [&](const Isolated& e) { before.push_back(e.v); },
                   [&](const PendantUnweighted& e) { before.push_back(e.u); },
                   [&](const PendantWeighted& e) {
                       if (!after.contains(step.remap[e.v])) before.push_back(e.u);
                   },
                   [&](const TriangleDeg2& e) { before.push_back(e.u); },
                   [&](const MergeDeg2& e) {
                       if (!after.contains(e.merged)) before.push_back(e.u);
                   },
                   [&](const NTFix& e) { before.insert(before.end(), e.one.begin(), e.one.end()); },
               },
               step.event);
    return IndependentSet(std::move(before));
}

IndependentSet lift(const ReductionTrace& trace, const IndependentSet& reduced_solution) {
    require_independent(trace.reduced_graph(), reduced_solution, "lift");
    IndependentSet current = reduced_solution;
    const auto steps = trace.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) current = lift_step(*it, current);
    return current;
}

std::size_t lift_credit(const ReductionTrace& trace) {
    std::size_t credit = 0;
    for (const auto& step : trace.steps()) {
        if (const auto* fix = std::get_if<NTFix>(&step.event)) {
            credit += fix->one.size();
        } else {
            ++credit;
        }
    }
    return credit;
}

ReductionAccounting account_recoverable_value(const Graph& original, const ReductionTrace& trace,
                                              const IndependentSet& reference, const Rational& rho) {
    require_independent(original, reference, "account_recoverable_value");
    ReductionAccounting acc;
    acc.target = 0;
    for (Vertex v : reference.members()) {
        acc.target += original.degree(v) <= 2 ? Rational(1) : capped_share(rho, original.degree(v));
    }

    IndependentSet current = reference;
    for (const auto& step : trace.steps()) {
        std::vector<Vertex> dropped;
        std::visit(overloaded{
                       [&](const Isolated& e) { dropped = {e.v}; },
                       [&](const PendantUnweighted& e) { dropped = {e.u, e.v}; },
                       [&](const PendantWeighted& e) { dropped = {e.u}; },
                       [&](const TriangleDeg2& e) { dropped = {e.u, e.v, e.w}; },
                       [&](const MergeDeg2& e) {
                           dropped = {e.u};
                           if (!(current.contains(e.v) && current.contains(e.w))) {
                               dropped.push_back(e.v);
                               dropped.push_back(e.w);
                           }
                       },
                       [&](const NTFix& e) {
                           dropped = e.one;
                           dropped.insert(dropped.end(), e.zero.begin(), e.zero.end());
                       },
                   },
                   step.event);
        std::vector<Vertex> next;
        for (Vertex x : current.members()) {
            if (std::find(dropped.begin(), dropped.end(), x) != dropped.end()) continue;
            if (step.remap[x] != kRemoved) next.push_back(step.remap[x]);
        }
        current = IndependentSet(std::move(next));
    }
    acc.credits = lift_credit(trace);
    acc.pushed = current;
    acc.reduced_value = recoverable_value(trace.reduced_graph(), current, rho).total;
    acc.accounted = Rational(static_cast<std::int64_t>(acc.credits)) + acc.reduced_value;
    return acc;
}

Rational merge_value_loss(const Rational& rho, int dv, int dw, int d_merged) {
    return capped_share(rho, dv) + capped_share(rho, dw) - capped_share(rho, d_merged);
}

}  // namespace rvis
