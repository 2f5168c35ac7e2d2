#include "rvis/halfint_lp.hpp"

#include <stdexcept>

#include "rvis/classic.hpp"
#include "rvis/maxflow.hpp"

namespace rvis {

namespace {

// Double cover network: source 0, sink 1, left copy 2+v, right copy 2+n+v.
// Returns the source side of the minimum cut closest to the source.
template <typename Cap>
std::vector<bool> double_cover_cut(const Graph& g, const std::vector<Cap>& cap) {
    const int n = g.vertex_count();
    Cap infinite = 1;
    for (const auto& c : cap) infinite += c;
    detail::MaxFlow<Cap> flow(2 * n + 2);
    for (int v = 0; v < n; ++v) {
        flow.add_edge(0, 2 + v, cap[v]);
        flow.add_edge(2 + n + v, 1, cap[v]);
        for (Vertex u : g.neighbors(v)) flow.add_edge(2 + v, 2 + n + u, infinite);
    }
    flow.run(0, 1);
    return flow.source_side(0);
}

}  // namespace

HalfIntegralSolution nt_solve(const Graph& g, const VertexWeights& w) {
    const Vertex n = g.vertex_count();
    if (w.size() != n) throw std::invalid_argument("nt_solve: weight vector length differs from vertex count");

    std::vector<bool> side;
    if (auto small = scale_to_int64(w.values())) {
        side = double_cover_cut<std::int64_t>(g, *small);
    } else {
        side = double_cover_cut<BigInt>(g, scale_to_integers(w.values()).scaled);
    }

    // Left copy in the independent set iff on the source side; right copy iff on the sink side.
    HalfIntegralSolution s;
    s.assignment.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        const int left = side[2 + v] ? 1 : 0;
        const int right = side[2 + n + v] ? 0 : 1;
        s.assignment[v] = static_cast<HalfValue>(left + right);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (s.assignment[v] != HalfValue::Zero) continue;
        bool covered = false;
        for (Vertex u : g.neighbors(v)) covered = covered || s.assignment[u] == HalfValue::One;
        if (!covered) s.assignment[v] = HalfValue::Half;
    }
    s.objective = 0;
    for (Vertex v = 0; v < n; ++v) {
        switch (s.assignment[v]) {
            case HalfValue::Zero: s.zero.push_back(v); break;
            case HalfValue::Half: s.half.push_back(v); s.objective += w[v] / 2; break;
            case HalfValue::One: s.one.push_back(v); s.objective += w[v]; break;
        }
    }
    return s;
}

bool is_feasible(const Graph& g, const HalfIntegralSolution& s) {
    for (const auto& [u, v] : g.edges()) {
        if (static_cast<int>(s.assignment[u]) + static_cast<int>(s.assignment[v]) > 2) return false;
    }
    return true;
}

bool satisfies_repair_property(const Graph& g, const HalfIntegralSolution& s) {
    if (!is_feasible(g, s)) return false;
    for (Vertex v : s.zero) {
        bool covered = false;
        for (Vertex u : g.neighbors(v)) covered = covered || s.assignment[u] == HalfValue::One;
        if (!covered) return false;
    }
    return true;
}

namespace {

VertexWeights rv_weights(const Graph& g, const VertexWeights& w) {
    std::vector<Rational> rv(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) rv[v] = w[v] / (g.degree(v) + 1);
    return VertexWeights(std::move(rv));
}

}  // namespace

Rational rv_lp_value(const Graph& g, const VertexWeights& w) { return nt_solve(g, rv_weights(g, w)).objective; }

IndependentSet rv_lp_round(const Graph& g, const VertexWeights& w) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            throw std::invalid_argument("rv_lp_round: vertex " + std::to_string(v) +
                                        " is isolated; add isolated vertices to the solution before rounding");
        }
    }
    const HalfIntegralSolution lp = nt_solve(g, rv_weights(g, w));
    const DerivedGraph half = induced_subgraph(g, lp.half);
    const IndependentSet rounded = weighted_greedy(half.graph, w.restrict_to(half.to_parent));
    std::vector<Vertex> members = lp.one;
    for (Vertex v : rounded.members()) members.push_back(half.to_parent[v]);
    return IndependentSet(std::move(members));
}

}  // namespace rvis
