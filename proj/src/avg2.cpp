#include "rvis/avg2.hpp"

#include <set>

#include "rvis/classic.hpp"
#include "rvis/halfint_lp.hpp"
#include "rvis/layers.hpp"

namespace rvis {

namespace {

struct Rewiring {
    std::vector<std::set<Vertex>> adj;

    explicit Rewiring(const Graph& g) : adj(g.vertex_count()) {
        for (const auto& [u, v] : g.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }

    // Every V1-neighbour x of `from` (other than `skip`) is detached from `from` and joined to `to`.
    void transfer(Vertex from, Vertex to, Vertex skip, const std::vector<bool>& in_v1) {
        std::vector<Vertex> moving;
        for (Vertex x : adj[from]) {
            if (x != skip && in_v1[x]) moving.push_back(x);
        }
        for (Vertex x : moving) {
            adj[from].erase(x);
            adj[x].erase(from);
            adj[to].insert(x);
            adj[x].insert(to);
        }
    }

    Graph graph() const {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < static_cast<Vertex>(adj.size()); ++u) {
            for (Vertex v : adj[u]) {
                if (u < v) edges.emplace_back(u, v);
            }
        }
        return build_graph(static_cast<Vertex>(adj.size()), edges);
    }
};

}  // namespace

Avg2Simplification simplify(const Graph& g) {
    const Vertex n = g.vertex_count();
    Rewiring rewiring(g);
    std::vector<bool> in_v1(n, true);
    std::vector<Vertex> designated;
    std::vector<ReductionStep> steps;

    Graph h1 = g;
    VertexWeights unit = VertexWeights::unit(n);
    std::vector<Vertex> to_input(n);
    for (Vertex v = 0; v < n; ++v) to_input[v] = v;

    for (;;) {
        Vertex pick = kRemoved;
        int pick_degree = 3;
        for (Vertex v = 0; v < h1.vertex_count(); ++v) {
            if (h1.degree(v) < pick_degree) {
                pick = v;
                pick_degree = h1.degree(v);
                if (pick_degree == 0) break;
            }
        }

        ReductionEvent event;
        Vertex absorbed = kRemoved;
        if (pick != kRemoved && pick_degree == 0) {
            event = Isolated{pick};
            in_v1[to_input[pick]] = false;
            designated.push_back(to_input[pick]);
        } else if (pick != kRemoved && pick_degree == 1) {
            const Vertex v = h1.neighbors(pick)[0];
            event = PendantUnweighted{pick, v};
            in_v1[to_input[pick]] = in_v1[to_input[v]] = false;
            designated.push_back(to_input[pick]);
        } else if (pick != kRemoved && pick_degree == 2) {
            const Vertex a = h1.neighbors(pick)[0];
            const Vertex b = h1.neighbors(pick)[1];
            if (h1.has_edge(a, b)) {
                event = TriangleDeg2{pick, a, b};
                in_v1[to_input[pick]] = in_v1[to_input[a]] = in_v1[to_input[b]] = false;
                designated.push_back(to_input[pick]);
            } else {
                // a (lower id) moves to V2 together with pick; b inherits a's remaining V1 edges.
                const Vertex merged = b - (pick < b ? 1 : 0) - 1;
                event = MergeDeg2{pick, a, b, b, merged};
                absorbed = a;
                in_v1[to_input[pick]] = in_v1[to_input[a]] = false;
                rewiring.transfer(to_input[a], to_input[b], to_input[pick], in_v1);
                designated.push_back(to_input[a]);
            }
        } else {
            const HalfIntegralSolution lp = nt_solve(h1, VertexWeights::unit(h1.vertex_count()));
            if (lp.one.empty() && lp.zero.empty()) break;
            for (Vertex v : lp.one) {
                in_v1[to_input[v]] = false;
                designated.push_back(to_input[v]);
            }
            for (Vertex v : lp.zero) in_v1[to_input[v]] = false;
            event = NTFix{lp.one, lp.zero};
        }

        AppliedEvent applied = apply_event(h1, unit, event);
        std::vector<Vertex> next_input(applied.graph.vertex_count());
        for (Vertex old = 0; old < h1.vertex_count(); ++old) {
            if (applied.remap[old] != kRemoved && old != absorbed) next_input[applied.remap[old]] = to_input[old];
        }
        steps.push_back({std::move(event), std::move(applied.remap), applied.graph.vertex_count()});
        h1 = std::move(applied.graph);
        unit = std::move(applied.weights);
        to_input = std::move(next_input);
    }

    Avg2Simplification out;
    Partition12& p = out.partition;
    p.in_v1 = in_v1;
    for (Vertex v = 0; v < n; ++v) (in_v1[v] ? p.v1 : p.v2).push_back(v);
    p.rewired = rewiring.graph();
    p.h1 = induced_subgraph(p.rewired, p.v1);
    p.h2 = induced_subgraph(p.rewired, p.v2);
    p.designated = designated;
    out.trace = ReductionTrace(n, std::move(steps), h1, unit);
    out.h1_to_input = std::move(to_input);
    return out;
}

Avg2Result solve_avg2(const Graph& g) {
    const Avg2Simplification s = simplify(g);
    const IndependentSet first = greedy(s.trace.reduced_graph());
    Avg2Result r;
    r.set = lift(s.trace, first);
    if (!is_independent(g, r.set)) throw InvariantBreach("solve_avg2: lifted set is not independent");
    r.guaranteed = g.average_degree() <= 2;
    r.greedy_part = first.size();
    r.designated_part = s.partition.designated.size();
    return r;
}

Rational g_poly(const Rational& x, const Rational& y) {
    return 4 * x * x + 2 * y * y - 2 * x - 12 * x * y - 9 * y + 7;
}

}  // namespace rvis
