#include "rvis/classic.hpp"

#include <set>

#include "rvis/random.hpp"

namespace rvis {

IndependentSet greedy(const Graph& g) {
    const Vertex n = g.vertex_count();
    std::vector<int> degree(n);
    std::vector<bool> alive(n, true);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        queue.emplace(degree[v], v);
    }
    auto remove = [&](Vertex v) {
        alive[v] = false;
        queue.erase({degree[v], v});
        for (Vertex u : g.neighbors(v)) {
            if (!alive[u]) continue;
            queue.erase({degree[u], u});
            --degree[u];
            queue.emplace(degree[u], u);
        }
    };
    std::vector<Vertex> chosen;
    while (!queue.empty()) {
        const Vertex v = queue.begin()->second;
        chosen.push_back(v);
        std::vector<Vertex> doomed{v};
        for (Vertex u : g.neighbors(v)) {
            if (alive[u]) doomed.push_back(u);
        }
        for (Vertex u : doomed) {
            if (alive[u]) remove(u);
        }
    }
    return IndependentSet(std::move(chosen));
}

IndependentSet weighted_greedy(const Graph& g, const VertexWeights& w, GreedyRule rule) {
    const Vertex n = g.vertex_count();
    if (w.size() != n) throw std::invalid_argument("weighted_greedy: weight vector length differs from vertex count");
    std::vector<int> degree(n);
    std::vector<bool> alive(n, true);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<Vertex> chosen;
    Vertex remaining = n;
    while (remaining > 0) {
        Vertex pick = kRemoved;
        Rational best;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            Rational ratio = w[v] / (degree[v] + 1);
            const bool better = pick == kRemoved || (rule == GreedyRule::MaxRatio ? ratio > best : ratio < best);
            if (better) {
                pick = v;
                best = std::move(ratio);
            }
        }
        chosen.push_back(pick);
        std::vector<Vertex> doomed{pick};
        for (Vertex u : g.neighbors(pick)) {
            if (alive[u]) doomed.push_back(u);
        }
        for (Vertex u : doomed) {
            alive[u] = false;
            --remaining;
        }
        for (Vertex u : doomed) {
            for (Vertex x : g.neighbors(u)) {
                if (alive[x]) --degree[x];
            }
        }
    }
    return IndependentSet(std::move(chosen));
}

IndependentSet first_layer(const Graph& g, std::span<const Vertex> permutation) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> out;
    for (Vertex v : permutation) {
        bool first = true;
        for (Vertex u : g.neighbors(v)) first = first && !seen[u];
        if (first) out.push_back(v);
        seen[v] = true;
    }
    return IndependentSet(std::move(out));
}

IndependentSet random_permutation_is(const Graph& g, std::uint64_t seed) {
    const auto perm = random_permutation(g.vertex_count(), seed);
    return first_layer(g, perm);
}

IndependentSet lp_plus_greedy(const Graph& g) {
    const HalfIntegralSolution lp = nt_solve(g, VertexWeights::unit(g.vertex_count()));
    const DerivedGraph half = induced_subgraph(g, lp.half);
    std::vector<Vertex> members = lp.one;
    const IndependentSet rest = greedy(half.graph);
    for (Vertex v : rest.members()) members.push_back(half.to_parent[v]);
    return IndependentSet(std::move(members));
}

}  // namespace rvis
