#include "rvis/kcolored.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "rvis/halfint_lp.hpp"

namespace rvis {

void validate_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<Vertex>(c.color.size()) != g.vertex_count()) {
        throw std::invalid_argument("colouring length differs from vertex count");
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (c.color[v] < 0 || c.color[v] >= c.k) {
            throw GraphError("vertex " + std::to_string(v) + " has class outside [0, k)", {v, v});
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (c.color[u] == c.color[v]) {
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") joins one colour class",
                             {u, v});
        }
    }
}

namespace {

template <typename Order>
Coloring first_fit(const Graph& g, const Order& order) {
    Coloring c;
    c.color.assign(g.vertex_count(), -1);
    std::vector<bool> used;
    for (Vertex v : order) {
        used.assign(g.degree(v) + 1, false);
        for (Vertex u : g.neighbors(v)) {
            const int cu = c.color[u];
            if (cu >= 0 && cu <= g.degree(v)) used[cu] = true;
        }
        int pick = 0;
        while (used[pick]) ++pick;
        c.color[v] = pick;
        c.k = std::max(c.k, pick + 1);
    }
    return c;
}

}  // namespace

Coloring greedy_coloring(const Graph& g) {
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    return first_fit(g, order);
}

Coloring color_from_permutation(const DerivedGraph& prefix, const LayerDecomposition& d, int k) {
    std::vector<Vertex> order(prefix.graph.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return d.position[prefix.to_parent[a]] < d.position[prefix.to_parent[b]];
    });
    Coloring c = first_fit(prefix.graph, order);
    if (c.k > k) throw InvariantBreach("first-fit along the permutation used more than k colours");
    c.k = k;
    return c;
}

std::optional<std::vector<bool>> bipartition(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex u : g.neighbors(v)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    q.push(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<bool> out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = side[v] == 1;
    return out;
}

std::vector<Vertex> bipartite_matching(const Graph& g, const std::vector<bool>& right_side) {
    const Vertex n = g.vertex_count();
    for (const auto& [u, v] : g.edges()) {
        if (right_side[u] == right_side[v]) {
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") lies inside one side",
                             {u, v});
        }
    }
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<Vertex> mate(n, kRemoved);
    std::vector<int> dist(n, kInf);

    // Layered BFS from all free left vertices; true if some free right vertex is reachable.
    auto bfs = [&]() {
        std::queue<Vertex> q;
        for (Vertex v = 0; v < n; ++v) {
            if (!right_side[v] && mate[v] == kRemoved) {
                dist[v] = 0;
                q.push(v);
            } else {
                dist[v] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex r : g.neighbors(v)) {
                const Vertex next = mate[r];
                if (next == kRemoved) {
                    found = true;
                } else if (dist[next] == kInf) {
                    dist[next] = dist[v] + 1;
                    q.push(next);
                }
            }
        }
        return found;
    };

    auto dfs = [&](auto&& self, Vertex v) -> bool {
        for (Vertex r : g.neighbors(v)) {
            const Vertex next = mate[r];
            if (next == kRemoved || (dist[next] == dist[v] + 1 && self(self, next))) {
                mate[v] = r;
                mate[r] = v;
                return true;
            }
        }
        dist[v] = kInf;
        return false;
    };

    while (bfs()) {
        for (Vertex v = 0; v < n; ++v) {
            if (!right_side[v] && mate[v] == kRemoved) dfs(dfs, v);
        }
    }
    return mate;
}

IndependentSet bipartite_mis_exact(const Graph& g, const std::vector<bool>& right_side) {
    const auto mate = bipartite_matching(g, right_side);
    const Vertex n = g.vertex_count();
    // Alternating reachability from free left vertices: left -> right along any edge, right -> left
    // along the matching.
    std::vector<bool> reached(n, false);
    std::queue<Vertex> q;
    for (Vertex v = 0; v < n; ++v) {
        if (!right_side[v] && mate[v] == kRemoved) {
            reached[v] = true;
            q.push(v);
        }
    }
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex r : g.neighbors(v)) {
            if (reached[r]) continue;
            reached[r] = true;
            if (mate[r] != kRemoved && !reached[mate[r]]) {
                reached[mate[r]] = true;
                q.push(mate[r]);
            }
        }
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
        if (right_side[v] ? !reached[v] : reached[v]) members.push_back(v);
    }
    return IndependentSet(std::move(members));
}

IndependentSet best_pair_approx(const Graph& g, const Coloring& c) {
    validate_coloring(g, c);
    if (c.k <= 1) {
        std::vector<Vertex> all(g.vertex_count());
        std::iota(all.begin(), all.end(), 0);
        return IndependentSet(std::move(all));
    }
    IndependentSet best;
    bool have = false;
    for (int i = 0; i < c.k; ++i) {
        for (int j = i + 1; j < c.k; ++j) {
            std::vector<bool> keep(g.vertex_count());
            for (Vertex v = 0; v < g.vertex_count(); ++v) keep[v] = c.color[v] == i || c.color[v] == j;
            const DerivedGraph pair = induced_subgraph(g, keep);
            std::vector<bool> right(pair.graph.vertex_count());
            for (Vertex v = 0; v < pair.graph.vertex_count(); ++v) right[v] = c.color[pair.to_parent[v]] == j;
            IndependentSet candidate = bipartite_mis_exact(pair.graph, right).mapped(pair.to_parent);
            if (!have || candidate.size() > best.size()) {
                best = std::move(candidate);
                have = true;
            }
        }
    }
    return best;
}

IndependentSet lp_largest_class_approx(const Graph& g, const Coloring& c) {
    validate_coloring(g, c);
    const HalfIntegralSolution lp = nt_solve(g, VertexWeights::unit(g.vertex_count()));
    std::vector<std::size_t> count(std::max(c.k, 1), 0);
    for (Vertex v : lp.half) ++count[c.color[v]];
    const int largest = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    std::vector<Vertex> members = lp.one;
    for (Vertex v : lp.half) {
        if (c.color[v] == largest) members.push_back(v);
    }
    return IndependentSet(std::move(members));
}

}  // namespace rvis
