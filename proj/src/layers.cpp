#include "rvis/layers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rvis/random.hpp"

namespace rvis {

namespace {

std::vector<Vertex> inverse_permutation(const Graph& g, std::span<const Vertex> permutation) {
    const Vertex n = g.vertex_count();
    if (static_cast<Vertex>(permutation.size()) != n) throw std::invalid_argument("permutation length differs from vertex count");
    std::vector<Vertex> position(n, kRemoved);
    for (Vertex i = 0; i < n; ++i) {
        const Vertex v = permutation[i];
        if (v < 0 || v >= n || position[v] != kRemoved) throw std::invalid_argument("not a permutation of the vertex set");
        position[v] = i;
    }
    return position;
}

// Vertices with at most k-1 earlier neighbours; counting stops as soon as the bound is exceeded.
std::vector<bool> prefix_mask(const Graph& g, const std::vector<Vertex>& position, int k) {
    std::vector<bool> keep(g.vertex_count(), false);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int earlier = 0;
        for (Vertex u : g.neighbors(v)) {
            if (position[u] < position[v] && ++earlier >= k) break;
        }
        keep[v] = earlier < k;
    }
    return keep;
}

void certify_prefix(const Graph& prefix, int k) {
    if (k == 1 && prefix.edge_count() != 0) throw InvariantBreach("G_1 is not edgeless");
    if (k == 2 && !is_forest(prefix)) throw InvariantBreach("G_2 is not a forest");
    if (k > 2 && degeneracy(prefix) > k - 1) {
        throw InvariantBreach("G_" + std::to_string(k) + " is not " + std::to_string(k - 1) + "-degenerate");
    }
}

template <typename W>
IndependentSet forest_dp(const Graph& g, const std::vector<W>& w) {
    const Vertex n = g.vertex_count();
    std::vector<W> take(n), skip(n);
    std::vector<Vertex> parent(n, kRemoved), order;
    std::vector<bool> seen(n, false);
    order.reserve(n);
    std::vector<bool> chosen(n, false);
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        const std::size_t begin = order.size();
        seen[root] = true;
        order.push_back(root);
        for (std::size_t i = begin; i < order.size(); ++i) {
            const Vertex v = order[i];
            for (Vertex u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = true;
                    parent[u] = v;
                    order.push_back(u);
                }
            }
        }
        for (std::size_t i = order.size(); i-- > begin;) {
            const Vertex v = order[i];
            take[v] = w[v];
            skip[v] = W(0);
            for (Vertex u : g.neighbors(v)) {
                if (parent[u] != v) continue;
                take[v] += skip[u];
                skip[v] += take[u] > skip[u] ? take[u] : skip[u];
            }
        }
        for (std::size_t i = begin; i < order.size(); ++i) {
            const Vertex v = order[i];
            const bool parent_taken = parent[v] != kRemoved && chosen[parent[v]];
            chosen[v] = !parent_taken && take[v] > skip[v];
        }
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
        if (chosen[v]) members.push_back(v);
    }
    return IndependentSet(std::move(members));
}

}  // namespace

LayerDecomposition layer_decompose(const Graph& g, std::span<const Vertex> permutation) {
    LayerDecomposition d;
    d.position = inverse_permutation(g, permutation);
    d.permutation.assign(permutation.begin(), permutation.end());
    d.layer.assign(g.vertex_count(), 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Vertex u : g.neighbors(v)) {
            if (d.position[u] < d.position[v]) ++d.layer[v];
        }
    }
    return d;
}

LayerDecomposition layer_decompose(const Graph& g, std::uint64_t seed) {
    const auto perm = random_permutation(g.vertex_count(), seed);
    return layer_decompose(g, perm);
}

DerivedGraph prefix_graph(const Graph& g, const LayerDecomposition& d, int k) {
    if (k < 1) throw std::invalid_argument("prefix_graph: k must be at least 1");
    std::vector<bool> keep(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) keep[v] = d.layer[v] <= k;
    DerivedGraph out = induced_subgraph(g, keep);
    certify_prefix(out.graph, k);
    return out;
}

int degeneracy(const Graph& g, std::vector<Vertex>* order) {
    const Vertex n = g.vertex_count();
    const int max_d = g.max_degree();
    std::vector<int> degree(n);
    std::vector<std::vector<Vertex>> buckets(max_d + 1);
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        buckets[degree[v]].push_back(v);
    }
    std::vector<bool> removed(n, false);
    if (order) order->clear();
    int result = 0;
    int low = 0;
    for (Vertex done = 0; done < n;) {
        low = std::max(0, low - 1);
        while (buckets[low].empty()) ++low;
        const Vertex v = buckets[low].back();
        buckets[low].pop_back();
        if (removed[v] || degree[v] != low) continue;  // stale bucket entry
        removed[v] = true;
        ++done;
        result = std::max(result, low);
        if (order) order->push_back(v);
        for (Vertex u : g.neighbors(v)) {
            if (removed[u]) continue;
            --degree[u];
            buckets[degree[u]].push_back(u);
        }
    }
    return result;
}

bool is_forest(const Graph& g) {
    std::vector<Vertex> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : g.edges()) {
        const Vertex a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

IndependentSet forest_mwis(const Graph& g, const VertexWeights& w) {
    if (!is_forest(g)) throw std::invalid_argument("forest_mwis: input graph has a cycle");
    if (w.size() != g.vertex_count()) throw std::invalid_argument("forest_mwis: weight length mismatch");
    if (auto small = scale_to_int64(w.values())) return forest_dp(g, *small);
    return forest_dp(g, std::vector<Rational>(w.values().begin(), w.values().end()));
}

IndependentSet fast_randomized_mwis(const Graph& g, const VertexWeights& w, std::span<const Vertex> permutation) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            throw std::invalid_argument("fast_randomized_mwis: vertex " + std::to_string(v) +
                                        " is isolated; include isolated vertices before calling");
        }
    }
    const auto position = inverse_permutation(g, permutation);
    DerivedGraph g2 = induced_subgraph(g, prefix_mask(g, position, 2));
    certify_prefix(g2.graph, 2);
    return forest_mwis(g2.graph, w.restrict_to(g2.to_parent)).mapped(g2.to_parent);
}

IndependentSet fast_randomized_mwis(const Graph& g, const VertexWeights& w, std::uint64_t seed) {
    const auto perm = random_permutation(g.vertex_count(), seed);
    return fast_randomized_mwis(g, w, perm);
}

IndependentSet degeneracy_order_greedy(const Graph& g) {
    std::vector<Vertex> order;
    degeneracy(g, &order);
    std::vector<bool> blocked(g.vertex_count(), false);
    std::vector<Vertex> chosen;
    for (Vertex v : order) {
        if (blocked[v]) continue;
        chosen.push_back(v);
        for (Vertex u : g.neighbors(v)) blocked[u] = true;
    }
    return IndependentSet(std::move(chosen));
}

IndependentSet sdp_inner_solver(const Graph&) {
    throw std::logic_error("sdp_inner_solver: no SDP backend is available");
}

IndependentSet degeneracy_pipeline(const Graph& g, std::uint64_t seed, const InnerSolver& inner) {
    const int delta = g.min_degree();
    if (g.empty() || delta < 1) throw std::invalid_argument("degeneracy_pipeline: minimum degree must be at least 1");
    const LayerDecomposition d = layer_decompose(g, seed);
    const DerivedGraph prefix = prefix_graph(g, d, delta + 1);
    IndependentSet local = inner(prefix.graph);
    require_independent(prefix.graph, local, "degeneracy_pipeline inner solver");
    return local.mapped(prefix.to_parent);
}

}  // namespace rvis
