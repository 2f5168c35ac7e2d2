#include "rvis/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rvis/random.hpp"

namespace rvis {

namespace {

double unit_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

HardnessProduct gen_hardness_product(const Graph& g, int k) {
    require(k >= 3, "gen_hardness_product: k must be at least 3");
    HardnessProduct p;
    p.base_vertices = g.vertex_count();
    p.k = k;
    const Vertex n = g.vertex_count();
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        for (int i = 0; i < k - 1; ++i) {
            for (int j = 0; j < k - 1; ++j) {
                if (i != j) edges.emplace_back(p.copy(u, i), p.copy(v, j));
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < k - 1; ++i) edges.emplace_back(p.copy(v, k - 1), p.copy(v, i));
    }
    p.graph = build_graph(k * n, edges);
    p.coloring.k = k;
    p.coloring.color.resize(k * n);
    for (Vertex x = 0; x < k * n; ++x) p.coloring.color[x] = n == 0 ? 0 : x / n;
    return p;
}

IndependentSet normalize_product_solution(const HardnessProduct& p, const IndependentSet& s) {
    require_independent(p.graph, s, "normalize_product_solution");
    const Vertex n = p.base_vertices;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        int copies = 0;
        for (int i = 0; i < p.k; ++i) copies += s.contains(p.copy(v, i)) ? 1 : 0;
        if (copies <= 1) {
            out.push_back(p.copy(v, p.k - 1));
        } else {
            for (int i = 0; i < p.k - 1; ++i) out.push_back(p.copy(v, i));
        }
    }
    return IndependentSet(std::move(out));
}

Graph gen_layered_counterexample(int k, int d) {
    require(k >= 1, "gen_layered_counterexample: k must be positive");
    require(d >= 2, "gen_layered_counterexample: d must be at least 2");
    const Vertex middle_start = k;
    const Vertex clique_start = k + d * k;
    const Vertex n = clique_start + d * k * (d - 1);
    std::vector<Edge> edges;
    for (Vertex r = 0; r < k; ++r) {
        for (int j = 0; j < d; ++j) edges.emplace_back(r, middle_start + r * d + j);
    }
    for (Vertex m = 0; m < d * k; ++m) {
        for (int j = 0; j < d - 1; ++j) edges.emplace_back(middle_start + m, clique_start + m * (d - 1) + j);
    }
    for (Vertex a = clique_start; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    return build_graph(n, edges);
}

std::vector<Vertex> layered_counterexample_middle(int k, int d) {
    std::vector<Vertex> out(d * k);
    std::iota(out.begin(), out.end(), k);
    return out;
}

WeightedGraph gen_rvlp_tight(int k) {
    require(k >= 1, "gen_rvlp_tight: k must be positive");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < k; ++a) {
        for (Vertex b = a + 1; b < k; ++b) edges.emplace_back(a, b);
        for (Vertex b = k; b < 2 * k; ++b) edges.emplace_back(a, b);
    }
    std::vector<Rational> w(2 * k, Rational(1));
    for (Vertex a = 0; a < k; ++a) w[a] = Rational(2 * k, k + 1);
    return {build_graph(2 * k, edges), VertexWeights(std::move(w))};
}

Graph gen_cycle(Vertex n) {
    require(n >= 3, "gen_cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges);
}

Graph gen_path(Vertex n) {
    require(n >= 0, "gen_path: negative size");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

Graph gen_complete(Vertex n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    return build_graph(n, edges);
}

Graph gen_complete_bipartite(Vertex a, Vertex b) {
    require(a >= 0 && b >= 0, "gen_complete_bipartite: negative side");
    std::vector<Edge> edges;
    for (Vertex x = 0; x < a; ++x) {
        for (Vertex y = 0; y < b; ++y) edges.emplace_back(x, a + y);
    }
    return build_graph(a + b, edges);
}

Graph gen_star(Vertex leaves) { return gen_complete_bipartite(1, leaves); }

Graph gen_petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return build_graph(10, edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::vector<Edge> edges;
    Vertex offset = 0;
    for (const auto& part : parts) {
        for (const auto& [u, v] : part.edges()) edges.emplace_back(u + offset, v + offset);
        offset += part.vertex_count();
    }
    return build_graph(offset, edges);
}

Graph gen_random(const RandomFamily& family, std::uint64_t seed) {
    Rng rng(seed);
    if (const auto* f = std::get_if<Gnp>(&family)) {
        require(f->n >= 0, "gnp: negative n");
        require(f->p >= 0.0 && f->p <= 1.0, "gnp: p must lie in [0, 1]");
        std::vector<Edge> edges;
        for (Vertex a = 0; a < f->n; ++a) {
            for (Vertex b = a + 1; b < f->n; ++b) {
                if (unit_real(rng) < f->p) edges.emplace_back(a, b);
            }
        }
        return build_graph(f->n, edges);
    }
    if (const auto* f = std::get_if<Regular>(&family)) {
        require(f->n >= 0 && f->d >= 0 && f->d < std::max<Vertex>(f->n, 1), "regular: need 0 <= d < n");
        require((static_cast<std::int64_t>(f->n) * f->d) % 2 == 0, "regular: n*d must be even");
        std::vector<Vertex> points;
        for (Vertex v = 0; v < f->n; ++v) points.insert(points.end(), f->d, v);
        for (int attempt = 0; attempt < 100000; ++attempt) {
            for (std::size_t i = points.size(); i > 1; --i) {
                std::uniform_int_distribution<std::size_t> pick(0, i - 1);
                std::swap(points[i - 1], points[pick(rng)]);
            }
            std::set<Edge> seen;
            bool ok = true;
            for (std::size_t i = 0; ok && i < points.size(); i += 2) {
                Vertex a = points[i], b = points[i + 1];
                if (a > b) std::swap(a, b);
                ok = a != b && seen.emplace(a, b).second;
            }
            if (ok) return build_graph(f->n, std::vector<Edge>(seen.begin(), seen.end()));
        }
        throw std::invalid_argument("regular: pairing model kept producing loops or multi-edges");
    }
    if (const auto* f = std::get_if<CompleteBipartite>(&family)) return gen_complete_bipartite(f->a, f->b);
    const auto& f = std::get<CyclesAndPaths>(family);
    std::vector<Graph> parts;
    for (Vertex c : f.cycles) parts.push_back(gen_cycle(c));
    for (Vertex p : f.paths) {
        require(p >= 1, "cycles_and_paths: path needs at least one vertex");
        parts.push_back(gen_path(p));
    }
    return disjoint_union(parts);
}

Graph gen_random_tree(Vertex n, std::uint64_t seed) {
    require(n >= 1, "gen_random_tree: need at least one vertex");
    if (n == 1) return build_graph(1, {});
    if (n == 2) return build_graph(2, {{0, 1}});
    Rng rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = pick(rng);
    std::vector<int> degree(n, 1);
    for (Vertex c : code) ++degree[c];
    std::set<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.insert(v);
    }
    std::vector<Edge> edges;
    for (Vertex c : code) {
        const Vertex leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1) leaves.insert(c);
    }
    const Vertex a = *leaves.begin();
    const Vertex b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return build_graph(n, edges);
}

Graph gen_random_unicyclic(Vertex n, std::uint64_t seed) {
    require(n >= 3, "gen_random_unicyclic: need at least 3 vertices");
    const Graph tree = gen_random_tree(n, seed);
    Rng rng(mix_seed(seed));
    std::vector<Edge> non_edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (!tree.has_edge(a, b)) non_edges.emplace_back(a, b);
        }
    }
    std::uniform_int_distribution<std::size_t> pick(0, non_edges.size() - 1);
    auto edges = tree.edges();
    edges.push_back(non_edges[pick(rng)]);
    return build_graph(n, edges);
}

ColoredGraph gen_k_colored(Vertex n, int k, double p, std::uint64_t seed) {
    require(k >= 1, "gen_k_colored: k must be positive");
    require(p >= 0.0 && p <= 1.0, "gen_k_colored: p must lie in [0, 1]");
    Rng rng(seed);
    std::uniform_int_distribution<int> pick(0, k - 1);
    ColoredGraph out;
    out.coloring.k = k;
    out.coloring.color.resize(n);
    for (auto& c : out.coloring.color) c = pick(rng);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (out.coloring.color[a] != out.coloring.color[b] && unit_real(rng) < p) edges.emplace_back(a, b);
        }
    }
    out.graph = build_graph(n, edges);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    Vertex count = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == g.vertex_count();
}

namespace {

using Code = std::uint64_t;

// Bit index of the pair (i, j), i < j, in the upper-triangle code of an n-vertex graph.
int pair_bit(int i, int j, int n) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

struct SmallGraph {
    int n;
    std::vector<std::uint32_t> adj;  // bitmask rows
};

// Largest upper-triangle code over all relabellings that order vertices by a refinement invariant.
Code canonical_code(const SmallGraph& g) {
    const int n = g.n;
    std::vector<std::pair<std::vector<int>, int>> keyed(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> key{__builtin_popcount(g.adj[v])};
        std::vector<int> nd;
        for (int u = 0; u < n; ++u) {
            if (g.adj[v] >> u & 1) nd.push_back(__builtin_popcount(g.adj[u]));
        }
        std::sort(nd.begin(), nd.end());
        key.insert(key.end(), nd.begin(), nd.end());
        keyed[v] = {std::move(key), v};
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> cls(n);  // class of each position
    for (int i = 0, c = 0; i < n; ++i) {
        if (i > 0 && keyed[i].first != keyed[i - 1].first) ++c;
        cls[i] = c;
    }
    std::vector<int> vertex_class(n);
    for (int i = 0; i < n; ++i) vertex_class[keyed[i].second] = cls[i];

    Code best = 0;
    bool have = false;
    std::vector<int> order(n);
    std::vector<bool> used(n, false);
    auto recurse = [&](auto&& self, int pos, Code code) -> void {
        if (pos == n) {
            if (!have || code > best) best = code;
            have = true;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || vertex_class[v] != cls[pos]) continue;
            Code next = code;
            for (int i = 0; i < pos; ++i) {
                if (g.adj[v] >> order[i] & 1) next |= Code{1} << pair_bit(i, pos, n);
            }
            used[v] = true;
            order[pos] = v;
            self(self, pos + 1, next);
            used[v] = false;
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

Graph decode(Code code, int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (code >> pair_bit(i, j, n) & 1) edges.emplace_back(i, j);
        }
    }
    return build_graph(n, edges);
}

}  // namespace

std::vector<Graph> all_graphs(Vertex n, bool connected_only) {
    require(n >= 0 && n <= 8, "all_graphs: supported for 0 <= n <= 8");
    if (n == 0) return connected_only ? std::vector<Graph>{} : std::vector<Graph>{Graph()};
    std::vector<Graph> smaller = all_graphs(n - 1, false);
    std::set<Code> codes;
    for (const auto& h : smaller) {
        SmallGraph base{n, std::vector<std::uint32_t>(n, 0)};
        for (const auto& [u, v] : h.edges()) {
            base.adj[u] |= 1u << v;
            base.adj[v] |= 1u << u;
        }
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            SmallGraph g = base;
            g.adj[n - 1] = mask;
            for (int u = 0; u < n - 1; ++u) {
                if (mask >> u & 1) g.adj[u] |= 1u << (n - 1);
            }
            codes.insert(canonical_code(g));
        }
    }
    std::vector<Graph> out;
    for (Code c : codes) {
        Graph g = decode(c, n);
        if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace rvis
