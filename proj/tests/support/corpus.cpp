#include "corpus.hpp"

#include <map>
#include <random>

#include "rvis/random.hpp"

namespace rvis::testing {

std::vector<NamedGraph> named_graphs() {
    std::vector<NamedGraph> out;
    out.push_back({"K2", gen_complete(2)});
    for (Vertex n = 3; n <= 12; ++n) out.push_back({"C" + std::to_string(n), gen_cycle(n)});
    for (Vertex n = 1; n <= 8; ++n) out.push_back({"P" + std::to_string(n), gen_path(n)});
    for (Vertex n = 4; n <= 6; ++n) out.push_back({"K" + std::to_string(n), gen_complete(n)});
    out.push_back({"star5", gen_star(5)});
    out.push_back({"K3,3", gen_complete_bipartite(3, 3)});
    out.push_back({"K3,7", gen_complete_bipartite(3, 7)});
    out.push_back({"K3,8", gen_complete_bipartite(3, 8)});
    out.push_back({"petersen", gen_petersen()});
    const std::vector<Graph> mix{gen_cycle(3), gen_cycle(5), gen_path(4)};
    out.push_back({"C3+C5+P4", disjoint_union(mix)});
    const std::vector<Graph> two{gen_petersen(), gen_complete(4)};
    out.push_back({"petersen+K4", disjoint_union(two)});
    return out;
}

const std::vector<Graph>& all_graphs_up_to(Vertex max_n) {
    static std::map<Vertex, std::vector<Graph>> cache;
    auto it = cache.find(max_n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> out;
    for (Vertex n = 1; n <= max_n; ++n) {
        auto layer = all_graphs(n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return cache.emplace(max_n, std::move(out)).first->second;
}

std::vector<Graph> connected_graphs_up_to(Vertex max_n) {
    std::vector<Graph> out;
    for (const auto& g : all_graphs_up_to(max_n)) {
        if (is_connected(g)) out.push_back(g);
    }
    return out;
}

std::vector<Graph> random_graphs(std::size_t count, Vertex n_min, Vertex n_max, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<Vertex> size(n_min, n_max);
    std::uniform_real_distribution<double> density(0.1, 0.7);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const Vertex n = size(rng);
        const double p = density(rng);
        out.push_back(gen_random(Gnp{n, p}, rng()));
    }
    return out;
}

std::vector<Graph> random_graphs_min_degree(std::size_t count, int min_degree, Vertex n_min, Vertex n_max,
                                            std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<Vertex> size(n_min, n_max);
    std::uniform_real_distribution<double> density(0.2, 0.6);
    std::vector<Graph> out;
    while (out.size() < count) {
        Graph g = gen_random(Gnp{size(rng), density(rng)}, rng());
        if (g.vertex_count() > 0 && g.min_degree() >= min_degree) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> sparse_corpus(std::size_t random_count, Vertex max_n, std::uint64_t seed) {
    std::vector<Graph> out;
    for (Vertex n = 3; n <= std::min<Vertex>(12, max_n); ++n) out.push_back(gen_cycle(n));
    for (Vertex n = 1; n <= max_n; ++n) out.push_back(gen_path(n));
    Rng rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    // Disjoint unions of short cycles and paths.
    for (int i = 0; i < 20; ++i) {
        std::vector<Graph> parts;
        Vertex used = 0;
        while (true) {
            std::uniform_int_distribution<Vertex> len(coin(rng) ? 3 : 1, 6);
            const Vertex l = len(rng);
            const bool cycle = l >= 3 && coin(rng);
            if (used + l > max_n) break;
            parts.push_back(cycle ? gen_cycle(l) : gen_path(l));
            used += l;
        }
        if (parts.size() >= 2) out.push_back(disjoint_union(parts));
    }
    // Random unicyclic graphs, forests, and unions of the two.
    std::uniform_int_distribution<Vertex> size(3, max_n);
    for (std::size_t i = 0; i < random_count; ++i) {
        const Vertex n = size(rng);
        switch (i % 3) {
            case 0: out.push_back(gen_random_unicyclic(n, rng())); break;
            case 1: out.push_back(gen_random_tree(n, rng())); break;
            default: {
                const Vertex a = std::max<Vertex>(3, n / 2);
                const Vertex b = std::max<Vertex>(1, n - a);
                const std::vector<Graph> parts{gen_random_unicyclic(a, rng()), gen_random_tree(b, rng())};
                out.push_back(disjoint_union(parts));
            }
        }
    }
    return out;
}

VertexWeights random_weights(Vertex n, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> num(1, 12);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> w(n);
    for (auto& x : w) x = Rational(num(rng), den(rng));
    return VertexWeights(std::move(w));
}

std::vector<ColoredGraph> colored_corpus(std::size_t count, Vertex max_n, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> classes(3, 5);
    std::uniform_int_distribution<Vertex> size(4, max_n);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    std::vector<ColoredGraph> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(gen_k_colored(size(rng), classes(rng), density(rng), rng()));
    return out;
}

Rational brute_force_mwis(const Graph& g, const VertexWeights& w) {
    const Vertex n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    Rational best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        Rational sum = 0;
        for (Vertex v = 0; v < n && independent; ++v) {
            if (!(mask >> v & 1)) continue;
            independent = (adj[v] & mask) == 0;
            sum += w[v];
        }
        if (independent && sum > best) best = sum;
    }
    return best;
}

Rational brute_force_half_lp(const Graph& g, const VertexWeights& w) {
    const Vertex n = g.vertex_count();
    std::vector<int> x(n, 0);  // doubled values
    const auto edges = g.edges();
    Rational best = 0;
    while (true) {
        bool ok = true;
        for (const auto& [a, b] : edges) ok = ok && x[a] + x[b] <= 2;
        if (ok) {
            Rational sum = 0;
            for (Vertex v = 0; v < n; ++v) sum += w[v] * x[v];
            if (sum / 2 > best) best = sum / 2;
        }
        Vertex i = 0;
        while (i < n && x[i] == 2) x[i++] = 0;
        if (i == n) break;
        ++x[i];
    }
    return best;
}

Rational capture_fraction(const Graph& g, Vertex v, int k) {
    const Vertex n = g.vertex_count();
    std::vector<BigInt> factorial(n + 1, 1);
    for (Vertex i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;
    std::uint32_t nbr = 0;
    for (Vertex u : g.neighbors(v)) nbr |= 1u << u;
    BigInt hits = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (s >> v & 1) continue;
        const int earlier = __builtin_popcount(s & nbr);
        if (earlier + 1 <= k) {
            const int size = __builtin_popcount(s);
            hits += factorial[size] * factorial[n - 1 - size];
        }
    }
    return Rational(hits, factorial[n]);
}

}  // namespace rvis::testing
