#include "rvis/graph.hpp"

#include <algorithm>
#include <sstream>

namespace rvis {

namespace {

std::string pair_text(Edge e) {
    std::ostringstream os;
    os << "(" << e.first << ", " << e.second << ")";
    return os.str();
}

void sort_unique(std::vector<Vertex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::min_degree() const {
    int best = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) {
        if (v == 0 || degree(v) < best) best = degree(v);
    }
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
    return best;
}

Rational Graph::average_degree() const {
    if (empty()) return Rational(0);
    return Rational(2 * static_cast<std::int64_t>(edge_count_), static_cast<std::int64_t>(vertex_count()));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph build_graph(Vertex n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.adjacency_.assign(n, {});
    for (const auto& e : edges) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
            throw GraphError("edge endpoint out of range " + pair_text(e), e);
        }
        if (e.first == e.second) {
            throw GraphError("self-loop " + pair_text(e), e);
        }
        g.adjacency_[e.first].push_back(e.second);
        g.adjacency_[e.second].push_back(e.first);
    }
    std::size_t total = 0;
    for (auto& a : g.adjacency_) {
        sort_unique(a);
        total += a.size();
    }
    g.edge_count_ = total / 2;
    return g;
}

Graph quotient_graph(const Graph& g, std::span<const Vertex> old_to_new, Vertex new_n) {
    Graph out;
    out.adjacency_.assign(new_n, {});
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const Vertex nu = old_to_new[u];
        if (nu == kRemoved) continue;
        for (Vertex v : g.neighbors(u)) {
            const Vertex nv = old_to_new[v];
            if (nv == kRemoved || nv == nu) continue;
            out.adjacency_[nu].push_back(nv);
        }
    }
    std::size_t total = 0;
    for (auto& a : out.adjacency_) {
        sort_unique(a);
        total += a.size();
    }
    out.edge_count_ = total / 2;
    return out;
}

DerivedGraph induced_subgraph(const Graph& g, const std::vector<bool>& keep_mask) {
    DerivedGraph d;
    d.from_parent.assign(g.vertex_count(), kRemoved);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (keep_mask[v]) {
            d.from_parent[v] = static_cast<Vertex>(d.to_parent.size());
            d.to_parent.push_back(v);
        }
    }
    d.graph = quotient_graph(g, d.from_parent, static_cast<Vertex>(d.to_parent.size()));
    return d;
}

DerivedGraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<bool> mask(g.vertex_count(), false);
    for (Vertex v : keep) mask.at(v) = true;
    return induced_subgraph(g, mask);
}

DerivedGraph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
    std::vector<bool> mask(g.vertex_count(), true);
    for (Vertex v : drop) mask.at(v) = false;
    return induced_subgraph(g, mask);
}

DerivedGraph merge_vertices(const Graph& g, Vertex v, Vertex w, Vertex survivor) {
    if (v == w) throw GraphError("cannot merge a vertex with itself", {v, w});
    if (survivor != v && survivor != w) throw std::invalid_argument("merge survivor must be one of the merged pair");
    if (g.has_edge(v, w)) throw GraphError("cannot merge adjacent vertices " + pair_text({v, w}), {v, w});
    const Vertex absorbed = survivor == v ? w : v;
    DerivedGraph d;
    d.from_parent.assign(g.vertex_count(), kRemoved);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (x == absorbed) continue;
        d.from_parent[x] = static_cast<Vertex>(d.to_parent.size());
        d.to_parent.push_back(x);
    }
    d.from_parent[absorbed] = d.from_parent[survivor];
    d.graph = quotient_graph(g, d.from_parent, static_cast<Vertex>(d.to_parent.size()));
    return d;
}

VertexWeights::VertexWeights(std::vector<Rational> w) : w_(std::move(w)) {
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] < 0) throw std::invalid_argument("negative weight at vertex " + std::to_string(i));
    }
}

VertexWeights VertexWeights::unit(Vertex n) { return VertexWeights(std::vector<Rational>(n, Rational(1))); }

bool VertexWeights::is_unit() const {
    return std::all_of(w_.begin(), w_.end(), [](const Rational& x) { return x == 1; });
}

VertexWeights VertexWeights::restrict_to(std::span<const Vertex> to_parent) const {
    std::vector<Rational> out;
    out.reserve(to_parent.size());
    for (Vertex v : to_parent) out.push_back(w_.at(v));
    return VertexWeights(std::move(out));
}

IndependentSet::IndependentSet(std::vector<Vertex> members) : members_(std::move(members)) {
    sort_unique(members_);
}

bool IndependentSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

IndependentSet IndependentSet::mapped(std::span<const Vertex> table) const {
    std::vector<Vertex> out;
    out.reserve(members_.size());
    for (Vertex v : members_) out.push_back(table[v]);
    return IndependentSet(std::move(out));
}

std::optional<Edge> find_conflict(const Graph& g, const IndependentSet& s) {
    for (Vertex v : s.members()) {
        if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("set member " + std::to_string(v) + " outside graph");
        for (Vertex u : g.neighbors(v)) {
            if (u > v && s.contains(u)) return Edge{v, u};
        }
    }
    return std::nullopt;
}

bool is_independent(const Graph& g, const IndependentSet& s) { return !find_conflict(g, s).has_value(); }

void require_independent(const Graph& g, const IndependentSet& s, const char* context) {
    if (auto e = find_conflict(g, s)) {
        throw IndependenceViolation(std::string(context) + ": set is not independent, edge " + pair_text(*e), *e);
    }
}

bool is_maximal(const Graph& g, const IndependentSet& s) {
    std::vector<bool> covered(g.vertex_count(), false);
    for (Vertex v : s.members()) {
        covered[v] = true;
        for (Vertex u : g.neighbors(v)) covered[u] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

Rational total_weight(const IndependentSet& s, const VertexWeights& w) {
    Rational sum = 0;
    for (Vertex v : s.members()) sum += w[v];
    return sum;
}

Rational capped_share(const Rational& rho, int degree) { return min(Rational(1), rho / (degree + 1)); }

RVReport recoverable_value(const Graph& g, const IndependentSet& i, const Rational& rho, const VertexWeights* w) {
    require_independent(g, i, "recoverable_value");
    RVReport r;
    r.rho = rho;
    r.reference_set = i;
    r.total = 0;
    for (Vertex v : i.members()) {
        Rational c = capped_share(rho, g.degree(v));
        if (w) c *= (*w)[v];
        r.total += c;
        r.per_vertex.emplace_back(v, std::move(c));
    }
    return r;
}

Rational expected_capture(const Graph& g, std::span<const Vertex> s, int k) {
    if (k <= 0) throw std::invalid_argument("expected_capture: k must be positive");
    Rational sum = 0;
    for (Vertex v : s) sum += capped_share(Rational(k), g.degree(v));
    return sum;
}

Rational degree_weighted_sum(const Graph& g, const VertexWeights& w) {
    Rational sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) sum += w[v] / (g.degree(v) + 1);
    return sum;
}

}  // namespace rvis
