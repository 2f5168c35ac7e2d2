#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "rvis/generators.hpp"
#include "rvis/kcolored.hpp"
#include "rvis/layers.hpp"
#include "rvis/oracle.hpp"
#include "rvis/random.hpp"

using namespace rvis;
using namespace rvis::testing;

namespace {

std::size_t matching_size(const std::vector<Vertex>& mate) {
    return static_cast<std::size_t>(std::count_if(mate.begin(), mate.end(), [](Vertex m) { return m != kRemoved; })) / 2;
}

bool proper(const Graph& g, const Coloring& c) {
    for (const auto& [u, v] : g.edges()) {
        if (c.color[u] == c.color[v]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("validate_coloring names the offending edge") {
    const Graph p3 = gen_path(3);
    CHECK_NOTHROW(validate_coloring(p3, Coloring{2, {0, 1, 0}}));
    try {
        validate_coloring(p3, Coloring{2, {0, 0, 1}});
        FAIL("expected an error");
    } catch (const GraphError& e) {
        CHECK(e.offending() == Edge{0, 1});
    }
    CHECK_THROWS_AS(validate_coloring(p3, Coloring{2, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_coloring(p3, Coloring{2, {0, 2, 0}}), GraphError);
}

TEST_CASE("bipartite exact examples") {
    const Graph k37 = gen_complete_bipartite(3, 7);
    CHECK(bipartite_mis_exact(k37, *bipartition(k37)).size() == 7);
    const Graph p4 = gen_path(4);
    CHECK(bipartite_mis_exact(p4, *bipartition(p4)).size() == 2);
    const Graph c6 = gen_cycle(6);
    CHECK(bipartite_mis_exact(c6, *bipartition(c6)).size() == 3);
    CHECK_FALSE(bipartition(gen_cycle(5)).has_value());
    CHECK_THROWS_AS(bipartite_matching(gen_path(3), {false, false, true}), GraphError);
}

TEST_CASE("matching plus independent set covers every bipartite graph") {
    std::size_t checked = 0;
    auto graphs = random_graphs(300, 2, 14, 211);
    for (const auto& g : sparse_corpus(100, 14, 213)) graphs.push_back(g);
    for (const auto& g : graphs) {
        const auto sides = bipartition(g);
        if (!sides) continue;
        const auto mate = bipartite_matching(g, *sides);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (mate[v] != kRemoved) {
                CHECK(mate[mate[v]] == v);
                CHECK(g.has_edge(v, mate[v]));
            }
        }
        const IndependentSet s = bipartite_mis_exact(g, *sides);
        CHECK(is_independent(g, s));
        CHECK(s.size() + matching_size(mate) == static_cast<std::size_t>(g.vertex_count()));
        CHECK(s.size() == brute_force_alpha(g));
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("colouring along a permutation") {
    const Graph k1 = build_graph(1, {});
    const auto d1 = layer_decompose(k1, std::vector<Vertex>{0});
    CHECK(color_from_permutation(prefix_graph(k1, d1, 1), d1, 1).k == 1);

    const Graph c5 = gen_cycle(5);
    const auto d5 = layer_decompose(c5, std::vector<Vertex>{0, 1, 2, 3, 4});
    const DerivedGraph g2 = prefix_graph(c5, d5, 2);
    const Coloring two = color_from_permutation(g2, d5, 2);
    CHECK(two.k == 2);
    CHECK(proper(g2.graph, two));

    for (const auto& g : random_graphs(100, 3, 14, 217)) {
        for (int k = 1; k <= 4; ++k) {
            const auto d = layer_decompose(g, mix_seed(static_cast<std::uint64_t>(k)));
            const DerivedGraph pg = prefix_graph(g, d, k);
            const Coloring c = color_from_permutation(pg, d, k);
            CHECK(c.k == k);
            CHECK_NOTHROW(validate_coloring(pg.graph, c));
        }
    }
}

TEST_CASE("greedy colouring is proper") {
    for (const auto& g : random_graphs(50, 1, 14, 219)) {
        const Coloring c = greedy_coloring(g);
        CHECK(c.k <= g.max_degree() + 1);
        CHECK_NOTHROW(validate_coloring(g, c));
    }
}

TEST_CASE("two-class colouring gives the optimum") {
    for (const auto& g : random_graphs(80, 2, 14, 223)) {
        const auto sides = bipartition(g);
        if (!sides) continue;
        Coloring c{2, {}};
        for (bool s : *sides) c.color.push_back(s ? 1 : 0);
        CHECK(best_pair_approx(g, c).size() == brute_force_alpha(g));
    }
}

TEST_CASE("edgeless and C5 examples") {
    const Graph e = build_graph(4, {});
    CHECK(lp_largest_class_approx(e, Coloring{1, {0, 0, 0, 0}}).size() == 4);
    CHECK(best_pair_approx(e, Coloring{1, {0, 0, 0, 0}}).size() == 4);
    const Graph c5 = gen_cycle(5);
    const Coloring c{3, {0, 1, 0, 1, 2}};
    CHECK(lp_largest_class_approx(c5, c).size() >= 2);
    CHECK(best_pair_approx(c5, c).size() >= 2);
}

TEST_CASE("hardness products") {
    const auto k2 = gen_hardness_product(gen_path(2), 3);
    CHECK(independence_number(k2.graph) == 3);
    CHECK(best_pair_approx(k2.graph, k2.coloring).size() >= 2);

    const auto c5 = gen_hardness_product(gen_cycle(5), 3);
    REQUIRE(c5.graph.vertex_count() == 15);
    CHECK(independence_number(c5.graph) == 7);
    CHECK(best_pair_approx(c5.graph, c5.coloring).size() >= 5);
    CHECK(lp_largest_class_approx(c5.graph, c5.coloring).size() >= 5);
}

TEST_CASE("both class-based algorithms reach 2/k of the optimum") {
    for (const auto& inst : colored_corpus(200, 14, 227)) {
        const std::size_t opt = brute_force_alpha(inst.graph);
        const std::size_t need = (2 * opt + inst.coloring.k - 1) / inst.coloring.k;
        const IndependentSet a = best_pair_approx(inst.graph, inst.coloring);
        const IndependentSet b = lp_largest_class_approx(inst.graph, inst.coloring);
        CHECK(is_independent(inst.graph, a));
        CHECK(is_independent(inst.graph, b));
        CHECK(a.size() >= need);
        CHECK(b.size() >= need);
    }
}
