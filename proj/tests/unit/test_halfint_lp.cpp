#include <doctest.h>

#include "corpus.hpp"
#include "rvis/generators.hpp"
#include "rvis/halfint_lp.hpp"
#include "rvis/oracle.hpp"

using namespace rvis;
using namespace rvis::testing;

namespace {

std::vector<HalfValue> all_of(Vertex n, HalfValue v) { return std::vector<HalfValue>(n, v); }

}  // namespace

TEST_CASE("nt_solve examples") {
    const auto c5 = nt_solve(gen_cycle(5), VertexWeights::unit(5));
    CHECK(c5.assignment == all_of(5, HalfValue::Half));
    CHECK(c5.objective == Rational(5, 2));

    const auto star = nt_solve(gen_star(3), VertexWeights::unit(4));
    CHECK(star.assignment == std::vector<HalfValue>{HalfValue::Zero, HalfValue::One, HalfValue::One, HalfValue::One});
    CHECK(star.objective == 3);
    CHECK(star.zero == std::vector<Vertex>{0});
    CHECK(star.one == std::vector<Vertex>{1, 2, 3});

    const auto k2 = nt_solve(gen_complete(2), VertexWeights::unit(2));
    CHECK(k2.assignment == all_of(2, HalfValue::Half));
    CHECK(k2.objective == 1);
    CHECK(k2.value(0) == Rational(1, 2));
}

TEST_CASE("nt_solve on edge cases") {
    const auto empty = nt_solve(build_graph(0, {}), VertexWeights());
    CHECK(empty.objective == 0);
    const auto isolated = nt_solve(build_graph(3, {}), VertexWeights::unit(3));
    CHECK(isolated.one.size() == 3);
    const VertexWeights zeros({Rational(0), Rational(0)});
    const auto zero_weight = nt_solve(gen_complete(2), zeros);
    CHECK(zero_weight.objective == 0);
    CHECK(satisfies_repair_property(gen_complete(2), zero_weight));
    const VertexWeights skewed({Rational(3), Rational(1)});
    const auto tilted = nt_solve(gen_complete(2), skewed);
    CHECK(tilted.assignment == std::vector<HalfValue>{HalfValue::One, HalfValue::Zero});
    CHECK(tilted.objective == 3);
}

TEST_CASE("nt_solve is optimal, feasible and repaired across the corpus") {
    auto graphs = random_graphs(150, 1, 12, 51);
    for (const auto& g : all_graphs_up_to(6)) graphs.push_back(g);
    for (const auto& ng : named_graphs()) {
        if (ng.graph.vertex_count() <= 12) graphs.push_back(ng.graph);
    }
    std::uint64_t seed = 300;
    for (const auto& g : graphs) {
        const VertexWeights unit = VertexWeights::unit(g.vertex_count());
        const auto s = nt_solve(g, unit);
        CHECK(is_feasible(g, s));
        CHECK(satisfies_repair_property(g, s));
        CHECK(s.objective == lp_half_bruteforce(g, unit));
        CHECK(s.one.size() >= s.zero.size());
        CHECK(s.zero.size() + s.half.size() + s.one.size() == static_cast<std::size_t>(g.vertex_count()));

        const VertexWeights w = random_weights(g.vertex_count(), ++seed);
        const auto ws = nt_solve(g, w);
        CHECK(is_feasible(g, ws));
        CHECK(satisfies_repair_property(g, ws));
        CHECK(ws.objective == lp_half_bruteforce(g, w));
        CHECK(nt_solve(g, w).assignment == ws.assignment);
    }
}

TEST_CASE("nt_solve handles large rational weights") {
    const Graph g = gen_cycle(7);
    std::vector<Rational> w;
    for (int i = 0; i < 7; ++i) w.push_back(Rational((BigInt(1) << 80) + i, 3 + i));
    const VertexWeights big(w);
    const auto s = nt_solve(g, big);
    CHECK(is_feasible(g, s));
    CHECK(s.objective == brute_force_half_lp(g, big));
}

TEST_CASE("rv_lp_round examples") {
    const auto tight = gen_rvlp_tight(3);
    const IndependentSet t = rv_lp_round(tight.graph, tight.weights);
    CHECK(is_independent(tight.graph, t));
    CHECK(total_weight(t, tight.weights) >= Rational(3, 2));
    CHECK(rv_lp_value(tight.graph, tight.weights) >= Rational(3, 4));

    const IndependentSet c5 = rv_lp_round(gen_cycle(5), VertexWeights::unit(5));
    CHECK(c5.size() == 2);

    const IndependentSet k37 = rv_lp_round(gen_complete_bipartite(3, 7), VertexWeights::unit(10));
    CHECK(k37 == IndependentSet({3, 4, 5, 6, 7, 8, 9}));

    CHECK_THROWS_AS(rv_lp_round(build_graph(3, {{0, 1}}), VertexWeights::unit(3)), std::invalid_argument);
}

TEST_CASE("rv_lp_round meets both weight bounds") {
    auto graphs = random_graphs(150, 2, 14, 57);
    for (const auto& ng : named_graphs()) graphs.push_back(ng.graph);
    std::uint64_t seed = 700;
    for (const auto& g : graphs) {
        if (g.vertex_count() == 0 || g.min_degree() == 0) continue;
        const VertexWeights unit = VertexWeights::unit(g.vertex_count());
        const VertexWeights w = random_weights(g.vertex_count(), ++seed);
        for (const auto* weights : {&unit, &w}) {
            const IndependentSet s = rv_lp_round(g, *weights);
            REQUIRE(is_independent(g, s));
            const Rational got = total_weight(s, *weights);
            CHECK(got >= degree_weighted_sum(g, *weights));
            CHECK(got >= 2 * rv_lp_value(g, *weights));
            Rational best = 0;
            const IndependentSet reference = rv_maximizer(g, weights);
            for (Vertex v : reference.members()) best += (*weights)[v] / (g.degree(v) + 1);
            CHECK(got >= 2 * best);
        }
    }
}
