#include <doctest.h>

#include "corpus.hpp"
#include "rvis/generators.hpp"
#include "rvis/oracle.hpp"

using namespace rvis;
using namespace rvis::testing;

TEST_CASE("mwis_exact examples") {
    CHECK(mwis_exact(gen_cycle(5)).size() == 2);
    CHECK(mwis_exact(gen_petersen()).size() == 4);
    CHECK(brute_force_alpha(gen_petersen()) == 4);
    const IndependentSet side = mwis_exact(gen_complete_bipartite(3, 7));
    CHECK(side == IndependentSet({3, 4, 5, 6, 7, 8, 9}));
    CHECK(mwis_exact(build_graph(0, {})).empty());
}

TEST_CASE("mwis_exact returns the lexicographically smallest optimum") {
    CHECK(mwis_exact(gen_cycle(5)) == IndependentSet({0, 2}));
    CHECK(mwis_exact(gen_path(4)) == IndependentSet({0, 2}));
    CHECK(mwis_exact(gen_cycle(6)) == IndependentSet({0, 2, 4}));
    const VertexWeights w({Rational(1), Rational(2), Rational(1)});
    CHECK(mwis_exact(gen_path(3), w) == IndependentSet({0, 2}));
}

TEST_CASE("mwis_exact refuses oversized instances") {
    const Graph big = gen_cycle(41);
    CHECK_THROWS_AS(mwis_exact(big), SizeLimitExceeded);
    OracleLimits wider;
    wider.branch_and_bound = 41;
    CHECK(mwis_exact(big, nullptr, wider).size() == 20);
    wider.branch_and_bound = 70;
    CHECK_THROWS_AS(mwis_exact(gen_cycle(65), nullptr, wider), SizeLimitExceeded);
    CHECK_THROWS_AS(mwis_enumerate(gen_cycle(21)), SizeLimitExceeded);
    CHECK_THROWS_AS(lp_half_bruteforce(gen_cycle(13), VertexWeights::unit(13)), SizeLimitExceeded);
}

TEST_CASE("branch and bound agrees with enumeration and the reference") {
    auto graphs = random_graphs(120, 1, 14, 3);
    for (const auto& g : all_graphs_up_to(6)) graphs.push_back(g);
    std::uint64_t seed = 100;
    for (const auto& g : graphs) {
        const VertexWeights unit = VertexWeights::unit(g.vertex_count());
        const VertexWeights w = random_weights(g.vertex_count(), ++seed);
        for (const auto* weights : {&unit, &w}) {
            const IndependentSet bb = mwis_exact(g, *weights);
            CHECK(is_independent(g, bb));
            CHECK(bb == mwis_enumerate(g, weights));
            CHECK(total_weight(bb, *weights) == brute_force_mwis(g, *weights));
            CHECK(mwis_value(g, weights) == total_weight(bb, *weights));
        }
    }
}

TEST_CASE("mwis_exact is locally optimal") {
    std::uint64_t seed = 40;
    for (const auto& g : random_graphs(60, 4, 14, 8)) {
        const VertexWeights w = random_weights(g.vertex_count(), ++seed);
        const IndependentSet s = mwis_exact(g, w);
        CHECK(is_maximal(g, s));
        // Swapping in an outside vertex whose only chosen neighbour is m must not gain weight.
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (s.contains(v)) continue;
            std::vector<Vertex> blockers;
            for (Vertex u : g.neighbors(v)) {
                if (s.contains(u)) blockers.push_back(u);
            }
            if (blockers.size() == 1) CHECK(w[v] <= w[blockers[0]]);
        }
    }
}

TEST_CASE("lp_half_bruteforce examples") {
    CHECK(lp_half_bruteforce(gen_complete(2), VertexWeights::unit(2)) == 1);
    CHECK(lp_half_bruteforce(gen_cycle(5), VertexWeights::unit(5)) == Rational(5, 2));
    CHECK(lp_half_bruteforce(gen_cycle(3), VertexWeights::unit(3)) == Rational(3, 2));
    CHECK(brute_force_half_lp(gen_cycle(5), VertexWeights::unit(5)) == Rational(5, 2));
}

TEST_CASE("LP relaxation dominates the integral optimum") {
    std::uint64_t seed = 7;
    for (const auto& g : random_graphs(60, 1, 9, 17)) {
        const VertexWeights w = random_weights(g.vertex_count(), ++seed);
        const Rational lp = lp_half_bruteforce(g, w);
        CHECK(lp == brute_force_half_lp(g, w));
        CHECK(lp >= mwis_value(g, &w));
    }
}

TEST_CASE("rv_maximizer maximizes the degree-discounted weight") {
    for (const auto& g : random_graphs(40, 2, 12, 23)) {
        std::vector<Rational> discounted(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) discounted[v] = Rational(1, g.degree(v) + 1);
        const VertexWeights dw(discounted);
        const IndependentSet best = rv_maximizer(g);
        CHECK(total_weight(best, dw) == brute_force_mwis(g, dw));
    }
}
