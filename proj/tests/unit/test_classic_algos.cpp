#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "corpus.hpp"
#include "rvis/classic.hpp"
#include "rvis/generators.hpp"
#include "rvis/oracle.hpp"
#include "rvis/random.hpp"

using namespace rvis;
using namespace rvis::testing;

TEST_CASE("greedy examples") {
    CHECK(greedy(gen_cycle(5)).size() == 2);
    CHECK(greedy(gen_layered_counterexample(2, 3)).size() == 3);
    CHECK(greedy(gen_path(4)).size() == 2);
    CHECK(greedy(gen_path(4)) == IndependentSet({0, 2}));
    CHECK(greedy(build_graph(0, {})).empty());
}

TEST_CASE("greedy bounds on the corpus") {
    auto graphs = random_graphs(200, 1, 14, 61);
    for (const auto& ng : named_graphs()) graphs.push_back(ng.graph);
    for (const auto& g : graphs) {
        const IndependentSet s = greedy(g);
        REQUIRE(is_independent(g, s));
        CHECK(is_maximal(g, s));
        const Rational got(s.size());
        CHECK(got >= degree_weighted_sum(g, VertexWeights::unit(g.vertex_count())));
        if (g.vertex_count() > 0 && is_connected(g)) {
            const Rational n(g.vertex_count());
            const Rational ratio = Rational(independence_number(g)) / n;
            CHECK(got >= n * (1 + ratio * ratio) / (g.average_degree() + 1 + ratio));
        }
    }
}

TEST_CASE("weighted greedy examples") {
    const VertexWeights w31({Rational(3), Rational(1)});
    CHECK(weighted_greedy(gen_complete(2), w31) == IndependentSet({0}));

    std::vector<Rational> sw(5, Rational(1));
    sw[0] = 10;
    const VertexWeights star_w(sw);
    const IndependentSet s = weighted_greedy(gen_star(4), star_w);
    CHECK(total_weight(s, star_w) >= 4);
    CHECK(weighted_greedy(gen_cycle(5), VertexWeights::unit(5)).size() == 2);
}

TEST_CASE("the minimum-ratio rule misses the weighted bound on a single edge") {
    const Graph k2 = gen_complete(2);
    const VertexWeights w31({Rational(3), Rational(1)});
    const IndependentSet picked = weighted_greedy(k2, w31, GreedyRule::MinRatio);
    CHECK(picked == IndependentSet({1}));
    CHECK(total_weight(picked, w31) < degree_weighted_sum(k2, w31));
}

TEST_CASE("weighted greedy meets the degree-weighted bound") {
    std::uint64_t seed = 1000;
    for (const auto& g : random_graphs(200, 1, 14, 67)) {
        const VertexWeights w = random_weights(g.vertex_count(), ++seed);
        const IndependentSet s = weighted_greedy(g, w);
        REQUIRE(is_independent(g, s));
        CHECK(is_maximal(g, s));
        CHECK(total_weight(s, w) >= degree_weighted_sum(g, w));
    }
}

TEST_CASE("random permutation independent set") {
    SUBCASE("C5 expectation over all permutations is 5/3") {
        const Graph c5 = gen_cycle(5);
        std::vector<Vertex> perm(5);
        std::iota(perm.begin(), perm.end(), 0);
        std::size_t total = 0;
        std::size_t count = 0;
        do {
            total += first_layer(c5, perm).size();
            ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(count == 120);
        CHECK(Rational(total, count) == Rational(5, 3));
    }
    SUBCASE("cliques and edgeless graphs") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            CHECK(random_permutation_is(gen_complete(6), seed).size() == 1);
            CHECK(random_permutation_is(build_graph(6, {}), seed).size() == 6);
        }
    }
    SUBCASE("same seed, same set") {
        const Graph p = gen_petersen();
        CHECK(random_permutation_is(p, 99) == random_permutation_is(p, 99));
    }
}

TEST_CASE("random permutation expectation, exact and sampled") {
    std::uint64_t seed = 77;
    for (const auto& g : random_graphs(6, 6, 8, 71)) {
        const VertexWeights w = random_weights(g.vertex_count(), ++seed);
        std::vector<Vertex> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        Rational total = 0;
        BigInt count = 0;
        do {
            total += total_weight(first_layer(g, perm), w);
            ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(total / Rational(count) == degree_weighted_sum(g, w));
    }
    auto benchmark = named_graphs();
    for (const auto& ng : benchmark) {
        if (ng.graph.vertex_count() < 5) continue;
        const Graph& g = ng.graph;
        const int trials = 10000;
        double sum = 0;
        double sum_sq = 0;
        for (int t = 0; t < trials; ++t) {
            const double x = static_cast<double>(random_permutation_is(g, trial_seed(5, t)).size());
            sum += x;
            sum_sq += x * x;
        }
        const double mean = sum / trials;
        const double se = std::sqrt(std::max(0.0, sum_sq / trials - mean * mean) / trials);
        const double expected = to_double(degree_weighted_sum(g, VertexWeights::unit(g.vertex_count())));
        CHECK_MESSAGE(std::abs(mean - expected) <= 3 * se + 1e-12, ng.name);
    }
}

TEST_CASE("lp_plus_greedy examples") {
    CHECK(lp_plus_greedy(gen_cycle(5)).size() == 2);
    CHECK(lp_plus_greedy(gen_layered_counterexample(2, 3)).size() == 3);
    const IndependentSet p = lp_plus_greedy(gen_petersen());
    CHECK(p.size() >= 3);
    CHECK(independence_number(gen_petersen()) == 4);
}

TEST_CASE("lp_plus_greedy ratio for average degree at least 2") {
    auto graphs = random_graphs(250, 3, 14, 73);
    for (const auto& ng : named_graphs()) graphs.push_back(ng.graph);
    std::size_t checked = 0;
    for (const auto& g : graphs) {
        if (g.vertex_count() == 0 || g.average_degree() < 2) continue;
        const IndependentSet s = lp_plus_greedy(g);
        REQUIRE(is_independent(g, s));
        const Rational bound = Rational(5) / (2 * g.average_degree() + 3) * Rational(independence_number(g));
        CHECK(Rational(s.size()) >= Rational(ceil(bound)));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("layered counterexample gap") {
    for (int k = 1; k <= 4; ++k) {
        for (int d = 3; d <= 5; ++d) {
            const Graph g = gen_layered_counterexample(k, d);
            CHECK(greedy(g).size() == static_cast<std::size_t>(k + 1));
            CHECK(lp_plus_greedy(g).size() == static_cast<std::size_t>(k + 1));
            const IndependentSet middle(layered_counterexample_middle(k, d));
            for (const Rational rho : {Rational(2), Rational(7, 3), Rational(3)}) {
                CHECK(recoverable_value(g, middle, rho).total == Rational(d * k) * rho / (d + 1));
            }
        }
    }
}
