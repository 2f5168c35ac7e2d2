#include "rvis/harness/verify.hpp"

#include "rvis/avg2.hpp"
#include "rvis/classic.hpp"
#include "rvis/halfint_lp.hpp"
#include "rvis/layers.hpp"
#include "rvis/oracle.hpp"
#include "rvis/plg.hpp"
#include "rvis/random.hpp"
#include "rvis/reductions.hpp"

namespace rvis {

namespace {

class Recorder {
public:
    template <typename Body>
    void run(const std::string& name, Body&& body) {
        CheckOutcome outcome{name, true, {}};
        try {
            std::string failure = body();
            if (!failure.empty()) {
                outcome.passed = false;
                outcome.detail = std::move(failure);
            }
        } catch (const InvariantBreach& e) {
            outcome.passed = false;
            outcome.detail = std::string("invariant breach: ") + e.what();
        } catch (const IndependenceViolation& e) {
            outcome.passed = false;
            outcome.detail = std::string("not independent: ") + e.what();
        }
        out.push_back(std::move(outcome));
    }
    std::vector<CheckOutcome> out;
};

std::string compare(const char* what, const Rational& got, const char* relation, const Rational& bound) {
    return what + std::string(" = ") + to_string(got) + " violates " + relation + " " + to_string(bound);
}

}  // namespace

std::vector<CheckOutcome> verify_instance(const Graph& g, const VertexWeights* wp, std::uint64_t seed,
                                          VerifyLimits limits) {
    const Vertex n = g.vertex_count();
    const VertexWeights w = wp != nullptr ? *wp : VertexWeights::unit(n);
    const bool unit = w.is_unit();
    Recorder rec;
    OracleLimits ol;
    ol.branch_and_bound = limits.oracle;
    ol.half_integral = limits.half_integral;

    rec.run("nt_feasible_and_repaired", [&]() -> std::string {
        const auto s = nt_solve(g, w);
        if (!is_feasible(g, s)) return "half-integral solution infeasible";
        if (!satisfies_repair_property(g, s)) return "a ZERO vertex has no ONE neighbour";
        return {};
    });
    if (n <= limits.half_integral) {
        rec.run("nt_optimal", [&]() -> std::string {
            const Rational got = nt_solve(g, w).objective;
            const Rational expected = lp_half_bruteforce(g, w, ol);
            return got == expected ? std::string() : compare("nt objective", got, "==", expected);
        });
    }

    const bool small = n <= limits.oracle;
    const Rational opt = small ? mwis_value(g, &w, ol) : Rational(0);
    if (small) {
        if (unit) {
            rec.run("reduction_sound_mis", [&]() -> std::string {
                const auto r = reduce_low_degree(g, nullptr, {});
                const auto lifted = lift(r.trace, mwis_exact(r.graph, nullptr, ol));
                require_independent(g, lifted, "lifted solution");
                const Rational got(lifted.size());
                return got == opt ? std::string() : compare("lifted optimum", got, "==", opt);
            });
        }
        rec.run("reduction_sound_mwis", [&]() -> std::string {
            const auto r = reduce_low_degree(g, &w, {ReductionMode::MWIS, Rational(7, 3), false});
            const auto lifted = lift(r.trace, mwis_exact(r.graph, &r.weights, ol));
            require_independent(g, lifted, "lifted solution");
            const Rational got = total_weight(lifted, w);
            return got == opt ? std::string() : compare("lifted optimum", got, "==", opt);
        });
    }

    if (n > 0 && g.min_degree() >= 1) {
        rec.run("rv_lp_round_bound", [&]() -> std::string {
            const auto set = rv_lp_round(g, w);
            require_independent(g, set, "rv_lp_round");
            const Rational got = total_weight(set, w);
            const Rational all = degree_weighted_sum(g, w);
            if (got < all) return compare("rv_lp_round weight", got, ">=", all);
            if (small) {
                const auto best = rv_maximizer(g, &w, ol);
                Rational twice = 0;
                for (Vertex v : best.members()) twice += 2 * w[v] / (g.degree(v) + 1);
                if (got < twice) return compare("rv_lp_round weight", got, ">=", twice);
            }
            return {};
        });
    }

    if (small && unit && n > 0) {
        const Rational avg = g.average_degree();
        if (avg >= 2) {
            rec.run("lp_plus_greedy_ratio", [&]() -> std::string {
                const auto set = lp_plus_greedy(g);
                require_independent(g, set, "lp_plus_greedy");
                const Rational bound(ceil(Rational(5) / (2 * avg + 3) * opt));
                const Rational got(set.size());
                return got >= bound ? std::string() : compare("lp_plus_greedy size", got, ">=", bound);
            });
        }
        if (avg <= 2) {
            rec.run("avg2_ratio", [&]() -> std::string {
                const auto res = solve_avg2(g);
                require_independent(g, res.set, "solve_avg2");
                const Rational bound(ceil(Rational(7, 9) * opt));
                const Rational got(res.set.size());
                return got >= bound ? std::string() : compare("avg2 size", got, ">=", bound);
            });
        }
    }

    if (n > 0) {
        rec.run("prefix_certificates", [&]() -> std::string {
            for (int t = 0; t < limits.permutation_samples; ++t) {
                const auto d = layer_decompose(g, trial_seed(seed, t));
                for (int k = 1; k <= 4; ++k) prefix_graph(g, d, k);
            }
            return {};
        });
        rec.run("greedy_maximal", [&]() -> std::string {
            const auto set = greedy(g);
            require_independent(g, set, "greedy");
            return is_maximal(g, set) ? std::string() : "greedy output is not maximal";
        });
        if (g.min_degree() >= 2) {
            rec.run("plg_independent", [&]() -> std::string {
                for (int t = 0; t < limits.permutation_samples; ++t) {
                    require_independent(g, plg(g, trial_seed(seed, t), PlgVariant::G3_HR), "plg");
                }
                return {};
            });
        }
    }
    return rec.out;
}

}  // namespace rvis
