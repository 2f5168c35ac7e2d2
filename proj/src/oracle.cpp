#include "rvis/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rvis {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }
Vertex lowest(Mask m) { return static_cast<Vertex>(std::countr_zero(m)); }

std::vector<std::int64_t> integer_weights(const Graph& g, const VertexWeights* w, BigInt* den) {
    if (!w) {
        if (den) *den = 1;
        return std::vector<std::int64_t>(g.vertex_count(), 1);
    }
    if (w->size() != g.vertex_count()) throw std::invalid_argument("weight vector length differs from vertex count");
    auto scaled = scale_to_int64(w->values(), den);
    if (!scaled) throw std::overflow_error("weights too large for the exact oracle");
    return *scaled;
}

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> nbr(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Vertex u : g.neighbors(v)) nbr[v] |= bit(u);
    }
    return nbr;
}

class BranchAndBound {
public:
    BranchAndBound(std::vector<Mask> nbr, std::vector<std::int64_t> w) : nbr_(std::move(nbr)), w_(std::move(w)) {}

    std::int64_t best_value(Mask candidates) {
        best_ = -1;
        branch(candidates, 0);
        return best_;
    }

private:
    // Greedy clique partition; an independent set takes at most one vertex per clique.
    std::int64_t clique_cover_bound(Mask rest) const {
        std::int64_t sum = 0;
        while (rest) {
            const Vertex v = lowest(rest);
            Mask clique = bit(v);
            Mask common = nbr_[v] & rest;
            std::int64_t heaviest = w_[v];
            while (common) {
                const Vertex u = lowest(common);
                clique |= bit(u);
                common &= nbr_[u];
                heaviest = std::max(heaviest, w_[u]);
            }
            rest &= ~clique;
            sum += heaviest;
        }
        return sum;
    }

    void branch(Mask cand, std::int64_t current) {
        for (Mask scan = cand; scan;) {
            const Vertex v = lowest(scan);
            scan &= scan - 1;
            if ((nbr_[v] & cand) == 0) {
                current += w_[v];
                cand &= ~bit(v);
            }
        }
        if (cand == 0) {
            best_ = std::max(best_, current);
            return;
        }
        if (current + clique_cover_bound(cand) <= best_) return;

        Vertex pivot = -1;
        int pivot_degree = -1;
        for (Mask scan = cand; scan; scan &= scan - 1) {
            const Vertex v = lowest(scan);
            const int d = std::popcount(nbr_[v] & cand);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        branch(cand & ~bit(pivot) & ~nbr_[pivot], current + w_[pivot]);
        branch(cand & ~bit(pivot), current);
    }

    std::vector<Mask> nbr_;
    std::vector<std::int64_t> w_;
    std::int64_t best_ = -1;
};

Mask full_mask(Vertex n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

Mask above(Vertex v) { return v >= 63 ? Mask{0} : ~(bit(v + 1) - 1); }

void check_bnb_limit(const Graph& g, const OracleLimits& limits) {
    const Vertex cap = std::min<Vertex>(limits.branch_and_bound, 64);
    if (g.vertex_count() > cap) {
        throw SizeLimitExceeded("exact solver refuses instance with " + std::to_string(g.vertex_count()) +
                                " vertices (limit " + std::to_string(cap) + ")");
    }
}

std::vector<Vertex> mask_members(Mask m) {
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(lowest(m));
    return out;
}

}  // namespace

IndependentSet mwis_exact(const Graph& g, const VertexWeights* w, OracleLimits limits) {
    check_bnb_limit(g, limits);
    const Vertex n = g.vertex_count();
    auto weights = integer_weights(g, w, nullptr);
    auto nbr = neighbor_masks(g);
    BranchAndBound solver(nbr, weights);

    const std::int64_t target = solver.best_value(full_mask(n));
    Mask chosen = 0;
    Mask allowed = full_mask(n);
    std::int64_t acc = 0;
    for (Vertex v = 0; v < n && acc < target; ++v) {
        if (!(allowed & bit(v))) continue;
        const Mask rest = allowed & ~nbr[v] & above(v);
        if (acc + weights[v] + solver.best_value(rest) == target) {
            chosen |= bit(v);
            acc += weights[v];
            allowed = rest;
        } else {
            allowed &= ~bit(v);
        }
    }
    return IndependentSet(mask_members(chosen));
}

Rational mwis_value(const Graph& g, const VertexWeights* w, OracleLimits limits) {
    check_bnb_limit(g, limits);
    BigInt den = 1;
    auto weights = integer_weights(g, w, &den);
    BranchAndBound solver(neighbor_masks(g), weights);
    return Rational(solver.best_value(full_mask(g.vertex_count()))) / den;
}

IndependentSet mwis_enumerate(const Graph& g, const VertexWeights* w, OracleLimits limits) {
    const Vertex n = g.vertex_count();
    if (n > std::min<Vertex>(limits.enumeration, 30)) {
        throw SizeLimitExceeded("enumeration refuses instance with " + std::to_string(n) + " vertices");
    }
    auto weights = integer_weights(g, w, nullptr);
    auto nbr = neighbor_masks(g);
    Mask best = 0;
    std::int64_t best_weight = -1;
    const Mask end = Mask{1} << n;
    for (Mask m = 0; m < end; ++m) {
        bool independent = true;
        std::int64_t total = 0;
        for (Mask scan = m; scan && independent; scan &= scan - 1) {
            const Vertex v = lowest(scan);
            independent = (nbr[v] & m) == 0;
            total += weights[v];
        }
        if (!independent) continue;
        if (total > best_weight) {
            best = m;
            best_weight = total;
        } else if (total == best_weight) {
            const auto a = mask_members(m);
            const auto b = mask_members(best);
            if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) best = m;
        }
    }
    return IndependentSet(mask_members(best));
}

Rational lp_half_bruteforce(const Graph& g, const VertexWeights& w, OracleLimits limits) {
    const Vertex n = g.vertex_count();
    if (n > limits.half_integral) {
        throw SizeLimitExceeded("half-integral enumeration refuses instance with " + std::to_string(n) + " vertices");
    }
    BigInt den = 1;
    auto weights = integer_weights(g, &w, &den);
    // Values doubled: 0, 1, 2 stand for 0, 1/2, 1.
    std::vector<int> x(n, 0);
    std::int64_t best = 0;
    auto recurse = [&](auto&& self, Vertex v, std::int64_t acc) -> void {
        if (v == n) {
            best = std::max(best, acc);
            return;
        }
        for (int value = 0; value <= 2; ++value) {
            bool ok = true;
            for (Vertex u : g.neighbors(v)) {
                if (u < v && x[u] + value > 2) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            x[v] = value;
            self(self, v + 1, acc + value * weights[v]);
        }
        x[v] = 0;
    };
    recurse(recurse, 0, 0);
    return Rational(best) / (den * 2);
}

IndependentSet rv_maximizer(const Graph& g, const VertexWeights* w, OracleLimits limits) {
    std::vector<Rational> rv(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        rv[v] = (w ? (*w)[v] : Rational(1)) / (g.degree(v) + 1);
    }
    VertexWeights weights(std::move(rv));
    return mwis_exact(g, &weights, limits);
}

}  // namespace rvis
