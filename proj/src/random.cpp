#include "rvis/random.hpp"

#include <numeric>

namespace rvis {

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::vector<Vertex> random_permutation(Vertex n, Rng& rng) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (Vertex i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<Vertex> pick(0, i);
        std::swap(p[i], p[pick(rng)]);
    }
    return p;
}

std::vector<Vertex> random_permutation(Vertex n, std::uint64_t seed) {
    Rng rng(seed);
    return random_permutation(n, rng);
}

}  // namespace rvis
