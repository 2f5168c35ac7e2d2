#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rvis/graph.hpp"

namespace rvis {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Seed of trial `index` under master seed `master`: mix_seed(master + index).
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) { return mix_seed(master + index); }

/// Uniform permutation of 0..n-1 (Fisher-Yates).
std::vector<Vertex> random_permutation(Vertex n, Rng& rng);
std::vector<Vertex> random_permutation(Vertex n, std::uint64_t seed);

}  // namespace rvis
