#pragma once

// Seeded random instances. Every generator is a pure function of its seed.

#include <cstdint>

#include "qdiv/harness.hpp"

namespace qdiv {

/// Independent stream `stream` derived from `seed` (splitmix64 finalizer).
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform in [lo, hi], drawn from `seed`.
Index trial_dimension(std::uint64_t seed, int lo, int hi);

/// Random channel on ℂⁿ with output dimension in [2, n] (1 when n = 1) and an
/// environment large enough for an isometry.
KrausChannel random_channel_for(Index dim, std::uint64_t seed);

/// Full-rank A and B with a random channel.
ProblemInstance random_pd_instance(Index dim, std::uint64_t seed);

/// stratum 0: full-rank pair and random channel; 1: rank-one A, random
/// channel; 2: random-rank A with the standard-basis pinching. B is always
/// full rank.
ProblemInstance stratified_instance(Index dim, std::uint64_t seed, int stratum);

ProblemInstance equal_pair_instance(Index dim, std::uint64_t seed);
ProblemInstance identity_channel_instance(Index dim, std::uint64_t seed);

/// Haar-distributed unit vector in ℂⁿ.
Vector random_unit_vector(Index dim, std::uint64_t seed);

}  // namespace qdiv
