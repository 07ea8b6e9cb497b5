#include "qdiv/ensembles.hpp"

#include <random>

namespace qdiv {

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Index trial_dimension(std::uint64_t seed, int lo, int hi) {
  std::mt19937_64 gen(sub_seed(seed, 100));
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(gen);
}

KrausChannel random_channel_for(Index dim, std::uint64_t seed) {
  std::mt19937_64 gen(sub_seed(seed, 200));
  const Index out_dim = dim == 1 ? 1 : std::uniform_int_distribution<Index>(2, dim)(gen);
  Index env_dim = std::uniform_int_distribution<Index>(1, 3)(gen);
  while (env_dim * out_dim < dim) ++env_dim;
  return random_channel(dim, out_dim, env_dim, sub_seed(seed, 201));
}

ProblemInstance random_pd_instance(Index dim, std::uint64_t seed) {
  return {"random-pd", random_state(dim, dim, sub_seed(seed, 1)),
          random_state(dim, dim, sub_seed(seed, 2)), random_channel_for(dim, seed)};
}

ProblemInstance stratified_instance(Index dim, std::uint64_t seed, int stratum) {
  DensityMatrix b = random_state(dim, dim, sub_seed(seed, 2));
  switch (stratum % 3) {
    case 0:
      return random_pd_instance(dim, seed);
    case 1:
      return {"rank-one", random_state(dim, 1, sub_seed(seed, 1)), std::move(b),
              random_channel_for(dim, seed)};
    default: {
      std::mt19937_64 gen(sub_seed(seed, 3));
      const Index rank = std::uniform_int_distribution<Index>(1, dim)(gen);
      return {"pinching", random_state(dim, rank, sub_seed(seed, 1)), std::move(b),
              diagonal_pinching(dim)};
    }
  }
}

ProblemInstance equal_pair_instance(Index dim, std::uint64_t seed) {
  DensityMatrix a = random_state(dim, dim, sub_seed(seed, 1));
  return {"equal-pair", a, a, random_channel_for(dim, seed)};
}

ProblemInstance identity_channel_instance(Index dim, std::uint64_t seed) {
  std::mt19937_64 gen(sub_seed(seed, 3));
  const Index rank = std::uniform_int_distribution<Index>(1, dim)(gen);
  return {"identity-channel", random_state(dim, rank, sub_seed(seed, 1)),
          random_state(dim, dim, sub_seed(seed, 2)), identity_channel(dim)};
}

Vector random_unit_vector(Index dim, std::uint64_t seed) {
  std::mt19937_64 gen(sub_seed(seed, 300));
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) {
    const double re = normal(gen);
    const double im = normal(gen);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

}  // namespace qdiv
