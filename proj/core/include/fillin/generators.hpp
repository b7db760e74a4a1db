#ifndef FILLIN_GENERATORS_HPP
#define FILLIN_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "fillin/permutation.hpp"
#include "fillin/sparse_pattern.hpp"

namespace fillin {

enum class GenFamily { Grid2d5pt, Grid2d9pt, Grid3d7pt, RandomGeometric };

GenFamily gen_family_from_name(const std::string& name);
std::string gen_family_name(GenFamily family);

// Deterministic synthetic inputs: structured grid stencils and random
// geometric graphs (uniform points in the unit square, edges within
// `radius`). Randomness comes from mt19937_64 seeded with `seed`.
struct GenSpec {
  GenFamily family = GenFamily::Grid2d5pt;
  int k = 0;           // nodes per axis for grid families
  int n = 0;           // node count for random-geometric
  double radius = 0.0; // connection radius for random-geometric
  std::uint64_t seed = 0;

  std::string name() const;
};

// Symmetric pattern with a full diagonal; deterministic per spec.
SparsePattern generate(const GenSpec& spec);

// Applies a uniformly random relabeling derived from `seed`; returns the
// scrambled pattern and the permutation used.
std::pair<SparsePattern, Permutation> random_permute(const SparsePattern& p,
                                                     std::uint64_t seed);

}  // namespace fillin

#endif
