#include "fillin/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fillin/rng.hpp"

namespace fillin {

GenFamily gen_family_from_name(const std::string& name) {
  if (name == "grid2d-5pt") return GenFamily::Grid2d5pt;
  if (name == "grid2d-9pt") return GenFamily::Grid2d9pt;
  if (name == "grid3d-7pt") return GenFamily::Grid3d7pt;
  if (name == "random-geometric") return GenFamily::RandomGeometric;
  throw std::invalid_argument("unknown generator family '" + name + "'");
}

std::string gen_family_name(GenFamily family) {
  switch (family) {
    case GenFamily::Grid2d5pt: return "grid2d-5pt";
    case GenFamily::Grid2d9pt: return "grid2d-9pt";
    case GenFamily::Grid3d7pt: return "grid3d-7pt";
    case GenFamily::RandomGeometric: return "random-geometric";
  }
  return "?";
}

std::string GenSpec::name() const {
  std::string s = gen_family_name(family);
  if (family == GenFamily::RandomGeometric) {
    s += "-n" + std::to_string(n);
  } else {
    s += "-k" + std::to_string(k);
  }
  s += "-s" + std::to_string(seed);
  return s;
}

namespace {

void add_symmetric(std::vector<std::pair<int, int>>& entries, int u, int v) {
  entries.emplace_back(u, v);
  entries.emplace_back(v, u);
}

SparsePattern grid2d(int k, bool nine_point) {
  if (k < 1) throw std::invalid_argument("generate: grid size must be >= 1");
  const int n = k * k;
  auto id = [k](int x, int y) { return x + k * y; };
  std::vector<std::pair<int, int>> entries;
  for (int y = 0; y < k; ++y) {
    for (int x = 0; x < k; ++x) {
      entries.emplace_back(id(x, y), id(x, y));
      if (x + 1 < k) add_symmetric(entries, id(x, y), id(x + 1, y));
      if (y + 1 < k) add_symmetric(entries, id(x, y), id(x, y + 1));
      if (nine_point && x + 1 < k && y + 1 < k) {
        add_symmetric(entries, id(x, y), id(x + 1, y + 1));
        add_symmetric(entries, id(x + 1, y), id(x, y + 1));
      }
    }
  }
  return pattern_from_entries(n, std::move(entries));
}

SparsePattern grid3d(int k) {
  if (k < 1) throw std::invalid_argument("generate: grid size must be >= 1");
  const int n = k * k * k;
  auto id = [k](int x, int y, int z) { return x + k * (y + k * z); };
  std::vector<std::pair<int, int>> entries;
  for (int z = 0; z < k; ++z)
    for (int y = 0; y < k; ++y)
      for (int x = 0; x < k; ++x) {
        entries.emplace_back(id(x, y, z), id(x, y, z));
        if (x + 1 < k) add_symmetric(entries, id(x, y, z), id(x + 1, y, z));
        if (y + 1 < k) add_symmetric(entries, id(x, y, z), id(x, y + 1, z));
        if (z + 1 < k) add_symmetric(entries, id(x, y, z), id(x, y, z + 1));
      }
  return pattern_from_entries(n, std::move(entries));
}

SparsePattern random_geometric(int n, double radius, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate: node count must be >= 1");
  if (radius < 0) throw std::invalid_argument("generate: radius must be >= 0");
  rng::Engine eng(seed);
  std::vector<double> px(static_cast<std::size_t>(n)), py(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    px[static_cast<std::size_t>(i)] = rng::uniform01(eng);
    py[static_cast<std::size_t>(i)] = rng::uniform01(eng);
  }
  const double r2 = radius * radius;
  std::vector<std::pair<int, int>> entries;
  for (int i = 0; i < n; ++i) {
    entries.emplace_back(i, i);
    for (int j = i + 1; j < n; ++j) {
      const double dx = px[static_cast<std::size_t>(i)] - px[static_cast<std::size_t>(j)];
      const double dy = py[static_cast<std::size_t>(i)] - py[static_cast<std::size_t>(j)];
      if (dx * dx + dy * dy <= r2) add_symmetric(entries, i, j);
    }
  }
  return pattern_from_entries(n, std::move(entries));
}

}  // namespace

SparsePattern generate(const GenSpec& spec) {
  switch (spec.family) {
    case GenFamily::Grid2d5pt: return grid2d(spec.k, false);
    case GenFamily::Grid2d9pt: return grid2d(spec.k, true);
    case GenFamily::Grid3d7pt: return grid3d(spec.k);
    case GenFamily::RandomGeometric:
      return random_geometric(spec.n, spec.radius, spec.seed);
  }
  throw std::invalid_argument("generate: unknown family");
}

std::pair<SparsePattern, Permutation> random_permute(const SparsePattern& p,
                                                     std::uint64_t seed) {
  rng::Engine eng(seed);
  Permutation perm = Permutation::from_new_to_old(rng::random_indices(p.n, eng));
  return {apply_permutation(p, perm), perm};
}

}  // namespace fillin
