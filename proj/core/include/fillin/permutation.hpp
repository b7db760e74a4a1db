#ifndef FILLIN_PERMUTATION_HPP
#define FILLIN_PERMUTATION_HPP

#include <iosfwd>
#include <span>
#include <vector>

namespace fillin {

struct SparsePattern;

// Bijection between original node ids and elimination positions.
// new_to_old[k] is the node eliminated at position k; old_to_new is its
// inverse (the pi of P A P^T).
struct Permutation {
  std::vector<int> new_to_old;
  std::vector<int> old_to_new;

  int size() const { return static_cast<int>(new_to_old.size()); }
  int position_of(int node) const { return old_to_new[static_cast<std::size_t>(node)]; }
  int node_at(int position) const { return new_to_old[static_cast<std::size_t>(position)]; }

  static Permutation identity(int n);
  // Validates bijectivity; throws std::invalid_argument otherwise.
  static Permutation from_new_to_old(std::vector<int> new_to_old);

  Permutation inverse() const;
  bool is_identity() const;
};

// Highest score is eliminated first (position 0); ties break by ascending
// node id. Throws on non-finite scores.
Permutation permutation_from_scores(std::span<const double> scores);

// Entry (i, j) of the input appears at (pi(i), pi(j)) in the result.
SparsePattern apply_permutation(const SparsePattern& p, const Permutation& perm);

// Plain text format: line k holds new_to_old[k], one 0-based integer per line.
void write_permutation(std::ostream& out, const Permutation& perm);
Permutation read_permutation(std::istream& in);

}  // namespace fillin

#endif
