#include "fillin/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "fillin/sparse_pattern.hpp"

namespace fillin {

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation: negative size");
  Permutation p;
  p.new_to_old.resize(static_cast<std::size_t>(n));
  std::iota(p.new_to_old.begin(), p.new_to_old.end(), 0);
  p.old_to_new = p.new_to_old;
  return p;
}

Permutation Permutation::from_new_to_old(std::vector<int> new_to_old) {
  const int n = static_cast<int>(new_to_old.size());
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k) {
    const int v = new_to_old[static_cast<std::size_t>(k)];
    if (v < 0 || v >= n || inverse[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("permutation: sequence is not a bijection on [0, n)");
    inverse[static_cast<std::size_t>(v)] = k;
  }
  Permutation p;
  p.new_to_old = std::move(new_to_old);
  p.old_to_new = std::move(inverse);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.new_to_old = old_to_new;
  p.old_to_new = new_to_old;
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < size(); ++k)
    if (new_to_old[static_cast<std::size_t>(k)] != k) return false;
  return true;
}

Permutation permutation_from_scores(std::span<const double> scores) {
  const int n = static_cast<int>(scores.size());
  for (double s : scores)
    if (!std::isfinite(s))
      throw std::invalid_argument("permutation_from_scores: non-finite score");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double sa = scores[static_cast<std::size_t>(a)];
    const double sb = scores[static_cast<std::size_t>(b)];
    return sa != sb ? sa > sb : a < b;
  });
  return Permutation::from_new_to_old(std::move(order));
}

SparsePattern apply_permutation(const SparsePattern& p, const Permutation& perm) {
  if (perm.size() != p.n)
    throw std::invalid_argument("apply_permutation: size mismatch");
  std::vector<std::pair<int, int>> entries;
  std::vector<double> vals;
  entries.reserve(static_cast<std::size_t>(p.nnz()));
  if (p.has_values()) vals.reserve(static_cast<std::size_t>(p.nnz()));
  for (int i = 0; i < p.n; ++i) {
    const auto start = p.row_starts[static_cast<std::size_t>(i)];
    const auto r = p.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      entries.emplace_back(perm.position_of(i), perm.position_of(r[k]));
      if (p.has_values()) vals.push_back(p.values[static_cast<std::size_t>(start) + k]);
    }
  }
  return p.has_values() ? pattern_from_entries(p.n, std::move(entries), std::move(vals))
                        : pattern_from_entries(p.n, std::move(entries));
}

void write_permutation(std::ostream& out, const Permutation& perm) {
  for (int v : perm.new_to_old) out << v << '\n';
}

Permutation read_permutation(std::istream& in) {
  std::vector<int> seq;
  long long v = 0;
  while (in >> v) {
    if (v < 0 || v > static_cast<long long>(1u << 30))
      throw std::runtime_error("permutation file: entry out of range");
    seq.push_back(static_cast<int>(v));
  }
  if (!in.eof() && in.fail())
    throw std::runtime_error("permutation file: non-integer content");
  return Permutation::from_new_to_old(std::move(seq));
}

}  // namespace fillin
