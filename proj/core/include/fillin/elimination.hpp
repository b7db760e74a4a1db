#ifndef FILLIN_ELIMINATION_HPP
#define FILLIN_ELIMINATION_HPP

#include <cstdint>

#include "fillin/graph.hpp"
#include "fillin/permutation.hpp"
#include "fillin/sparse_pattern.hpp"

namespace fillin {

// Index-distance metrics of a (permuted) symmetric pattern under the
// full-diagonal convention: sigma1/sigma2_sq sum |i-j| and (i-j)^2 over
// lower-triangle entries, bandwidth is the largest such distance, and
// envelope_size sums i - first_col(i) per row.
struct EnvelopeMetrics {
  std::int64_t sigma1 = 0;
  std::int64_t sigma2_sq = 0;
  std::int64_t bandwidth = 0;
  std::int64_t envelope_size = 0;
};

EnvelopeMetrics envelope_metrics(const SparsePattern& p);
EnvelopeMetrics envelope_metrics(const Graph& g, const Permutation& perm);

// Outcome of the elimination game plus the envelope metrics of the
// permuted pattern. factor_nnz counts L and U separately, each with a
// full diagonal.
struct FillReport {
  std::int64_t fill_edges = 0;
  std::int64_t factor_nnz = 0;
  double nnz_ratio = 0.0;
  std::int64_t sigma1 = 0;
  std::int64_t sigma2_sq = 0;
  std::int64_t bandwidth = 0;
  std::int64_t envelope_size = 0;
};

// Simulates symmetric elimination in the order perm.new_to_old: each
// eliminated node pairwise connects its not-yet-eliminated neighbors, and
// edges absent from the current filled graph count as fill.
FillReport elimination_fill(const Graph& g, const Permutation& perm);

// Independent brute-force oracle: dense boolean simulation of the
// structural factorization in permuted index space. Guarded to n <= 2048.
std::int64_t naive_fill_reference(const Graph& g, const Permutation& perm);

// A.nnz under the full-diagonal convention: n + 2|E|.
std::int64_t pattern_nnz_full_diagonal(const Graph& g);

// (L.nnz + U.nnz - A.nnz) / A.nnz, which reduces to 2*fill/A.nnz when the
// factor diagonal is shared.
double nnz_ratio(std::int64_t fill_edges, std::int64_t a_nnz);

}  // namespace fillin

#endif
