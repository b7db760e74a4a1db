#include "fillin/elimination.hpp"

#include <algorithm>
#include <stdexcept>

#include "elim_backend.hpp"

namespace fillin {

EnvelopeMetrics envelope_metrics(const SparsePattern& p) {
  if (!p.is_symmetric())
    throw std::invalid_argument("envelope_metrics: pattern is not symmetric");
  EnvelopeMetrics m;
  for (int i = 0; i < p.n; ++i) {
    int first = i;  // diagonal assumed structurally present
    for (int j : p.row(i)) {
      if (j > i) break;
      first = std::min(first, j);
      const std::int64_t d = i - j;
      m.sigma1 += d;
      m.sigma2_sq += d * d;
      m.bandwidth = std::max(m.bandwidth, d);
    }
    m.envelope_size += i - first;
  }
  return m;
}

EnvelopeMetrics envelope_metrics(const Graph& g, const Permutation& perm) {
  if (perm.size() != g.n)
    throw std::invalid_argument("envelope_metrics: permutation size mismatch");
  EnvelopeMetrics m;
  std::vector<int> first(static_cast<std::size_t>(g.n));
  for (int u = 0; u < g.n; ++u)
    first[static_cast<std::size_t>(perm.position_of(u))] = perm.position_of(u);
  for (int u = 0; u < g.n; ++u) {
    const int pu = perm.position_of(u);
    for (int v : g.neighbors(u)) {
      const int pv = perm.position_of(v);
      if (pv >= pu) continue;  // lower triangle only; each edge counted once
      const std::int64_t d = pu - pv;
      m.sigma1 += d;
      m.sigma2_sq += d * d;
      m.bandwidth = std::max(m.bandwidth, d);
      first[static_cast<std::size_t>(pu)] =
          std::min(first[static_cast<std::size_t>(pu)], pv);
    }
  }
  for (int i = 0; i < g.n; ++i)
    m.envelope_size += i - first[static_cast<std::size_t>(i)];
  return m;
}

namespace {

template <class Backend>
std::int64_t run_game(const Graph& g, const Permutation& perm) {
  Backend state(g);
  std::int64_t fill = 0;
  for (int v : perm.new_to_old) fill += state.eliminate(v);
  return fill;
}

}  // namespace

FillReport elimination_fill(const Graph& g, const Permutation& perm) {
  if (perm.size() != g.n)
    throw std::invalid_argument("elimination_fill: permutation size mismatch");
  FillReport r;
  r.fill_edges = g.n <= detail::kBitsetMaxNodes
                     ? run_game<detail::BitsetElimGraph>(g, perm)
                     : run_game<detail::HashElimGraph>(g, perm);
  const EnvelopeMetrics env = envelope_metrics(g, perm);
  r.sigma1 = env.sigma1;
  r.sigma2_sq = env.sigma2_sq;
  r.bandwidth = env.bandwidth;
  r.envelope_size = env.envelope_size;
  r.factor_nnz = 2 * static_cast<std::int64_t>(g.n) + 2 * (g.edge_count + r.fill_edges);
  r.nnz_ratio = nnz_ratio(r.fill_edges, pattern_nnz_full_diagonal(g));
  return r;
}

std::int64_t naive_fill_reference(const Graph& g, const Permutation& perm) {
  if (perm.size() != g.n)
    throw std::invalid_argument("naive_fill_reference: permutation size mismatch");
  if (g.n > 2048)
    throw std::invalid_argument("naive_fill_reference: n > 2048 guard exceeded");
  const std::size_t n = static_cast<std::size_t>(g.n);
  // boolean structure of the permuted matrix, positions as indices
  std::vector<std::uint8_t> b(n * n, 0);
  for (int u = 0; u < g.n; ++u) {
    const auto pu = static_cast<std::size_t>(perm.position_of(u));
    for (int v : g.neighbors(u)) {
      const auto pv = static_cast<std::size_t>(perm.position_of(v));
      b[pu * n + pv] = 1;
    }
  }
  std::int64_t fill = 0;
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < n; ++k) {
    active.clear();
    for (std::size_t i = k + 1; i < n; ++i)
      if (b[k * n + i]) active.push_back(i);
    for (std::size_t a = 0; a < active.size(); ++a)
      for (std::size_t c = a + 1; c < active.size(); ++c) {
        const std::size_t i = active[a], j = active[c];
        if (!b[i * n + j]) {
          b[i * n + j] = b[j * n + i] = 1;
          ++fill;
        }
      }
  }
  return fill;
}

std::int64_t pattern_nnz_full_diagonal(const Graph& g) {
  return static_cast<std::int64_t>(g.n) + 2 * g.edge_count;
}

double nnz_ratio(std::int64_t fill_edges, std::int64_t a_nnz) {
  if (a_nnz <= 0) throw std::invalid_argument("nnz_ratio: A.nnz must be positive");
  return 2.0 * static_cast<double>(fill_edges) / static_cast<double>(a_nnz);
}

}  // namespace fillin
