#include "fillin/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fillin/sparse_pattern.hpp"

namespace fillin {

bool Graph::has_edge(int u, int v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("graph: negative size");
  Graph g;
  g.n = n;
  g.xadj.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self loop");
    ++g.xadj[static_cast<std::size_t>(u) + 1];
    ++g.xadj[static_cast<std::size_t>(v) + 1];
  }
  for (int i = 0; i < n; ++i)
    g.xadj[static_cast<std::size_t>(i) + 1] += g.xadj[static_cast<std::size_t>(i)];
  g.adjncy.resize(static_cast<std::size_t>(g.xadj.back()));
  std::vector<int> cursor(g.xadj.begin(), g.xadj.end() - 1);
  for (auto [u, v] : edges) {
    g.adjncy[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
    g.adjncy[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
  }
  for (int u = 0; u < n; ++u) {
    auto first = g.adjncy.begin() + g.xadj[static_cast<std::size_t>(u)];
    auto last = g.adjncy.begin() + g.xadj[static_cast<std::size_t>(u) + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last)
      throw std::invalid_argument("graph: duplicate edge");
  }
  g.edge_count = static_cast<std::int64_t>(edges.size());
  return g;
}

Graph pattern_to_graph(const SparsePattern& p) {
  if (!p.is_symmetric())
    throw std::invalid_argument(
        "pattern_to_graph: pattern is not symmetric; apply symmetrize_pattern first");
  Graph g;
  g.n = p.n;
  g.xadj.assign(static_cast<std::size_t>(p.n) + 1, 0);
  for (int i = 0; i < p.n; ++i) {
    int deg = 0;
    for (int j : p.row(i))
      if (j != i) ++deg;
    g.xadj[static_cast<std::size_t>(i) + 1] = g.xadj[static_cast<std::size_t>(i)] + deg;
  }
  g.adjncy.reserve(static_cast<std::size_t>(g.xadj.back()));
  for (int i = 0; i < p.n; ++i) {
    for (int j : p.row(i))
      if (j != i) g.adjncy.push_back(j);
  }
  g.edge_count = static_cast<std::int64_t>(g.adjncy.size()) / 2;
  return g;
}

SparsePattern graph_to_pattern(const Graph& g, bool with_diagonal) {
  SparsePattern p;
  p.n = g.n;
  p.row_starts.assign(static_cast<std::size_t>(g.n) + 1, 0);
  p.col_ids.reserve(g.adjncy.size() + (with_diagonal ? static_cast<std::size_t>(g.n) : 0));
  for (int u = 0; u < g.n; ++u) {
    const auto nb = g.neighbors(u);
    std::size_t k = 0;
    for (; k < nb.size() && nb[k] < u; ++k) p.col_ids.push_back(nb[k]);
    if (with_diagonal) p.col_ids.push_back(u);
    for (; k < nb.size(); ++k) p.col_ids.push_back(nb[k]);
    p.row_starts[static_cast<std::size_t>(u) + 1] = static_cast<int>(p.col_ids.size());
  }
  return p;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> components;
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp;
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

Graph induced_subgraph(const Graph& g, std::span<const int> nodes) {
  std::vector<int> global_to_local(static_cast<std::size_t>(g.n), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k > 0 && nodes[k] <= nodes[k - 1])
      throw std::invalid_argument("induced_subgraph: nodes must be sorted ascending");
    global_to_local[static_cast<std::size_t>(nodes[k])] = static_cast<int>(k);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (int v : g.neighbors(nodes[k])) {
      const int lv = global_to_local[static_cast<std::size_t>(v)];
      if (lv > static_cast<int>(k)) edges.emplace_back(static_cast<int>(k), lv);
    }
  }
  return graph_from_edges(static_cast<int>(nodes.size()), edges);
}

}  // namespace fillin
