#ifndef FILLIN_GRAPH_HPP
#define FILLIN_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fillin {

struct SparsePattern;

// Undirected adjacency view in CSR layout. No self loops; neighbor lists
// are sorted and mutually consistent. Immutable after construction.
struct Graph {
  int n = 0;
  std::vector<int> xadj;    // n+1 offsets into adjncy
  std::vector<int> adjncy;  // each edge stored in both directions
  std::int64_t edge_count = 0;

  std::span<const int> neighbors(int u) const {
    return {adjncy.data() + xadj[static_cast<std::size_t>(u)],
            adjncy.data() + xadj[static_cast<std::size_t>(u) + 1]};
  }
  int degree(int u) const {
    return xadj[static_cast<std::size_t>(u) + 1] - xadj[static_cast<std::size_t>(u)];
  }
  bool has_edge(int u, int v) const;
};

// Builds a graph from undirected edges (u, v); duplicates and self loops
// are rejected.
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Drops the diagonal and interprets each off-diagonal pair as one edge.
// Throws if the pattern is not symmetric (symmetrize_pattern first).
Graph pattern_to_graph(const SparsePattern& p);

// Graph back to a pattern, with or without the full diagonal.
SparsePattern graph_to_pattern(const Graph& g, bool with_diagonal = true);

// Connected components, each sorted ascending, ordered by smallest node id.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Subgraph induced by `nodes` (must be sorted ascending); local ids follow
// the order of `nodes`, so relative node order is preserved.
Graph induced_subgraph(const Graph& g, std::span<const int> nodes);

}  // namespace fillin

#endif
