#ifndef FILLIN_SRC_ELIM_BACKEND_HPP
#define FILLIN_SRC_ELIM_BACKEND_HPP

// Internal elimination-game state shared by elimination_fill and
// min_degree_order. Two set representations with the same contract:
// bitset rows for moderate n, hash sets beyond.

#include <bit>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "fillin/graph.hpp"

namespace fillin::detail {

inline constexpr int kBitsetMaxNodes = 16384;

class BitsetElimGraph {
 public:
  explicit BitsetElimGraph(const Graph& g)
      : n_(g.n), words_((static_cast<std::size_t>(g.n) + 63) / 64),
        rows_(static_cast<std::size_t>(g.n) * words_, 0),
        degree_(static_cast<std::size_t>(g.n), 0),
        alive_(static_cast<std::size_t>(g.n), 1) {
    for (int u = 0; u < g.n; ++u) {
      degree_[static_cast<std::size_t>(u)] = g.degree(u);
      for (int v : g.neighbors(u)) set_bit(u, v);
    }
  }

  int degree(int u) const { return degree_[static_cast<std::size_t>(u)]; }
  bool alive(int u) const { return alive_[static_cast<std::size_t>(u)] != 0; }

  // Removes u and pairwise connects its remaining neighbors; returns the
  // number of new undirected edges.
  std::int64_t eliminate(int u) {
    alive_[static_cast<std::size_t>(u)] = 0;
    scratch_.clear();
    const std::uint64_t* row = row_ptr(u);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const int v = static_cast<int>(w * 64) + std::countr_zero(bits);
        bits &= bits - 1;
        scratch_.push_back(v);
      }
    }
    // detach u
    for (int v : scratch_) {
      clear_bit(v, u);
      --degree_[static_cast<std::size_t>(v)];
    }
    if (scratch_.size() < 2) return 0;
    // clique the neighborhood; every new bit appears once per endpoint
    mask_.assign(words_, 0);
    for (int v : scratch_)
      mask_[static_cast<std::size_t>(v) / 64] |= std::uint64_t(1) << (v % 64);
    std::int64_t new_endpoints = 0;
    for (int v : scratch_) {
      std::uint64_t* rv = row_ptr(v);
      const std::size_t self_word = static_cast<std::size_t>(v) / 64;
      const std::uint64_t self_bit = std::uint64_t(1) << (v % 64);
      int added = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t want = mask_[w];
        if (w == self_word) want &= ~self_bit;
        const std::uint64_t fresh = want & ~rv[w];
        if (fresh) {
          rv[w] |= fresh;
          added += std::popcount(fresh);
        }
      }
      degree_[static_cast<std::size_t>(v)] += added;
      new_endpoints += added;
    }
    return new_endpoints / 2;
  }

 private:
  std::uint64_t* row_ptr(int u) { return rows_.data() + static_cast<std::size_t>(u) * words_; }
  const std::uint64_t* row_ptr(int u) const {
    return rows_.data() + static_cast<std::size_t>(u) * words_;
  }
  void set_bit(int u, int v) {
    row_ptr(u)[static_cast<std::size_t>(v) / 64] |= std::uint64_t(1) << (v % 64);
  }
  void clear_bit(int u, int v) {
    row_ptr(u)[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t(1) << (v % 64));
  }

  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degree_;
  std::vector<char> alive_;
  std::vector<int> scratch_;
  std::vector<std::uint64_t> mask_;
};

class HashElimGraph {
 public:
  explicit HashElimGraph(const Graph& g)
      : adj_(static_cast<std::size_t>(g.n)), alive_(static_cast<std::size_t>(g.n), 1) {
    for (int u = 0; u < g.n; ++u) {
      auto& s = adj_[static_cast<std::size_t>(u)];
      s.reserve(static_cast<std::size_t>(g.degree(u)) * 2);
      for (int v : g.neighbors(u)) s.insert(v);
    }
  }

  int degree(int u) const { return static_cast<int>(adj_[static_cast<std::size_t>(u)].size()); }
  bool alive(int u) const { return alive_[static_cast<std::size_t>(u)] != 0; }

  std::int64_t eliminate(int u) {
    alive_[static_cast<std::size_t>(u)] = 0;
    scratch_.assign(adj_[static_cast<std::size_t>(u)].begin(),
                    adj_[static_cast<std::size_t>(u)].end());
    for (int v : scratch_) adj_[static_cast<std::size_t>(v)].erase(u);
    std::int64_t added = 0;
    for (std::size_t a = 0; a < scratch_.size(); ++a) {
      auto& sa = adj_[static_cast<std::size_t>(scratch_[a])];
      for (std::size_t b = a + 1; b < scratch_.size(); ++b) {
        if (sa.insert(scratch_[b]).second) {
          adj_[static_cast<std::size_t>(scratch_[b])].insert(scratch_[a]);
          ++added;
        }
      }
    }
    return added;
  }

 private:
  std::vector<std::unordered_set<int>> adj_;
  std::vector<char> alive_;
  std::vector<int> scratch_;
};

}  // namespace fillin::detail

#endif
