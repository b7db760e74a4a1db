#include "fillin/sparse_pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fillin {

bool SparsePattern::has_entry(int i, int j) const {
  const auto r = row(i);
  return std::binary_search(r.begin(), r.end(), j);
}

bool SparsePattern::is_symmetric() const {
  for (int i = 0; i < n; ++i) {
    for (int j : row(i)) {
      if (j != i && !has_entry(j, i)) return false;
    }
  }
  return true;
}

void SparsePattern::validate() const {
  if (n < 0) throw std::invalid_argument("pattern: negative dimension");
  if (row_starts.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("pattern: row_starts must have n+1 entries");
  if (row_starts.front() != 0 ||
      row_starts.back() != static_cast<int>(col_ids.size()))
    throw std::invalid_argument("pattern: row_starts endpoints inconsistent");
  if (!values.empty() && values.size() != col_ids.size())
    throw std::invalid_argument("pattern: values not aligned with col_ids");
  for (int i = 0; i < n; ++i) {
    if (row_starts[static_cast<std::size_t>(i)] > row_starts[static_cast<std::size_t>(i) + 1])
      throw std::invalid_argument("pattern: row_starts not non-decreasing");
    const auto r = row(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] < 0 || r[k] >= n)
        throw std::invalid_argument("pattern: column index out of range in row " +
                                    std::to_string(i));
      if (k > 0 && r[k] <= r[k - 1])
        throw std::invalid_argument("pattern: row " + std::to_string(i) +
                                    " not sorted or has duplicates");
    }
  }
}

namespace {

struct Entry {
  int row;
  int col;
  double value;
  bool has_value;
};

SparsePattern build(int n, std::vector<Entry> entries) {
  if (n < 0) throw std::invalid_argument("pattern: negative dimension");
  for (const Entry& e : entries) {
    if (e.row < 0 || e.row >= n || e.col < 0 || e.col >= n)
      throw std::invalid_argument("pattern: entry index out of range");
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  // stable sort keeps the first of each duplicate group in front
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) {
                              return a.row == b.row && a.col == b.col;
                            }),
                entries.end());

  SparsePattern p;
  p.n = n;
  p.row_starts.assign(static_cast<std::size_t>(n) + 1, 0);
  p.col_ids.reserve(entries.size());
  const bool with_values = !entries.empty() && entries.front().has_value;
  if (with_values) p.values.reserve(entries.size());
  for (const Entry& e : entries) {
    ++p.row_starts[static_cast<std::size_t>(e.row) + 1];
    p.col_ids.push_back(e.col);
    if (with_values) p.values.push_back(e.value);
  }
  for (int i = 0; i < n; ++i)
    p.row_starts[static_cast<std::size_t>(i) + 1] += p.row_starts[static_cast<std::size_t>(i)];
  return p;
}

}  // namespace

SparsePattern pattern_from_entries(int n, std::vector<std::pair<int, int>> entries) {
  std::vector<Entry> es;
  es.reserve(entries.size());
  for (auto [i, j] : entries) es.push_back({i, j, 0.0, false});
  return build(n, std::move(es));
}

SparsePattern pattern_from_entries(int n, std::vector<std::pair<int, int>> entries,
                                   std::vector<double> entry_values) {
  if (entries.size() != entry_values.size())
    throw std::invalid_argument("pattern: entries and values size mismatch");
  std::vector<Entry> es;
  es.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k)
    es.push_back({entries[k].first, entries[k].second, entry_values[k], true});
  return build(n, std::move(es));
}

SparsePattern symmetrize_pattern(const SparsePattern& p) {
  if (p.is_symmetric()) return p;
  std::vector<std::pair<int, int>> entries;
  entries.reserve(static_cast<std::size_t>(p.nnz()) * 2);
  for (int i = 0; i < p.n; ++i) {
    for (int j : p.row(i)) {
      entries.emplace_back(i, j);
      if (i != j) entries.emplace_back(j, i);
    }
  }
  return pattern_from_entries(p.n, std::move(entries));
}

}  // namespace fillin
