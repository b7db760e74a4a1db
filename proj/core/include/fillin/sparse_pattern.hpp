#ifndef FILLIN_SPARSE_PATTERN_HPP
#define FILLIN_SPARSE_PATTERN_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fillin {

// Symmetric (or to-be-symmetrized) sparsity structure in compressed row
// layout. Columns are sorted ascending within each row and duplicates are
// not allowed; `values` is either empty or aligned with `col_ids`.
struct SparsePattern {
  int n = 0;
  std::vector<int> row_starts;  // n+1 offsets
  std::vector<int> col_ids;
  std::vector<double> values;   // optional

  std::int64_t nnz() const { return static_cast<std::int64_t>(col_ids.size()); }
  bool has_values() const { return !values.empty(); }

  std::span<const int> row(int i) const {
    return {col_ids.data() + row_starts[static_cast<std::size_t>(i)],
            col_ids.data() + row_starts[static_cast<std::size_t>(i) + 1]};
  }

  bool has_entry(int i, int j) const;
  bool is_symmetric() const;

  // Throws std::invalid_argument if the CSR invariants are violated.
  void validate() const;
};

// Builds a pattern from unsorted (row, col[, value]) entries; sorts rows and
// drops duplicates (first value wins).
SparsePattern pattern_from_entries(int n, std::vector<std::pair<int, int>> entries);
SparsePattern pattern_from_entries(
    int n, std::vector<std::pair<int, int>> entries, std::vector<double> entry_values);

// Structural union of p and its transpose. A pattern that is already
// symmetric is returned unchanged (values kept); otherwise values are
// dropped since the union has no aligned value semantics.
SparsePattern symmetrize_pattern(const SparsePattern& p);

}  // namespace fillin

#endif
