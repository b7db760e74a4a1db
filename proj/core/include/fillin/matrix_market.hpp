#ifndef FILLIN_MATRIX_MARKET_HPP
#define FILLIN_MATRIX_MARKET_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fillin/sparse_pattern.hpp"

namespace fillin {

// Parse failure; the message names the offending 1-based line.
class MatrixMarketError : public std::runtime_error {
 public:
  explicit MatrixMarketError(const std::string& what) : std::runtime_error(what) {}
};

// Reads a Matrix Market coordinate file (1-based on disk) into a 0-based
// pattern. Symmetric/skew-symmetric storage is expanded by mirroring the
// stored triangle. Explicit zeros stay structural. Square matrices only;
// fields real/integer/pattern are accepted.
SparsePattern parse_matrix_market(std::istream& in);
SparsePattern read_matrix_market_file(const std::string& path);

// Coordinate output; round-trips through parse_matrix_market to an
// identical pattern.
void write_matrix_market(std::ostream& out, const SparsePattern& p);
void write_matrix_market_file(const std::string& path, const SparsePattern& p);

}  // namespace fillin

#endif
