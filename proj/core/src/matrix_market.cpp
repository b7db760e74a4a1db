#include "fillin/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace fillin {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw MatrixMarketError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

SparsePattern parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) fail(1, "empty input");
  ++line_no;
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (lower(banner) != "%%matrixmarket" || lower(object) != "matrix")
    fail(line_no, "malformed MatrixMarket header");
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (format != "coordinate")
    fail(line_no, "unsupported format '" + format + "' (coordinate only)");
  const bool has_values = field == "real" || field == "integer";
  if (!has_values && field != "pattern")
    fail(line_no, "unsupported field '" + field + "'");
  const bool mirror = symmetry == "symmetric" || symmetry == "skew-symmetric";
  if (!mirror && symmetry != "general")
    fail(line_no, "unsupported symmetry '" + symmetry + "'");

  // size line, skipping comments and blanks
  long long rows = 0, cols = 0, count = 0;
  for (;;) {
    if (!std::getline(in, line)) fail(line_no + 1, "missing size line");
    ++line_no;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> count)) fail(line_no, "malformed size line");
    break;
  }
  if (rows != cols) fail(line_no, "non-square matrix unsupported");
  if (rows < 0 || count < 0) fail(line_no, "negative size");

  std::vector<std::pair<int, int>> entries;
  std::vector<double> values;
  entries.reserve(static_cast<std::size_t>(mirror ? 2 * count : count));
  if (has_values) values.reserve(entries.capacity());

  long long seen = 0;
  while (seen < count) {
    if (!std::getline(in, line)) fail(line_no + 1, "unexpected end of file");
    ++line_no;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    double v = 0.0;
    if (!(entry >> i >> j)) fail(line_no, "malformed coordinate entry");
    if (has_values && !(entry >> v)) fail(line_no, "missing value");
    if (i < 1 || i > rows || j < 1 || j > cols)
      fail(line_no, "index out of range");
    entries.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
    if (has_values) values.push_back(v);
    if (mirror && i != j) {
      entries.emplace_back(static_cast<int>(j - 1), static_cast<int>(i - 1));
      if (has_values) values.push_back(symmetry == "skew-symmetric" ? -v : v);
    }
    ++seen;
  }

  return has_values
             ? pattern_from_entries(static_cast<int>(rows), std::move(entries), std::move(values))
             : pattern_from_entries(static_cast<int>(rows), std::move(entries));
}

SparsePattern read_matrix_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatrixMarketError("cannot open '" + path + "'");
  try {
    return parse_matrix_market(in);
  } catch (const MatrixMarketError& e) {
    throw MatrixMarketError(path + ": " + e.what());
  }
}

void write_matrix_market(std::ostream& out, const SparsePattern& p) {
  const bool has_values = p.has_values();
  out << "%%MatrixMarket matrix coordinate "
      << (has_values ? "real" : "pattern") << " general\n";
  out << p.n << ' ' << p.n << ' ' << p.nnz() << '\n';
  char buf[64];
  for (int i = 0; i < p.n; ++i) {
    const auto start = p.row_starts[static_cast<std::size_t>(i)];
    const auto r = p.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      out << (i + 1) << ' ' << (r[k] + 1);
      if (has_values) {
        std::snprintf(buf, sizeof buf, " %.17g",
                      p.values[static_cast<std::size_t>(start) + k]);
        out << buf;
      }
      out << '\n';
    }
  }
}

void write_matrix_market_file(const std::string& path, const SparsePattern& p) {
  std::ofstream out(path);
  if (!out) throw MatrixMarketError("cannot open '" + path + "' for writing");
  write_matrix_market(out, p);
  if (!out) throw MatrixMarketError("write failed for '" + path + "'");
}

}  // namespace fillin
