#include "fillin/laplacian.hpp"

#include <cmath>
#include <stdexcept>

namespace fillin {

void LaplacianMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<int>(x.size()) != mat.n || static_cast<int>(y.size()) != mat.n)
    throw std::invalid_argument("laplacian multiply: size mismatch");
  for (int i = 0; i < mat.n; ++i) {
    const auto start = mat.row_starts[static_cast<std::size_t>(i)];
    const auto r = mat.row(i);
    double acc = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k)
      acc += mat.values[static_cast<std::size_t>(start) + k] *
             x[static_cast<std::size_t>(r[k])];
    y[static_cast<std::size_t>(i)] = acc;
  }
}

Eigen::MatrixXd LaplacianMatrix::apply(const Eigen::MatrixXd& x) const {
  if (x.rows() != mat.n) throw std::invalid_argument("laplacian apply: size mismatch");
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(x.rows(), x.cols());
  for (int i = 0; i < mat.n; ++i) {
    const auto start = mat.row_starts[static_cast<std::size_t>(i)];
    const auto r = mat.row(i);
    for (std::size_t k = 0; k < r.size(); ++k)
      y.row(i) += mat.values[static_cast<std::size_t>(start) + k] * x.row(r[k]);
  }
  return y;
}

Eigen::MatrixXd LaplacianMatrix::dense() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(mat.n, mat.n);
  for (int i = 0; i < mat.n; ++i) {
    const auto start = mat.row_starts[static_cast<std::size_t>(i)];
    const auto r = mat.row(i);
    for (std::size_t k = 0; k < r.size(); ++k)
      d(i, r[k]) = mat.values[static_cast<std::size_t>(start) + k];
  }
  return d;
}

LaplacianMatrix laplacian(const Graph& g, LaplacianKind kind) {
  std::vector<std::pair<int, int>> entries;
  std::vector<double> values;
  entries.reserve(g.adjncy.size() + static_cast<std::size_t>(g.n));
  values.reserve(entries.capacity());
  for (int u = 0; u < g.n; ++u) {
    const int du = g.degree(u);
    entries.emplace_back(u, u);
    if (kind == LaplacianKind::Unnormalized) {
      values.push_back(static_cast<double>(du));
      for (int v : g.neighbors(u)) {
        entries.emplace_back(u, v);
        values.push_back(-1.0);
      }
    } else {
      values.push_back(du > 0 ? 1.0 : 0.0);
      for (int v : g.neighbors(u)) {
        entries.emplace_back(u, v);
        values.push_back(-1.0 / std::sqrt(static_cast<double>(du) *
                                          static_cast<double>(g.degree(v))));
      }
    }
  }
  LaplacianMatrix L;
  L.kind = kind;
  L.mat = pattern_from_entries(g.n, std::move(entries), std::move(values));
  return L;
}

}  // namespace fillin
