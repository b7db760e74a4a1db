#ifndef FILLIN_LAPLACIAN_HPP
#define FILLIN_LAPLACIAN_HPP

#include <Eigen/Core>
#include <span>

#include "fillin/graph.hpp"
#include "fillin/sparse_pattern.hpp"

namespace fillin {

enum class LaplacianKind { Unnormalized, SymmetricNormalized };

// L = D - A, or its symmetric normalization D^{-1/2} L D^{-1/2}. Isolated
// nodes carry a zero diagonal in both kinds.
struct LaplacianMatrix {
  LaplacianKind kind = LaplacianKind::Unnormalized;
  SparsePattern mat;  // values present

  int n() const { return mat.n; }

  // y = L x
  void multiply(std::span<const double> x, std::span<double> y) const;
  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;
  Eigen::MatrixXd dense() const;
};

LaplacianMatrix laplacian(const Graph& g, LaplacianKind kind);

}  // namespace fillin

#endif
