#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "curvlab/hyperbolic.hpp"

namespace curvlab {

/// Resolvent (Delta_0 + 1)^{-1} of the positive hyperbolic Laplacian
/// Delta_0 = dbar* dbar = -(2/rho) d^2/dz dzbar on functions, discretized as
/// u = S^{-1} (A f) with S = L/2 + diag(A), A the hyperbolic vertex areas.
/// Its kernel matrix is S^{-1}: symmetric, and entrywise positive because
/// the intrinsic-Delaunay stiffness makes S an M-matrix.
class GreenOperator {
 public:
  explicit GreenOperator(const HyperbolicStructure& structure);

  Eigen::VectorXd apply(const Eigen::VectorXd& f) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& f) const;

  const SurfaceMesh* mesh() const { return mesh_; }
  const Eigen::VectorXd& areas() const { return areas_; }
  /// Solves S x = b directly (kernel application without the area weight).
  Eigen::VectorXd solve_raw(const Eigen::VectorXd& b) const;

 private:
  const SurfaceMesh* mesh_;
  Eigen::VectorXd areas_;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt_;
};

Eigen::VectorXcd green_apply(const HyperbolicStructure& structure, const Eigen::VectorXcd& f);

/// Dense kernel matrix G = S^{-1}; [G_op f](v) = sum_w G(v,w) f(w) A_w.
Eigen::MatrixXd green_kernel(const HyperbolicStructure& structure);

}  // namespace curvlab
