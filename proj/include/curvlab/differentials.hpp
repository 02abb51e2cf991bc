#pragma once

#include <Eigen/Dense>
#include <array>

#include "curvlab/hyperbolic.hpp"

namespace curvlab {

/// The three quadratic differentials sigma_a = x^{a-1} (dx)^2 / y^2 sampled
/// per vertex in the vertex's own chart, their harmonic Beltrami images
/// theta_a = T(sigma_a) = conj(f_a)/rho, and the Weil-Petersson / Hodge Gram
/// matrices (assembled on the same vertex-lumped quadrature).
struct DifferentialBasis {
  const SurfaceMesh* mesh = nullptr;
  Eigen::MatrixXcd f;      // V x 3 quadratic-differential coefficients
  Eigen::MatrixXcd theta;  // V x 3 Beltrami coefficients (vertex gauge)
  Eigen::VectorXd rho;     // hyperbolic conformal factor in the vertex chart
  Eigen::Matrix3cd gram_wp;
  Eigen::Matrix3cd gram_hodge;
  double hodge_wp_residual = 0.0;  // max |G_H(a,b) - G_WP(b,a)| / |G_WP|
  std::array<double, 3> harmonicity_residual{};  // L2 norm of dbar* theta_a
};

DifferentialBasis quadratic_differential_basis(const HyperellipticCurve& curve,
                                               const HyperbolicStructure& structure);

}  // namespace curvlab
