#pragma once

#include <vector>

#include "curvlab/mesh.hpp"

namespace curvlab {

/// Conformal factor u per vertex making the background metric hyperbolic:
/// the discrete Liouville equation (L u)_v + Omega_v + A_v e^{2 u_v} = 0
/// (L the cotangent stiffness, Omega the angle defect, A the lumped area)
/// solved by damped Newton. Its row sums force total hyperbolic area
/// -2 pi chi = 4 pi identically.
struct HyperbolicStructure {
  const SurfaceMesh* mesh = nullptr;
  std::vector<double> u;
  std::vector<double> area;  // hyperbolic lumped vertex areas A_v e^{2u_v}
  double total_area = 0.0;
  double liouville_residual = 0.0;  // max_v |F_v| / (A_v (1 + e^{2u_v}))
  int newton_iterations = 0;
  std::vector<double> residual_history;
};

HyperbolicStructure solve_liouville(const SurfaceMesh& mesh);

/// Independent curvature re-evaluation: conformally scale the PL edge
/// lengths by e^{(u_i+u_j)/2}, recompute angle defects, and average the
/// defect measure over the closed 2-ring. NaN where the stencil touches a
/// non-ordinary vertex.
std::vector<double> gauss_curvature_recheck(const HyperbolicStructure& structure);

}  // namespace curvlab
