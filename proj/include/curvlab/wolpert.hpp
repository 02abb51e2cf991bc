#pragma once

#include <Eigen/Dense>

#include "curvlab/differentials.hpp"
#include "curvlab/green.hpp"
#include "curvlab/tensor.hpp"

namespace curvlab {

/// Weil-Petersson curvature at the moduli point, in the WP-orthonormal
/// frame. `cotangent` holds R_{ij,ab} = int G(th_i.th_a-bar)(th_j-bar.th_b)
/// + int G(th_i.th_j-bar)(th_a-bar.th_b) for the Hodge metric on the
/// cotangent bundle; `tangent` holds the tangent-side tensor
/// -int (e_ij f_kl + e_il f_kj). The two are exact duals on the shared
/// discretization; `duality_residual` records the measured gap.
struct WPCurvature {
  CurvatureTensor cotangent{3, 3, false};
  CurvatureTensor tangent{3, 3, true};
  Eigen::Matrix3cd gram_wp;
  Eigen::Matrix3cd gram_hodge;
  double hermitian_residual_cot = 0.0;
  double hermitian_residual_tan = 0.0;
  double duality_residual = 0.0;
  // measured, not asserted: the exchange R_{ij,ab} =? R_{aj,ib} and the
  // conjugate placement of the pointwise pairings in the integrands
  double exchange_residual = 0.0;
  double alt_pairing_residual = 0.0;
};

WPCurvature wolpert_curvature(const DifferentialBasis& basis, const HyperbolicStructure& structure);

/// Independent assembly of the tangent-side tensor (own Green applications,
/// own quadrature loop), in the same WP-orthonormal frame.
CurvatureTensor tangent_curvature(const DifferentialBasis& basis, const HyperbolicStructure& structure);

struct SymmetrizedIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double relative_residual = 0.0;
};

/// Dual-Nakano contraction of the assembled cotangent tensor against u,
/// versus the Green-kernel symmetrization 1/2 int int G |H(w,z)+H(z,w)|^2.
/// Pass the dense kernel to evaluate the right side through it; otherwise
/// the sparse resolvent is used (same operator).
SymmetrizedIdentity symmetrized_identity_check(const DifferentialBasis& basis,
                                               const HyperbolicStructure& structure,
                                               const Eigen::Matrix3cd& u,
                                               const Eigen::MatrixXd* dense_kernel = nullptr);

}  // namespace curvlab
