#pragma once

#include <array>
#include <string>
#include <vector>

#include "curvlab/types.hpp"

namespace curvlab {

/// Replayable record of one WP pipeline run: configuration, mesh and solver
/// diagnostics, the identities the discretization is supposed to satisfy,
/// and the sign verdicts.
struct WpRunManifest {
  std::string version = kVersion;
  std::string config_hash;
  uint64_t seed = 0;
  std::array<cplx, 7> curve_coefficients{};
  int refinement = 0;

  int vertices = 0, edges = 0, faces = 0, euler = 0, flips = 0;
  double min_angle_deg = 0.0, max_angle_deg = 0.0;

  double total_area = 0.0, gauss_bonnet_error = 0.0;
  double liouville_residual = 0.0;
  int newton_iterations = 0;
  double curvature_recheck_max_dev = 0.0;
  int curvature_recheck_count = 0;

  double hodge_wp_residual = 0.0;
  std::array<double, 3> harmonicity_residual{};
  std::vector<std::vector<std::array<double, 2>>> gram_wp;  // 3x3 (re, im)

  bool green_checked = false;
  double green_symmetry_residual = 0.0;
  double green_min_entry = 0.0;

  double hermitian_residual_cot = 0.0, hermitian_residual_tan = 0.0;
  double duality_residual = 0.0, exchange_residual = 0.0, alt_pairing_residual = 0.0;
  double symmetrization_max_residual = 0.0;
  int symmetrization_trials = 0;

  std::vector<double> cot_nakano_eigenvalues;
  std::vector<double> cot_dual_nakano_eigenvalues;
  std::string cot_nakano_sign, cot_dual_nakano_sign;
  std::string tan_nakano_sign, tan_dual_nakano_sign;
  double mesh_tol = 0.0;
  bool verdicts_match_theorem = false;

  std::string to_json() const;
};

}  // namespace curvlab
