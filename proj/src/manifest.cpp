#include "curvlab/manifest.hpp"

#include <json.hpp>

namespace curvlab {

std::string WpRunManifest::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["config_hash"] = config_hash;
  j["seed"] = seed;
  auto coeffs = nlohmann::json::array();
  for (const auto& c : curve_coefficients) coeffs.push_back({c.real(), c.imag()});
  j["curve_coefficients"] = std::move(coeffs);
  j["refinement"] = refinement;
  j["mesh"] = {{"vertices", vertices}, {"edges", edges},       {"faces", faces},
               {"euler", euler},       {"delaunay_flips", flips},
               {"min_angle_deg", min_angle_deg}, {"max_angle_deg", max_angle_deg}};
  j["liouville"] = {{"total_area", total_area},
                    {"gauss_bonnet_error", gauss_bonnet_error},
                    {"residual", liouville_residual},
                    {"newton_iterations", newton_iterations},
                    {"curvature_recheck_max_dev", curvature_recheck_max_dev},
                    {"curvature_recheck_count", curvature_recheck_count}};
  j["basis"] = {{"hodge_wp_residual", hodge_wp_residual},
                {"harmonicity_residual", harmonicity_residual},
                {"gram_wp", gram_wp}};
  if (green_checked)
    j["green"] = {{"symmetry_residual", green_symmetry_residual}, {"min_entry", green_min_entry}};
  j["curvature"] = {{"hermitian_residual_cot", hermitian_residual_cot},
                    {"hermitian_residual_tan", hermitian_residual_tan},
                    {"duality_residual", duality_residual},
                    {"exchange_residual", exchange_residual},
                    {"alt_pairing_residual", alt_pairing_residual},
                    {"symmetrization_max_residual", symmetrization_max_residual},
                    {"symmetrization_trials", symmetrization_trials},
                    {"cot_nakano_eigenvalues", cot_nakano_eigenvalues},
                    {"cot_dual_nakano_eigenvalues", cot_dual_nakano_eigenvalues}};
  j["verdicts"] = {{"cot_nakano", cot_nakano_sign},
                   {"cot_dual_nakano", cot_dual_nakano_sign},
                   {"tan_nakano", tan_nakano_sign},
                   {"tan_dual_nakano", tan_dual_nakano_sign},
                   {"mesh_tol", mesh_tol},
                   {"match_theorem", verdicts_match_theorem}};
  return j.dump(1);
}

}  // namespace curvlab
