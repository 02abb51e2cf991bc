#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "curvlab/green.hpp"
#include "curvlab/manifest.hpp"
#include "curvlab/parallel.hpp"
#include "curvlab/report_io.hpp"
#include "curvlab/rng.hpp"
#include "curvlab/tensor_io.hpp"
#include "curvlab/wolpert.hpp"

namespace {

using namespace curvlab;

constexpr int kExitOk = 0;
constexpr int kExitVerdictMismatch = 1;
constexpr int kExitInputError = 2;

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::array<cplx, 7> parse_curve(const std::string& spec) {
  std::vector<double> vals;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    vals.push_back(std::stod(tok));
  }
  std::array<cplx, 7> coeff{};
  if (vals.size() == 7) {
    for (int k = 0; k < 7; ++k) coeff[k] = cplx{vals[k], 0.0};
  } else if (vals.size() == 14) {
    for (int k = 0; k < 7; ++k) coeff[k] = cplx{vals[2 * k], vals[2 * k + 1]};
  } else {
    throw input_error("--curve expects 7 reals or 14 comma-separated re,im pairs");
  }
  return coeff;
}

int cmd_models(const std::string& name, int n, uint64_t seed, const std::string& sign_class,
               const std::string& out_path, TensorFormat format) {
  CurvatureTensor R(1, 1, false);
  if (name == "fubini_study")
    R = model_fubini_study(n);
  else if (name == "complex_ball")
    R = model_complex_ball(n);
  else if (name == "flat")
    R = model_flat(n);
  else if (name == "random")
    R = random_kahler_tensor(seed, n, sign_class_from_string(sign_class));
  else
    throw input_error("unknown model: " + name);
  if (out_path.empty())
    write_tensor(std::cout, R, format);
  else
    write_tensor_file(out_path, R, format);
  return kExitOk;
}

int cmd_classify(const std::string& in_path, const SampleBudget& budget,
                 const std::string& out_path) {
  CurvatureTensor R = read_tensor_file(in_path);
  ClassificationReport rep =
      R.kahler() ? implication_audit(R, budget) : classify_bundle(R, budget);
  std::string json = report_to_json(rep);
  if (out_path.empty())
    std::cout << json << "\n";
  else {
    std::ofstream os(out_path);
    if (!os) throw input_error("cannot open report output: " + out_path);
    os << json << "\n";
  }
  if (!rep.chain_violations.empty()) {
    std::cerr << "chain violations:";
    for (const auto& v : rep.chain_violations) std::cerr << " " << v;
    std::cerr << "\n";
    return kExitVerdictMismatch;
  }
  return kExitOk;
}

int cmd_audit(uint64_t seed, long count, int n, const std::string& sign_class,
              const SampleBudget& budget, bool inject_defect, const std::string& out_path) {
  SignClass cls = sign_class_from_string(sign_class);
  std::vector<std::vector<std::string>> violations(count);
  std::vector<int> failed(count, 0);
  AuditOptions opts;
  opts.negate_operator_hook = inject_defect;
  parallel_for(static_cast<std::size_t>(count), [&](std::size_t i) {
    uint64_t state = seed + 0x9e37ULL * (i + 1);
    uint64_t tensor_seed = splitmix64(state);
    CurvatureTensor R = random_kahler_tensor(tensor_seed, n, cls);
    SampleBudget b = budget;
    b.seed = tensor_seed ^ 0xa5a5;
    ClassificationReport rep = implication_audit(R, b, opts);
    if (!rep.chain_violations.empty()) {
      violations[i] = rep.chain_violations;
      failed[i] = 1;
    }
  });
  long bad = 0;
  std::ostringstream summary;
  for (long i = 0; i < count; ++i) {
    if (!failed[i]) continue;
    ++bad;
    summary << "tensor " << i << " violates:";
    for (const auto& v : violations[i]) summary << " " << v;
    summary << "\n";
  }
  std::cout << "audited " << count << " " << sign_class << " tensors (n=" << n << "), "
            << bad << " with chain violations\n";
  if (bad) std::cout << summary.str();
  if (!out_path.empty()) {
    std::ofstream os(out_path);
    os << "{\"count\": " << count << ", \"violations\": " << bad << "}\n";
  }
  return bad == 0 ? kExitOk : kExitVerdictMismatch;
}

int cmd_wp(const std::array<cplx, 7>& coeff, int refine, double tol, uint64_t seed,
           const std::string& out_path, const std::string& config_line) {
  HyperellipticCurve curve = HyperellipticCurve::from_coefficients(coeff);
  SurfaceMesh mesh = build_mesh(curve, refine);
  HyperbolicStructure st = solve_liouville(mesh);
  DifferentialBasis basis = quadratic_differential_basis(curve, st);
  WPCurvature wp = wolpert_curvature(basis, st);

  WpRunManifest man;
  man.config_hash = std::to_string(fnv1a(config_line));
  man.seed = seed;
  man.curve_coefficients = coeff;
  man.refinement = refine;
  man.vertices = mesh.num_vertices;
  man.edges = mesh.num_edges;
  man.faces = static_cast<int>(mesh.faces.size());
  man.euler = mesh.euler_characteristic();
  man.flips = mesh.delaunay_flips;
  man.min_angle_deg = mesh.min_angle * 180.0 / std::numbers::pi;
  man.max_angle_deg = mesh.max_angle * 180.0 / std::numbers::pi;
  man.total_area = st.total_area;
  man.gauss_bonnet_error = std::abs(st.total_area - 4.0 * std::numbers::pi) / (4.0 * std::numbers::pi);
  man.liouville_residual = st.liouville_residual;
  man.newton_iterations = st.newton_iterations;
  auto K = gauss_curvature_recheck(st);
  double kdev = 0.0;
  int kcount = 0;
  for (double k : K) {
    if (std::isnan(k)) continue;
    kdev = std::max(kdev, std::abs(k + 1.0));
    ++kcount;
  }
  man.curvature_recheck_max_dev = kdev;
  man.curvature_recheck_count = kcount;
  man.hodge_wp_residual = basis.hodge_wp_residual;
  man.harmonicity_residual = basis.harmonicity_residual;
  man.gram_wp.assign(3, std::vector<std::array<double, 2>>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      man.gram_wp[a][b] = {basis.gram_wp(a, b).real(), basis.gram_wp(a, b).imag()};

  if (mesh.num_vertices <= 9000) {
    Eigen::MatrixXd G = green_kernel(st);
    man.green_checked = true;
    man.green_symmetry_residual = (G - G.transpose()).cwiseAbs().maxCoeff();
    man.green_min_entry = G.minCoeff();
    Rng rng(seed, 0x51);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      Eigen::Matrix3cd u;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) u(i, j) = rng.cgaussian();
      auto s = symmetrized_identity_check(basis, st, u, &G);
      worst = std::max(worst, s.relative_residual);
    }
    man.symmetrization_max_residual = worst;
    man.symmetrization_trials = 20;
  }

  man.hermitian_residual_cot = wp.hermitian_residual_cot;
  man.hermitian_residual_tan = wp.hermitian_residual_tan;
  man.duality_residual = wp.duality_residual;
  man.exchange_residual = wp.exchange_residual;
  man.alt_pairing_residual = wp.alt_pairing_residual;

  double mesh_tol = 1e-3 * wp.cotangent.max_norm();
  man.mesh_tol = mesh_tol;
  NotionVerdict cn = classify_eigen(Notion::kNakano, wp.cotangent, tol);
  NotionVerdict cd = classify_eigen(Notion::kDualNakano, wp.cotangent, mesh_tol);
  NotionVerdict tn = classify_eigen(Notion::kNakano, wp.tangent, mesh_tol);
  NotionVerdict td = classify_eigen(Notion::kDualNakano, wp.tangent, tol);
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es1(nakano_form(wp.cotangent));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(dual_nakano_form(wp.cotangent));
    man.cot_nakano_eigenvalues.assign(es1.eigenvalues().data(), es1.eigenvalues().data() + 9);
    man.cot_dual_nakano_eigenvalues.assign(es2.eigenvalues().data(), es2.eigenvalues().data() + 9);
  }
  man.cot_nakano_sign = to_string(cn.sign);
  man.cot_dual_nakano_sign = to_string(cd.sign);
  man.tan_nakano_sign = to_string(tn.sign);
  man.tan_dual_nakano_sign = to_string(td.sign);
  bool ok = cn.sign == SignVerdict::kPositive &&
            (cd.sign == SignVerdict::kNonnegative || cd.sign == SignVerdict::kPositive) &&
            td.sign == SignVerdict::kNegative &&
            (tn.sign == SignVerdict::kNonpositive || tn.sign == SignVerdict::kNegative);
  man.verdicts_match_theorem = ok;

  std::string base = out_path.empty() ? std::string("wp_run") : out_path;
  write_tensor_file(base + ".tensor", wp.cotangent);
  write_tensor_file(base + "_tangent.tensor", wp.tangent);
  {
    std::ofstream os(base + "_manifest.json");
    if (!os) throw input_error("cannot open manifest output");
    os << man.to_json() << "\n";
  }
  {
    SampleBudget b;
    b.samples = 2000;
    b.restarts = 8;
    b.tol = mesh_tol;
    b.seed = seed;
    ClassificationReport rep = implication_audit(wp.tangent, b);
    write_report_file(base + "_report.json", rep);
    if (!rep.chain_violations.empty()) ok = false;
  }
  std::cout << "wp: area=" << st.total_area << " liouville_residual=" << st.liouville_residual
            << " cot_nakano=" << man.cot_nakano_sign
            << " cot_dual_nakano=" << man.cot_dual_nakano_sign
            << " tan_dual_nakano=" << man.tan_dual_nakano_sign
            << " match=" << (ok ? "yes" : "no") << "\n";
  return ok ? kExitOk : kExitVerdictMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvlab: curvature positivity laboratory"};
  app.require_subcommand(1);

  std::string name = "fubini_study", sign_class = "unconstrained";
  int n = 2, refine = 3;
  uint64_t seed = 1;
  long count = 100;
  double tol = 1e-9;
  long samples = 10000;
  int restarts = 20;
  std::string in_path, out_path, curve_spec = "-1,0,0,0,0,0,1", format = "text";
  bool inject = false;

  auto add_budget = [&](CLI::App* c) {
    c->add_option("--tol", tol, "verdict tolerance (absolute)");
    c->add_option("--samples", samples, "random samples per sampled notion");
    c->add_option("--restarts", restarts, "gradient-refinement restarts");
    c->add_option("--seed", seed, "master seed");
  };

  auto* models = app.add_subcommand("models", "emit model curvature tensors");
  models->add_option("--name", name, "fubini_study | complex_ball | flat | random");
  models->add_option("--n", n, "base dimension");
  models->add_option("--seed", seed, "seed for random models");
  models->add_option("--sign-class", sign_class,
                     "unconstrained | semi-dual-nakano-negative | semi-nakano-negative");
  models->add_option("--out", out_path, "output tensor file (default stdout)");
  models->add_option("--format", format, "text | structured");

  auto* classify = app.add_subcommand("classify", "classify a tensor file");
  classify->add_option("--in", in_path, "input tensor file")->required();
  classify->add_option("--out", out_path, "report output (default stdout)");
  add_budget(classify);

  auto* audit = app.add_subcommand("audit", "fuzz the implication chain");
  audit->add_option("--count", count, "number of random tensors");
  audit->add_option("--n", n, "base dimension");
  audit->add_option("--sign-class", sign_class, "tensor sign class");
  audit->add_option("--out", out_path, "summary output file");
  audit->add_flag("--inject-sign-flip", inject,
                  "test-only: corrupt the curvature operator to prove the audit fires");
  add_budget(audit);

  auto* wp = app.add_subcommand("wp", "Weil-Petersson pipeline for a genus-2 curve");
  wp->add_option("--curve", curve_spec, "7 coefficients c0..c6 (reals or re,im pairs)");
  wp->add_option("--refine", refine, "refinement level 0..6");
  wp->add_option("--out", out_path, "output path prefix");
  add_budget(wp);

  CLI11_PARSE(app, argc, argv);

  try {
    if (models->parsed())
      return cmd_models(name, n, seed, sign_class, out_path,
                        format == "structured" ? TensorFormat::kStructured : TensorFormat::kText);
    SampleBudget budget{samples, restarts, tol, seed};
    if (classify->parsed()) return cmd_classify(in_path, budget, out_path);
    if (audit->parsed()) return cmd_audit(seed, count, n, sign_class, budget, inject, out_path);
    if (wp->parsed()) {
      std::ostringstream cfg;
      cfg << curve_spec << "|" << refine << "|" << tol << "|" << seed;
      return cmd_wp(parse_curve(curve_spec), refine, tol, seed, out_path, cfg.str());
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitVerdictMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
