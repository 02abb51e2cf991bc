#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "curvlab/types.hpp"

namespace curvlab {

/// Pointwise curvature tensor R_{i jbar alpha betabar} of a Hermitian
/// holomorphic bundle (fiber rank r) over an n-dimensional base, stored in
/// an adapted frame where the metric is the identity at the point.
/// Indices are 0-based in memory; file formats are 1-based.
class CurvatureTensor {
 public:
  CurvatureTensor(int n, int r, bool kahler);

  int n() const { return n_; }
  int r() const { return r_; }
  bool kahler() const { return kahler_; }

  cplx operator()(int i, int j, int a, int b) const { return e_[idx(i, j, a, b)]; }
  void set(int i, int j, int a, int b, cplx v) { e_[idx(i, j, a, b)] = v; }
  void add(int i, int j, int a, int b, cplx v) { e_[idx(i, j, a, b)] += v; }

  const std::vector<cplx>& entries() const { return e_; }
  std::vector<cplx>& entries() { return e_; }

  std::size_t idx(int i, int j, int a, int b) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * r_ + a) * r_ + b;
  }

  double max_norm() const;

  /// Copies each Hermitian pair from its canonical representative so the
  /// symmetry R_{ij,ab} = conj(R_{ji,ba}) holds exactly.
  void canonicalize_hermitian();
  /// For kahler tensors: exact first-Bianchi symmetrization by orbit copy.
  void canonicalize_kahler();

  double hermitian_residual() const;
  double kahler_residual() const;

 private:
  int n_, r_;
  bool kahler_;
  std::vector<cplx> e_;
};

struct SymmetryViolation {
  std::string kind;  // "hermitian", "kahler-13", "kahler-24", "diagonal-imag"
  int i, j, a, b;
  double magnitude;
};

/// Empty iff Hermitian (and, when flagged, Kahler) symmetries hold within
/// tol relative to the max-norm.
std::vector<SymmetryViolation> validate(const CurvatureTensor& R, double tol = 1e-12);

/// Metric jet at a point: h, dh_i = dh/dz^i, ddh_ij = d^2 h / dz^i dzbar^j.
/// ddh must satisfy ddh_ji = adjoint(ddh_ij); h must be positive definite.
struct HermitianMetricJet {
  int n = 0, r = 0;
  Eigen::MatrixXcd h;
  std::vector<Eigen::MatrixXcd> dh;                // size n, each r x r
  std::vector<std::vector<Eigen::MatrixXcd>> ddh;  // n x n, each r x r

  void check() const;  // throws input_error on violated invariants
};

/// Chern curvature from a metric jet:
///   R_{ij,ab} = -ddh_ij(a,b) + sum_gd h^{gd} dh_i(a,d) conj(dh_j(b,g)).
CurvatureTensor curvature_from_jet(const HermitianMetricJet& jet);

/// delta-normalized model tensors (constant holomorphic sectional curvature
/// at a point): R_{ijkl} = d_ij d_kl + d_il d_kj, and its negation.
CurvatureTensor model_fubini_study(int n);
CurvatureTensor model_complex_ball(int n);
CurvatureTensor model_flat(int n);

enum class SignClass { kUnconstrained, kSemiDualNakanoNegative, kSemiNakanoNegative };

SignClass sign_class_from_string(const std::string& s);
std::string to_string(SignClass c);

/// Deterministic random Kahler tensor, normalized to max-norm 1.
/// Constrained classes are built as Gram/kernel sums, so membership is
/// guaranteed by construction rather than tested after the fact.
CurvatureTensor random_kahler_tensor(uint64_t seed, int n, SignClass sign_class);

/// Curvature of the rank-s subbundle spanned by the first s frame vectors,
/// plus the second-fundamental-form correction term (Gram form, Nakano-PSD).
/// Requires the adapted frame h(p) = I. R_S = R_E|_S - correction.
struct SubbundleResult {
  CurvatureTensor sub;
  CurvatureTensor correction;
};
SubbundleResult subbundle_curvature(const CurvatureTensor& R_E, const HermitianMetricJet& jet, int s);

/// Dual-bundle curvature in the dual frame: R*_{ij,ab} = -R_{ij,ba}.
CurvatureTensor dual_tensor(const CurvatureTensor& R);

CurvatureTensor scale(const CurvatureTensor& R, double factor);

/// Congruence transform to a new frame: base e'_i = sum_p U(i,p) e_p and
/// fiber f'_a = sum_g V(a,g) f_g.
CurvatureTensor transform_frame(const CurvatureTensor& R, const Eigen::MatrixXcd& U,
                                const Eigen::MatrixXcd& V);

}  // namespace curvlab
