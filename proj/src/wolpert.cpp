#include "curvlab/wolpert.hpp"

#include <cmath>

namespace curvlab {

namespace {

void require_same_mesh(const DifferentialBasis& basis, const HyperbolicStructure& st) {
  if (basis.mesh == nullptr || st.mesh == nullptr || basis.mesh != st.mesh)
    throw input_error("basis and hyperbolic structure live on different meshes");
}

// theta in the WP-orthonormal frame: t' = L^{-1} t with gram = L L^H
Eigen::MatrixXcd orthonormal_theta(const DifferentialBasis& basis) {
  Eigen::LLT<Eigen::Matrix3cd> llt(basis.gram_wp);
  if (llt.info() != Eigen::Success)
    throw numeric_error("WP Gram matrix is not positive definite");
  Eigen::Matrix3cd Linv = llt.matrixL().solve(Eigen::Matrix3cd::Identity());
  return basis.theta * Linv.transpose();  // t'_i(v) = sum_k Linv(i,k) t_k(v)
}

// G_op applied to every pairing P_ia = t_i conj(t_a); P_ai = conj(P_ia)
void green_pairings(const GreenOperator& op, const Eigen::MatrixXcd& t,
                    std::array<std::array<Eigen::VectorXcd, 3>, 3>& P,
                    std::array<std::array<Eigen::VectorXcd, 3>, 3>& GP) {
  const int nv = static_cast<int>(t.rows());
  for (int i = 0; i < 3; ++i)
    for (int a = i; a < 3; ++a) {
      Eigen::VectorXcd p(nv);
      for (int v = 0; v < nv; ++v) p[v] = t(v, i) * std::conj(t(v, a));
      P[i][a] = p;
      GP[i][a] = op.apply(p);
      if (a != i) {
        P[a][i] = p.conjugate();
        GP[a][i] = GP[i][a].conjugate();
      }
    }
}

}  // namespace

WPCurvature wolpert_curvature(const DifferentialBasis& basis, const HyperbolicStructure& st) {
  require_same_mesh(basis, st);
  WPCurvature out;
  out.gram_wp = basis.gram_wp;
  out.gram_hodge = basis.gram_hodge;

  Eigen::MatrixXcd t = orthonormal_theta(basis);
  GreenOperator op(st);
  const int nv = static_cast<int>(t.rows());
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(st.area.data(), nv);

  std::array<std::array<Eigen::VectorXcd, 3>, 3> P, GP;
  green_pairings(op, t, P, GP);

  CurvatureTensor cot(3, 3, false);
  CurvatureTensor alt(3, 3, false);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          cplx v1{}, v2{}, a1{}, a2{};
          for (int x = 0; x < nv; ++x) {
            v1 += GP[i][a][x] * std::conj(P[j][b][x]) * w[x];
            v2 += GP[i][j][x] * std::conj(P[a][b][x]) * w[x];
            // alternative conjugate placement of the pointwise pairings
            a1 += GP[a][i][x] * P[j][b][x] * w[x];
            a2 += GP[j][i][x] * P[a][b][x] * w[x];
          }
          cot.set(i, j, a, b, v1 + v2);
          alt.set(i, j, a, b, a1 + a2);
        }
  out.hermitian_residual_cot = cot.hermitian_residual();
  double mx = std::max(cot.max_norm(), 1e-300);
  double altres = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          altres = std::max(altres, std::abs(cot(i, j, a, b) - alt(i, j, a, b)));
  out.alt_pairing_residual = altres / mx;
  double exch = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          exch = std::max(exch, std::abs(cot(i, j, a, b) - cot(a, j, i, b)));
  out.exchange_residual = exch / mx;
  cot.canonicalize_hermitian();
  out.cotangent = cot;

  CurvatureTensor tan(3, 3, true);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          cplx v{};
          for (int x = 0; x < nv; ++x)
            v -= (GP[i][j][x] * P[k][l][x] + GP[i][l][x] * P[k][j][x]) * w[x];
          tan.set(i, j, k, l, v);
        }
  out.hermitian_residual_tan = tan.hermitian_residual();
  double dres = 0.0;
  CurvatureTensor dual_tan = dual_tensor(tan);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          dres = std::max(dres, std::abs(out.cotangent(i, j, a, b) - dual_tan(i, j, a, b)));
  out.duality_residual = dres / mx;
  tan.canonicalize_kahler();
  out.tangent = tan;
  return out;
}

CurvatureTensor tangent_curvature(const DifferentialBasis& basis, const HyperbolicStructure& st) {
  require_same_mesh(basis, st);
  Eigen::MatrixXcd t = orthonormal_theta(basis);
  GreenOperator op(st);
  const int nv = static_cast<int>(t.rows());
  // first term T1(i,j,k,l) = -int e_ij f_kl dA; own Green applications and
  // quadrature loop (kept independent of wolpert_curvature so the duality
  // comparison crosses two assemblies)
  CurvatureTensor t1(3, 3, false);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Eigen::VectorXcd f_ij(nv);
      for (int v = 0; v < nv; ++v) f_ij[v] = t(v, i) * std::conj(t(v, j));
      Eigen::VectorXcd e_ij = op.apply(f_ij);
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          cplx acc{};
          for (int v = 0; v < nv; ++v)
            acc -= e_ij[v] * (t(v, k) * std::conj(t(v, l))) * st.area[v];
          t1.set(i, j, k, l, acc);
        }
    }
  CurvatureTensor out(3, 3, true);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) out.set(i, j, k, l, t1(i, j, k, l) + t1(i, l, k, j));
  out.canonicalize_kahler();
  return out;
}

SymmetrizedIdentity symmetrized_identity_check(const DifferentialBasis& basis,
                                               const HyperbolicStructure& st,
                                               const Eigen::Matrix3cd& u,
                                               const Eigen::MatrixXd* dense_kernel) {
  require_same_mesh(basis, st);
  Eigen::MatrixXcd t = orthonormal_theta(basis);
  const int nv = static_cast<int>(t.rows());
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(st.area.data(), nv);

  // lhs: dual-Nakano contraction sum R_{ij,ab} u^{ib} conj(u^{ja}) of the
  // assembled tensor
  WPCurvature wp = wolpert_curvature(basis, st);
  cplx lhs{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          lhs += wp.cotangent(i, j, a, b) * u(i, b) * std::conj(u(j, a));

  // rhs: 1/2 sum_{z,w} G(z,w) |H(w,z)+H(z,w)|^2 A_w A_z with
  // H(w,z) = sum_{ib} t_i(w) t_b(z) u^{ib}; K = H + H^T has rank <= 6
  Eigen::MatrixXcd s = t * u.transpose();  // s_i(z) = sum_b u(i,b) t_b(z)
  Eigen::MatrixXcd X(nv, 6), Y(nv, 6);
  X.leftCols(3) = t;
  X.rightCols(3) = s;
  Y.leftCols(3) = s;
  Y.rightCols(3) = t;
  double rhs = 0.0;
  GreenOperator op(st);
  for (int c = 0; c < 6; ++c)
    for (int d = 0; d < 6; ++d) {
      Eigen::VectorXcd xa = X.col(c).cwiseProduct(X.col(d).conjugate());
      Eigen::VectorXcd yb = Y.col(c).cwiseProduct(Y.col(d).conjugate());
      Eigen::VectorXcd gx;
      if (dense_kernel)
        gx = (*dense_kernel) * xa.cwiseProduct(w.cast<cplx>());
      else
        gx = op.apply(xa);
      cplx term{};
      for (int v = 0; v < nv; ++v) term += gx[v] * yb[v] * w[v];
      rhs += 0.5 * term.real();
    }
  SymmetrizedIdentity out;
  out.lhs = lhs.real();
  out.rhs = rhs;
  out.relative_residual = std::abs(out.lhs - out.rhs) / std::max(std::abs(out.lhs), 1e-300);
  return out;
}

}  // namespace curvlab
