#include "curvlab/differentials.hpp"

#include <cmath>

namespace curvlab {

namespace {

// quadratic-differential coefficients of sigma_a = x^{a-1}(dx)^2 / p(x) in
// the vertex chart: x generically, w^2 = x - r_k at branch vertices (where
// the pullback is 4 x^{a-1}/q_k(x), smooth), s = 1/x at infinity (s^{3-a}/P~)
std::array<cplx, 3> sample_sigma(const HyperellipticCurve& curve, const SurfaceMesh& mesh, int cv) {
  std::array<cplx, 3> out{};
  if (mesh.vert_kind[cv] == VertexKind::kBranch) {
    int k = mesh.vert_branch[cv];
    cplx r = curve.roots()[k];
    cplx q = curve.q(k, r);
    cplx xp = 1.0;
    for (int a = 0; a < 3; ++a) {
      out[a] = 4.0 * xp / q;
      xp *= r;
    }
    return out;
  }
  if (mesh.vert_kind[cv] == VertexKind::kInfinity) {
    out[2] = 1.0 / curve.p_tilde(cplx{0, 0});  // s^{3-a} vanishes at s=0 for a<3
    return out;
  }
  cplx x = mesh.base_x[mesh.vert_base[cv]];
  cplx p = curve.p(x);
  cplx xp = 1.0;
  for (int a = 0; a < 3; ++a) {
    out[a] = xp / p;
    xp *= x;
  }
  return out;
}

}  // namespace

DifferentialBasis quadratic_differential_basis(const HyperellipticCurve& curve,
                                               const HyperbolicStructure& st) {
  const SurfaceMesh& mesh = *st.mesh;
  const int nv = mesh.num_vertices;
  DifferentialBasis out;
  out.mesh = &mesh;
  out.f.resize(nv, 3);
  out.theta.resize(nv, 3);
  out.rho.resize(nv);
  for (int v = 0; v < nv; ++v) {
    auto s = sample_sigma(curve, mesh, v);
    double rho = mesh.background_factor(v) * std::exp(2.0 * st.u[v]);
    out.rho[v] = rho;
    for (int a = 0; a < 3; ++a) {
      out.f(v, a) = s[a];
      out.theta(v, a) = std::conj(s[a]) / rho;
    }
  }

  // Gram matrices on identical vertex-lumped quadrature. The T-map is a
  // conjugate isometry, so G_H(a,b) = G_WP(b,a) holds termwise.
  out.gram_wp.setZero();
  out.gram_hodge.setZero();
  for (int v = 0; v < nv; ++v) {
    double w = st.area[v];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        out.gram_wp(a, b) += out.theta(v, a) * std::conj(out.theta(v, b)) * w;
        out.gram_hodge(a, b) +=
            out.f(v, a) * std::conj(out.f(v, b)) / (out.rho[v] * out.rho[v]) * w;
      }
  }
  double gmax = out.gram_wp.cwiseAbs().maxCoeff();
  out.hodge_wp_residual = (out.gram_hodge - out.gram_wp.transpose()).cwiseAbs().maxCoeff() / gmax;

  // discrete harmonicity: dbar* theta has coefficient -(2/rho^2) conj(dzbar f);
  // estimate dzbar f per ordinary vertex by a least-squares fit in
  // {1, d, dbar, d^2, d dbar, dbar^2} over the 1-ring, in the x chart for
  // moderate |x| and in the s = 1/x chart far out (where the x chart
  // stretches), and accumulate the L2 norm sum |w|^2 (rho/2) A_v.
  auto adj = mesh.vertex_adjacency();
  for (int a = 0; a < 3; ++a) out.harmonicity_residual[a] = 0.0;
  Eigen::MatrixXcd B;
  Eigen::VectorXcd rhs;
  for (int v = 0; v < nv; ++v) {
    if (mesh.vert_kind[v] != VertexKind::kOrdinary) continue;
    bool clean = true;
    for (int w : adj[v])
      if (mesh.vert_kind[w] != VertexKind::kOrdinary) clean = false;
    if (!clean || adj[v].size() < 6) continue;
    const cplx xv = mesh.base_x[mesh.vert_base[v]];
    const bool outer = std::abs(xv) > 2.0;
    int near_root = -1;
    if (!outer) {
      for (int k = 0; k < 6; ++k) {
        double dmin = 1e18;
        for (int j = 0; j < 6; ++j)
          if (j != k) dmin = std::min(dmin, std::abs(curve.roots()[k] - curve.roots()[j]));
        if (std::abs(xv - curve.roots()[k]) < 0.3 * std::min(dmin, 2.0)) {
          near_root = k;
          break;
        }
      }
    }
    if (outer) {
      for (int w : adj[v])
        if (std::abs(mesh.base_x[mesh.vert_base[w]]) < 0.3) clean = false;
      if (!clean) continue;
    }
    double rho_fit = out.rho[v];
    double sf_v = 1.0 + kConeSmoothing * std::norm(xv);
    if (outer) {
      cplx sv = 1.0 / xv;
      rho_fit = (std::norm(sv) + kConeSmoothing) / std::abs(curve.p_tilde(sv)) *
                std::exp(2.0 * st.u[v]);
    } else if (near_root >= 0) {
      rho_fit = 4.0 * sf_v / std::abs(curve.q(near_root, xv)) * std::exp(2.0 * st.u[v]);
    }
    const int m = static_cast<int>(adj[v].size()) + 1;
    B.resize(m, 6);
    const cplx rk = near_root >= 0 ? curve.roots()[near_root] : cplx{};
    const double arg_v = near_root >= 0 ? std::arg(xv - rk) : 0.0;
    auto w_coord = [&](cplx xw) {
      // branch of sqrt(x - r) continuous across the stencil
      double th = arg_v + std::arg((xw - rk) / (xv - rk));
      return std::sqrt(std::abs(xw - rk)) * std::polar(1.0, 0.5 * th);
    };
    for (int a = 0; a < 3; ++a) {
      rhs.resize(m);
      int row = 0;
      auto add = [&](int w) {
        cplx xw = mesh.base_x[mesh.vert_base[w]];
        cplx d;
        cplx fw;
        if (outer) {
          cplx sw = 1.0 / xw;
          d = (w == v) ? cplx{0, 0} : sw - 1.0 / xv;
          fw = std::pow(sw, 2 - a) / curve.p_tilde(sw);
        } else if (near_root >= 0) {
          d = (w == v) ? cplx{0, 0} : w_coord(xw) - w_coord(xv);
          fw = 4.0 * std::pow(xw, a) / curve.q(near_root, xw);
        } else {
          d = (w == v) ? cplx{0, 0} : xw - xv;
          fw = out.f(w, a);
        }
        B(row, 0) = 1.0;
        B(row, 1) = d;
        B(row, 2) = std::conj(d);
        B(row, 3) = d * d;
        B(row, 4) = d * std::conj(d);
        B(row, 5) = std::conj(d) * std::conj(d);
        rhs[row] = fw;
        ++row;
      };
      add(v);
      for (int w : adj[v]) add(w);
      Eigen::VectorXcd coef = (B.adjoint() * B).ldlt().solve(B.adjoint() * rhs);
      double dzbar = std::abs(coef[2]);
      double wcoef = 2.0 / (rho_fit * rho_fit) * dzbar;
      out.harmonicity_residual[a] += wcoef * wcoef * (rho_fit / 2.0) * st.area[v];
    }
  }
  for (int a = 0; a < 3; ++a) out.harmonicity_residual[a] = std::sqrt(out.harmonicity_residual[a]);
  return out;
}

}  // namespace curvlab
