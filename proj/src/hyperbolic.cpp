#include "curvlab/hyperbolic.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace curvlab {

namespace {

double energy(const Eigen::SparseMatrix<double>& L, const Eigen::VectorXd& Om,
              const Eigen::VectorXd& A, const Eigen::VectorXd& u) {
  Eigen::VectorXd e2u = (2.0 * u.array()).exp();
  return 0.5 * u.dot(L * u) + Om.dot(u) + 0.5 * A.dot(e2u.matrix());
}

}  // namespace

HyperbolicStructure solve_liouville(const SurfaceMesh& mesh) {
  const int nv = mesh.num_vertices;
  const auto& L = mesh.stiffness;
  Eigen::VectorXd Om(nv), A(nv);
  for (int v = 0; v < nv; ++v) {
    Om[v] = mesh.angle_defect[v];
    A[v] = mesh.vertex_area[v];
  }
  double total_bg = A.sum();
  Eigen::VectorXd u =
      Eigen::VectorXd::Constant(nv, 0.5 * std::log(4.0 * std::numbers::pi / total_bg));

  HyperbolicStructure out;
  out.mesh = &mesh;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt;
  bool analyzed = false;
  double res = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < 50; ++it) {
    Eigen::VectorXd e2u = (2.0 * u.array()).exp();
    Eigen::VectorXd F = L * u + Om + A.cwiseProduct(e2u);
    res = (F.array().abs() / (A.array() * (1.0 + e2u.array()))).maxCoeff();
    out.residual_history.push_back(res);
    if (res < 1e-12) break;
    Eigen::SparseMatrix<double> J = L;
    Eigen::VectorXd diag = 2.0 * A.cwiseProduct(e2u);
    for (int v = 0; v < nv; ++v) J.coeffRef(v, v) += diag[v];
    if (!analyzed) {
      llt.analyzePattern(J);
      analyzed = true;
    }
    llt.factorize(J);
    if (llt.info() != Eigen::Success) throw numeric_error("Liouville Newton factorization failed");
    Eigen::VectorXd du = llt.solve(-F);
    double e0 = energy(L, Om, A, u);
    double t = 1.0;
    Eigen::VectorXd trial;
    bool ok = false;
    for (int h = 0; h < 40; ++h) {
      trial = u + t * du;
      if (energy(L, Om, A, trial) < e0) {
        ok = true;
        break;
      }
      t *= 0.5;
    }
    if (!ok) break;  // stagnated; residual test below decides
    u = trial;
  }
  {
    Eigen::VectorXd e2u = (2.0 * u.array()).exp();
    Eigen::VectorXd F = L * u + Om + A.cwiseProduct(e2u);
    res = (F.array().abs() / (A.array() * (1.0 + e2u.array()))).maxCoeff();
  }
  if (res >= 1e-8) {
    std::ostringstream os;
    os << "Liouville Newton did not converge: residual " << res << " after " << it
       << " iterations (history:";
    for (double r : out.residual_history) os << " " << r;
    os << ")";
    throw numeric_error(os.str());
  }
  out.newton_iterations = it;
  out.liouville_residual = res;
  out.u.assign(u.data(), u.data() + nv);
  out.area.resize(nv);
  out.total_area = 0.0;
  for (int v = 0; v < nv; ++v) {
    out.area[v] = A[v] * std::exp(2.0 * u[v]);
    out.total_area += out.area[v];
  }
  return out;
}

std::vector<double> gauss_curvature_recheck(const HyperbolicStructure& st) {
  const SurfaceMesh& mesh = *st.mesh;
  const int nv = mesh.num_vertices;
  const int nf = static_cast<int>(mesh.faces.size());
  std::vector<double> defect(nv, 2.0 * std::numbers::pi), area(nv, 0.0);
  for (int fi = 0; fi < nf; ++fi) {
    const auto& f = mesh.faces[fi];
    std::array<double, 3> l{};
    for (int c = 0; c < 3; ++c) {
      int i = f[(c + 1) % 3], j = f[(c + 2) % 3];
      l[c] = mesh.face_len[fi][c] * std::exp(0.5 * (st.u[i] + st.u[j]));
    }
    double s = 0.5 * (l[0] + l[1] + l[2]);
    double ar = std::sqrt(std::max(s * (s - l[0]) * (s - l[1]) * (s - l[2]), 1e-300));
    for (int c = 0; c < 3; ++c) {
      double lo = l[c], la = l[(c + 1) % 3], lb = l[(c + 2) % 3];
      double ang = std::acos(std::clamp((la * la + lb * lb - lo * lo) / (2 * la * lb), -1.0, 1.0));
      defect[f[c]] -= ang;
      area[f[c]] += ar / 3.0;
    }
  }
  auto adj = mesh.vertex_adjacency();
  std::vector<double> K(nv, std::numeric_limits<double>::quiet_NaN());
  std::vector<int> stencil;
  for (int v = 0; v < nv; ++v) {
    if (mesh.vert_kind[v] != VertexKind::kOrdinary) continue;
    stencil.clear();
    stencil.push_back(v);
    bool clean = true;
    for (int w : adj[v]) {
      if (mesh.vert_kind[w] != VertexKind::kOrdinary) {
        clean = false;
        break;
      }
      stencil.push_back(w);
    }
    std::size_t ring1 = stencil.size();
    for (std::size_t i = 0; i < ring1 && clean; ++i)
      for (int w : adj[stencil[i]]) {
        if (mesh.vert_kind[w] != VertexKind::kOrdinary) {
          clean = false;
          break;
        }
        stencil.push_back(w);
      }
    if (!clean) continue;
    std::sort(stencil.begin(), stencil.end());
    stencil.erase(std::unique(stencil.begin(), stencil.end()), stencil.end());
    double num = 0.0, den = 0.0;
    for (int w : stencil) {
      num += defect[w];
      den += area[w];
    }
    K[v] = num / den;
  }
  return K;
}

}  // namespace curvlab
