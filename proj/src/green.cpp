#include "curvlab/green.hpp"

namespace curvlab {

GreenOperator::GreenOperator(const HyperbolicStructure& st) : mesh_(st.mesh) {
  const int nv = mesh_->num_vertices;
  areas_ = Eigen::Map<const Eigen::VectorXd>(st.area.data(), nv);
  Eigen::SparseMatrix<double> S = 0.5 * mesh_->stiffness;
  for (int v = 0; v < nv; ++v) S.coeffRef(v, v) += areas_[v];
  llt_.compute(S);
  if (llt_.info() != Eigen::Success) throw numeric_error("Green operator factorization failed");
}

Eigen::VectorXd GreenOperator::apply(const Eigen::VectorXd& f) const {
  Eigen::VectorXd rhs = areas_.cwiseProduct(f);
  Eigen::VectorXd out = llt_.solve(rhs);
  if (llt_.info() != Eigen::Success) throw numeric_error("Green operator solve failed");
  return out;
}

Eigen::VectorXcd GreenOperator::apply(const Eigen::VectorXcd& f) const {
  Eigen::VectorXd re = apply(Eigen::VectorXd(f.real()));
  Eigen::VectorXd im = apply(Eigen::VectorXd(f.imag()));
  return re + cplx(0, 1) * im;
}

Eigen::VectorXd GreenOperator::solve_raw(const Eigen::VectorXd& b) const {
  Eigen::VectorXd out = llt_.solve(b);
  if (llt_.info() != Eigen::Success) throw numeric_error("Green operator solve failed");
  return out;
}

Eigen::VectorXcd green_apply(const HyperbolicStructure& structure, const Eigen::VectorXcd& f) {
  return GreenOperator(structure).apply(f);
}

Eigen::MatrixXd green_kernel(const HyperbolicStructure& structure) {
  GreenOperator op(structure);
  const int nv = structure.mesh->num_vertices;
  Eigen::MatrixXd G(nv, nv);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(nv);
  for (int c = 0; c < nv; ++c) {
    e[c] = 1.0;
    G.col(c) = op.solve_raw(e);
    e[c] = 0.0;
  }
  return G;
}

}  // namespace curvlab
