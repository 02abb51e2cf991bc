#include <doctest.h>

#include <numbers>

#include "curvlab/mesh.hpp"

using namespace curvlab;

namespace {
std::array<cplx, 7> hexic() {
  std::array<cplx, 7> c{};
  c[0] = -1.0;
  c[6] = 1.0;
  return c;
}
}  // namespace

TEST_SUITE_BEGIN("wp");

TEST_CASE("curve validation: degree, roots, separation") {
  HyperellipticCurve c = HyperellipticCurve::from_coefficients(hexic());
  CHECK(c.roots().size() == 6);
  for (const auto& r : c.roots()) CHECK(std::abs(std::abs(r) - 1.0) < 1e-10);
  CHECK(std::abs(c.p(cplx{2, 0}) - cplx{63, 0}) < 1e-9);
  CHECK(std::abs(c.p_tilde(cplx{0, 0}) - cplx{1, 0}) < 1e-12);
  // q_k(r_k) = p'(r_k)
  for (int k = 0; k < 6; ++k)
    CHECK(std::abs(c.q(k, c.roots()[k]) - c.dp(c.roots()[k])) < 1e-9);

  auto bad = hexic();
  bad[6] = 0.0;  // degree 5
  CHECK_THROWS_AS(HyperellipticCurve::from_coefficients(bad), input_error);

  // (x^2 - 1)^2 (x^2 - 4) has double roots
  // = x^6 - 6 x^4 + 9 x^2 - 4
  std::array<cplx, 7> dup{};
  dup[6] = 1;
  dup[4] = -6;
  dup[2] = 9;
  dup[0] = -4;
  CHECK_THROWS_AS(HyperellipticCurve::from_coefficients(dup), input_error);
}

TEST_CASE("cover topology: genus 2 at every level") {
  HyperellipticCurve c = HyperellipticCurve::from_coefficients(hexic());
  int prev_faces = 0;
  for (int level = 0; level <= 2; ++level) {
    SurfaceMesh m = build_mesh(c, level);
    CHECK(m.euler_characteristic() == -2);
    int branch = 0, infinity = 0;
    for (auto k : m.vert_kind) {
      branch += k == VertexKind::kBranch;
      infinity += k == VertexKind::kInfinity;
    }
    CHECK(branch == 6);
    CHECK(infinity == 2);
    if (level > 0) {
      double ratio = static_cast<double>(m.faces.size()) / prev_faces;
      CHECK(ratio == doctest::Approx(4.0).epsilon(0.01));
    }
    prev_faces = static_cast<int>(m.faces.size());
  }
  CHECK_THROWS_AS(build_mesh(c, -1), input_error);
  CHECK_THROWS_AS(build_mesh(c, 7), input_error);
}

TEST_CASE("mesh quality and operator invariants") {
  HyperellipticCurve c = HyperellipticCurve::from_coefficients(hexic());
  SurfaceMesh m = build_mesh(c, 2);
  const double deg = std::numbers::pi / 180.0;
  CHECK(m.min_angle > 1.0 * deg);
  CHECK(m.max_angle < 178.0 * deg);
  // stiffness: symmetric with zero row sums
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(m.num_vertices);
  CHECK((m.stiffness * ones).cwiseAbs().maxCoeff() < 1e-10);
  Eigen::SparseMatrix<double> D = Eigen::SparseMatrix<double>(m.stiffness.transpose()) - m.stiffness;
  CHECK(Eigen::Map<const Eigen::VectorXd>(D.valuePtr(), D.nonZeros()).cwiseAbs().maxCoeff() <
        1e-12);
  // intrinsic Delaunay: every off-diagonal weight nonpositive
  double max_offdiag = 0.0;
  for (int k = 0; k < m.stiffness.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m.stiffness, k); it; ++it)
      if (it.row() != it.col()) max_offdiag = std::max(max_offdiag, it.value());
  CHECK(max_offdiag <= 1e-12);
  // background Gauss-Bonnet: angle defects sum to 2 pi chi = -4 pi
  double total = 0.0;
  for (double d : m.angle_defect) total += d;
  CHECK(total == doctest::Approx(-4.0 * std::numbers::pi).epsilon(1e-9));
}

TEST_CASE("mesh build is deterministic") {
  HyperellipticCurve c = HyperellipticCurve::from_coefficients(hexic());
  SurfaceMesh a = build_mesh(c, 1), b = build_mesh(c, 1);
  CHECK(a.faces == b.faces);
  CHECK(a.face_len == b.face_len);
}

TEST_CASE("a perturbed curve still builds") {
  std::array<cplx, 7> coeff{};
  coeff[0] = cplx{-1.1, 0.2};
  coeff[1] = cplx{0.1, 0.0};
  coeff[3] = cplx{0.05, -0.1};
  coeff[6] = cplx{1.0, 0.05};
  HyperellipticCurve c = HyperellipticCurve::from_coefficients(coeff);
  SurfaceMesh m = build_mesh(c, 1);
  CHECK(m.euler_characteristic() == -2);
}

TEST_SUITE_END();
