#include <doctest.h>

#include <Eigen/Dense>

#include "curvlab/positivity.hpp"
#include "curvlab/rng.hpp"
#include "oracles.hpp"

using namespace curvlab;
using oracles::Slot;

TEST_SUITE_BEGIN("core");

TEST_CASE("holomorphic sectional value of the models is constant") {
  Rng rng(3);
  for (int n : {1, 2, 3}) {
    CurvatureTensor fs = model_fubini_study(n);
    for (int t = 0; t < 20; ++t) {
      Eigen::VectorXcd u = oracles::random_cvec(rng, n);
      CHECK(holo_sectional_value(fs, u) == doctest::Approx(2.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("griffiths and bisectional values on the models") {
  CurvatureTensor ball = model_complex_ball(2);
  Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(2), e2 = Eigen::VectorXcd::Zero(2);
  e1[0] = 1;
  e2[1] = 1;
  CHECK(griffiths_value(ball, e1, e2) == doctest::Approx(-1.0));
  CHECK(bisectional_value(ball, e1, e2) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(griffiths_value(ball, Eigen::VectorXcd::Zero(2), e2), input_error);
  // values are real for arbitrary arguments (Hermitian symmetry)
  Rng rng(5);
  CurvatureTensor R = random_kahler_tensor(12, 3, SignClass::kUnconstrained);
  for (int t = 0; t < 10; ++t) {
    Eigen::VectorXcd u = oracles::random_cvec(rng, 3), v = oracles::random_cvec(rng, 3);
    CHECK(std::isfinite(griffiths_value(R, u, v)));
  }
}

TEST_CASE("complex sectional value agrees with the 16-term expansion") {
  Rng rng(7);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 2;
    CurvatureTensor R = random_kahler_tensor(300 + trial, n, SignClass::kUnconstrained);
    ComplexTangent Z{oracles::random_cvec(rng, n), oracles::random_cvec(rng, n)};
    ComplexTangent W{oracles::random_cvec(rng, n), oracles::random_cvec(rng, n)};
    double lib = complex_sectional_value(R, Z, W);
    Slot sZ{Z.hol, Z.anti}, sW{W.hol, W.anti};
    cplx oracle = oracles::complexified_R(R, sZ, oracles::conj_slot(sW), sW, oracles::conj_slot(sZ));
    worst = std::max(worst, std::abs(lib - oracle) / std::max(1.0, std::abs(oracle)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("purely holomorphic arguments reduce to the bisectional pattern") {
  Rng rng(9);
  CurvatureTensor R = random_kahler_tensor(17, 3, SignClass::kUnconstrained);
  Eigen::VectorXcd a = oracles::random_cvec(rng, 3), c = oracles::random_cvec(rng, 3);
  ComplexTangent Z{a, Eigen::VectorXcd::Zero(3)}, W{c, Eigen::VectorXcd::Zero(3)};
  // A is the rank-1 dyad a conj(c)^T: the value is the bisectional-type sum
  cplx expect{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          expect += R(i, j, k, l) * a[i] * std::conj(c[j]) * c[k] * std::conj(a[l]);
  CHECK(complex_sectional_value(R, Z, W) == doctest::Approx(expect.real()).epsilon(1e-12));
}

TEST_CASE("Siu form: degenerate dyads") {
  Rng rng(13);
  CurvatureTensor R = random_kahler_tensor(19, 3, SignClass::kUnconstrained);
  Eigen::VectorXcd A = oracles::random_cvec(rng, 3), B = oracles::random_cvec(rng, 3);
  Eigen::VectorXcd Z3 = Eigen::VectorXcd::Zero(3);
  // C = D = 0: one dyad
  cplx expect{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          expect += R(i, j, k, l) * A[i] * std::conj(B[j]) * B[k] * std::conj(A[l]);
  CHECK(siu_form_value(R, A, B, Z3, Z3) == doctest::Approx(expect.real()).epsilon(1e-12));
  // A = C, B = D: cancellation
  CHECK(siu_form_value(R, A, B, A, B) == doctest::Approx(0.0));
}

TEST_CASE("Siu form equals complex sectional under the proof correspondence") {
  Rng rng(15);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 2;
    CurvatureTensor R = random_kahler_tensor(700 + trial, n, SignClass::kUnconstrained);
    Eigen::VectorXcd a = oracles::random_cvec(rng, n), b = oracles::random_cvec(rng, n);
    Eigen::VectorXcd c = oracles::random_cvec(rng, n), d = oracles::random_cvec(rng, n);
    double csv = complex_sectional_value(R, {a, b}, {c, d});
    double siu = siu_form_value(R, a, c, d.conjugate(), b.conjugate());
    worst = std::max(worst, std::abs(csv - siu) / std::max(1.0, std::abs(csv)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("riemannian sectional: complex line reproduces the holomorphic value") {
  CurvatureTensor ball = model_complex_ball(2);
  Eigen::VectorXd X = Eigen::VectorXd::Zero(4), JX = Eigen::VectorXd::Zero(4);
  X[0] = 1.0;   // d/dx_1
  JX[2] = 1.0;  // d/dy_1 = J d/dx_1
  CHECK(riemannian_sectional_value(ball, X, JX) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("riemannian sectional: totally real plane of FS is quarter-pinched") {
  // X = d/dx_1, Y = d/dx_2 with X, Y, JX pairwise orthogonal: the value is
  // half the delta-formula cross term, i.e. a quarter of the holomorphic 2
  CurvatureTensor fs = model_fubini_study(2);
  Eigen::VectorXd X = Eigen::VectorXd::Zero(4), Y = Eigen::VectorXd::Zero(4);
  X[0] = 1.0;
  Y[1] = 1.0;
  CHECK(riemannian_sectional_value(fs, X, Y) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("riemannian sectional is invariant under plane basis changes") {
  Rng rng(21);
  CurvatureTensor R = random_kahler_tensor(23, 3, SignClass::kUnconstrained);
  for (int t = 0; t < 50; ++t) {
    Eigen::VectorXd X(6), Y(6);
    for (int i = 0; i < 6; ++i) {
      X[i] = rng.gaussian();
      Y[i] = rng.gaussian();
    }
    double a = rng.gaussian(), b = rng.gaussian(), c = rng.gaussian(), d = rng.gaussian();
    if (std::abs(a * d - b * c) < 0.1) continue;
    double k1 = riemannian_sectional_value(R, X, Y);
    double k2 = riemannian_sectional_value(R, a * X + b * Y, c * X + d * Y);
    CHECK(k1 == doctest::Approx(k2).epsilon(1e-10));
  }
  Eigen::VectorXd X(6);
  for (int i = 0; i < 6; ++i) X[i] = rng.gaussian();
  CHECK_THROWS_AS(riemannian_sectional_value(R, X, 2.0 * X), input_error);
}

TEST_CASE("sign agreement between sectional values and complex sectional values") {
  Rng rng(27);
  CurvatureTensor R = random_kahler_tensor(29, 2, SignClass::kSemiDualNakanoNegative);
  for (int t = 0; t < 100; ++t) {
    Eigen::VectorXd X(4), Y(4);
    for (int i = 0; i < 4; ++i) {
      X[i] = rng.gaussian();
      Y[i] = rng.gaussian();
    }
    double denom_test = (X.squaredNorm() * Y.squaredNorm() - std::pow(X.dot(Y), 2));
    if (denom_test < 1e-3) continue;
    CHECK(riemannian_sectional_value(R, X, Y) <= 1e-10);
  }
}

TEST_SUITE_END();
