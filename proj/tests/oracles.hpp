#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: brute-force contractions, the 16-term complexified curvature
// expansion, and a finite-difference Riemannian curvature tensor.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <functional>

#include "curvlab/rng.hpp"
#include "curvlab/tensor.hpp"

namespace oracles {

using curvlab::cplx;
using curvlab::CurvatureTensor;

inline double nakano_value_direct(const CurvatureTensor& R, const Eigen::MatrixXcd& u) {
  cplx s{};
  for (int i = 0; i < R.n(); ++i)
    for (int j = 0; j < R.n(); ++j)
      for (int a = 0; a < R.r(); ++a)
        for (int b = 0; b < R.r(); ++b) s += R(i, j, a, b) * u(i, a) * std::conj(u(j, b));
  return s.real();
}

inline double dual_nakano_value_direct(const CurvatureTensor& R, const Eigen::MatrixXcd& u) {
  cplx s{};
  for (int i = 0; i < R.n(); ++i)
    for (int j = 0; j < R.n(); ++j)
      for (int a = 0; a < R.r(); ++a)
        for (int b = 0; b < R.r(); ++b) s += R(i, j, a, b) * u(i, b) * std::conj(u(j, a));
  return s.real();
}

// complexified slot: holomorphic and antiholomorphic components
struct Slot {
  Eigen::VectorXcd hol, anti;
};

// Full 16-term expansion of R(S1,S2,S3,S4) using only the Kahler vanishing
// rules and Hermitian symmetry:
//   (h,a,h,a) -> +R[i,j,k,l]        (h,a,a,h) -> -R[i,j,l,k]
//   (a,h,h,a) -> -conj(R[i,j,l,k])  (a,h,a,h) -> +conj(R[i,j,k,l])
// all other slot-type patterns vanish.
inline cplx complexified_R(const CurvatureTensor& R, const Slot& S1, const Slot& S2, const Slot& S3,
                           const Slot& S4) {
  const int n = R.n();
  cplx total{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          total += R(i, j, k, l) * S1.hol[i] * S2.anti[j] * S3.hol[k] * S4.anti[l];
          total -= R(i, j, l, k) * S1.hol[i] * S2.anti[j] * S3.anti[k] * S4.hol[l];
          total -= std::conj(R(i, j, l, k)) * S1.anti[i] * S2.hol[j] * S3.hol[k] * S4.anti[l];
          total += std::conj(R(i, j, k, l)) * S1.anti[i] * S2.hol[j] * S3.anti[k] * S4.hol[l];
        }
  return total;
}

inline Slot conj_slot(const Slot& s) { return {s.anti.conjugate(), s.hol.conjugate()}; }

inline Eigen::VectorXcd random_cvec(curvlab::Rng& rng, int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.cgaussian();
  return v;
}

// Riemann curvature R(X,Y,Z,W) of a 2D conformal metric g_ij = lambda(x,y)
// delta_ij by central finite differences of the Christoffel symbols.
inline double fd_riemann_2d(const std::function<double(double, double)>& lambda, double x0,
                            double y0, double h = 1e-3) {
  auto metric = [&](double x, double y, int i, int j) { return i == j ? lambda(x, y) : 0.0; };
  auto dmetric = [&](double x, double y, int k, int i, int j) {
    double xp = x + (k == 0 ? h : 0), xm = x - (k == 0 ? h : 0);
    double yp = y + (k == 1 ? h : 0), ym = y - (k == 1 ? h : 0);
    return (metric(xp, yp, i, j) - metric(xm, ym, i, j)) / (2 * h);
  };
  auto christoffel = [&](double x, double y, int l, int i, int j) {
    double ginv = 1.0 / lambda(x, y);
    double s = 0.0;
    // Gamma^l_ij = 1/2 g^{lk} (d_i g_jk + d_j g_ik - d_k g_ij); diagonal metric
    s += dmetric(x, y, i, j, l) + dmetric(x, y, j, i, l) - dmetric(x, y, l, i, j);
    return 0.5 * ginv * s;
  };
  // R^l_{kij} = d_i Gamma^l_jk - d_j Gamma^l_ik + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik
  auto dchristoffel = [&](int d, int l, int i, int j) {
    double xp = x0 + (d == 0 ? h : 0), xm = x0 - (d == 0 ? h : 0);
    double yp = y0 + (d == 1 ? h : 0), ym = y0 - (d == 1 ? h : 0);
    return (christoffel(xp, yp, l, i, j) - christoffel(xm, ym, l, i, j)) / (2 * h);
  };
  // R(X,Y,Z,W) with X=d0, Y=d1, Z=d1, W=d0: R_{0110} = g(R(d0,d1)d1, d0)
  double r = 0.0;
  for (int l = 0; l < 2; ++l) {
    double rl = dchristoffel(0, l, 1, 1) - dchristoffel(1, l, 0, 1);
    for (int m = 0; m < 2; ++m)
      rl += christoffel(x0, y0, l, 0, m) * christoffel(x0, y0, m, 1, 1) -
            christoffel(x0, y0, l, 1, m) * christoffel(x0, y0, m, 0, 1);
    r += metric(x0, y0, l, 0) * rl;
  }
  return r;
}

}  // namespace oracles
