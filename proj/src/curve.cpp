#include "curvlab/curve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace curvlab {

HyperellipticCurve HyperellipticCurve::from_coefficients(const std::array<cplx, 7>& coeff) {
  double cmax = 0.0;
  for (const auto& c : coeff) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0.0) throw input_error("curve polynomial is zero");
  if (std::abs(coeff[6]) <= 1e-12 * cmax)
    throw input_error("curve polynomial must have degree exactly 6");

  HyperellipticCurve out;
  out.coeff_ = coeff;

  // companion-matrix root solve for the monic normalization
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(6, 6);
  for (int i = 1; i < 6; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < 6; ++i) C(i, 5) = -coeff[i] / coeff[6];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
  if (es.info() != Eigen::Success) throw numeric_error("root solve failed");
  out.roots_.assign(es.eigenvalues().data(), es.eigenvalues().data() + 6);
  std::sort(out.roots_.begin(), out.roots_.end(), [](cplx a, cplx b) {
    double aa = std::arg(a), ab = std::arg(b);
    if (aa != ab) return aa < ab;
    return std::abs(a) < std::abs(b);
  });

  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (std::abs(out.roots_[i] - out.roots_[j]) <= 1e-6) {
        std::ostringstream os;
        os << "curve is not squarefree: roots " << i << " and " << j << " separated by "
           << std::abs(out.roots_[i] - out.roots_[j]);
        throw input_error(os.str());
      }

  // synthetic division p(x) / (x - r_k)
  out.deflated_.resize(6);
  for (int k = 0; k < 6; ++k) {
    cplx acc{};
    for (int i = 0; i < 6; ++i) {
      acc = acc * out.roots_[k] + out.coeff_[6 - i];
      out.deflated_[k][i] = acc;
    }
  }
  return out;
}

cplx HyperellipticCurve::p(cplx x) const {
  cplx acc{};
  for (int i = 6; i >= 0; --i) acc = acc * x + coeff_[i];
  return acc;
}

cplx HyperellipticCurve::dp(cplx x) const {
  cplx acc{};
  for (int i = 6; i >= 1; --i) acc = acc * x + coeff_[i] * static_cast<double>(i);
  return acc;
}

cplx HyperellipticCurve::p_tilde(cplx s) const {
  cplx acc{};
  for (int i = 0; i <= 6; ++i) acc = acc * s + coeff_[i];
  return acc;
}

cplx HyperellipticCurve::q(int k, cplx x) const {
  cplx acc{};
  for (int i = 0; i < 6; ++i) acc = acc * x + deflated_[k][i];
  return acc;
}

}  // namespace curvlab
