#pragma once

#include <array>
#include <vector>

#include "curvlab/types.hpp"

namespace curvlab {

/// Genus-2 hyperelliptic curve y^2 = p(x) with p of degree exactly 6 and
/// squarefree (roots pairwise separated by > 1e-6).
class HyperellipticCurve {
 public:
  /// coeff[k] multiplies x^k. Throws input_error on degree/separation failures.
  static HyperellipticCurve from_coefficients(const std::array<cplx, 7>& coeff);

  const std::array<cplx, 7>& coefficients() const { return coeff_; }
  /// Roots sorted by argument (then modulus); size 6.
  const std::vector<cplx>& roots() const { return roots_; }

  cplx p(cplx x) const;
  cplx dp(cplx x) const;
  /// P~(s) = s^6 p(1/s); P~(0) = leading coefficient.
  cplx p_tilde(cplx s) const;
  /// q_k(x) = p(x) / (x - r_k); q_k(r_k) = p'(r_k).
  cplx q(int k, cplx x) const;

 private:
  std::array<cplx, 7> coeff_{};
  std::vector<cplx> roots_;
  std::vector<std::array<cplx, 6>> deflated_;  // q_k coefficients, highest first
};

}  // namespace curvlab
