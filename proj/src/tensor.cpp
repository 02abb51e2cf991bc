#include "curvlab/tensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "curvlab/rng.hpp"

namespace curvlab {

CurvatureTensor::CurvatureTensor(int n, int r, bool kahler) : n_(n), r_(r), kahler_(kahler) {
  if (n < 1 || r < 1) throw input_error("tensor dimensions must be positive");
  if (kahler && n != r) throw input_error("kahler tensor requires r == n");
  e_.assign(static_cast<std::size_t>(n) * n * r * r, cplx{0.0, 0.0});
}

double CurvatureTensor::max_norm() const {
  double m = 0.0;
  for (const auto& v : e_) m = std::max(m, std::abs(v));
  return m;
}

void CurvatureTensor::canonicalize_hermitian() {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int a = 0; a < r_; ++a)
        for (int b = 0; b < r_; ++b) {
          // canonical representative: (i,a) <= (j,b) lexicographically
          if (i > j || (i == j && a > b)) {
            e_[idx(i, j, a, b)] = std::conj(e_[idx(j, i, b, a)]);
          } else if (i == j && a == b) {
            e_[idx(i, j, a, b)] = cplx{e_[idx(i, j, a, b)].real(), 0.0};
          }
        }
}

void CurvatureTensor::canonicalize_kahler() {
  if (!kahler_) return;
  const std::vector<cplx> src = e_;
  const int n = n_;
  auto tup_idx = [&](const std::array<int, 4>& t) {
    return ((static_cast<std::size_t>(t[0]) * n + t[1]) * n + t[2]) * n + t[3];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          // orbit under swaps (1<->3), (2<->4) and the Hermitian conjugation
          std::array<std::array<int, 4>, 4> lin = {{{i, j, k, l}, {k, j, i, l}, {i, l, k, j}, {k, l, i, j}}};
          std::array<int, 4> best = lin[0];
          bool conj = false;
          for (const auto& t : lin) {
            std::array<int, 4> h = {t[1], t[0], t[3], t[2]};
            if (t < best) { best = t; conj = false; }
            if (h < best) { best = h; conj = true; }
          }
          cplx v = src[tup_idx(best)];
          e_[idx(i, j, k, l)] = conj ? std::conj(v) : v;
        }
  canonicalize_hermitian();
}

double CurvatureTensor::hermitian_residual() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int a = 0; a < r_; ++a)
        for (int b = 0; b < r_; ++b)
          m = std::max(m, std::abs(e_[idx(i, j, a, b)] - std::conj(e_[idx(j, i, b, a)])));
  return m;
}

double CurvatureTensor::kahler_residual() const {
  if (!kahler_) return 0.0;
  double m = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
          m = std::max(m, std::abs(e_[idx(i, j, k, l)] - e_[idx(k, j, i, l)]));
          m = std::max(m, std::abs(e_[idx(i, j, k, l)] - e_[idx(i, l, k, j)]));
        }
  return m;
}

std::vector<SymmetryViolation> validate(const CurvatureTensor& R, double tol) {
  std::vector<SymmetryViolation> out;
  const double scale = std::max(R.max_norm(), 1.0);
  const double bound = tol * scale;
  const int n = R.n(), r = R.r();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          if (i > j || (i == j && a > b)) continue;
          double d = std::abs(R(i, j, a, b) - std::conj(R(j, i, b, a)));
          if (d > bound) out.push_back({"hermitian", i, j, a, b, d});
        }
  if (R.kahler()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double d13 = std::abs(R(i, j, k, l) - R(k, j, i, l));
            if (d13 > bound && i < k) out.push_back({"kahler-13", i, j, k, l, d13});
            double d24 = std::abs(R(i, j, k, l) - R(i, l, k, j));
            if (d24 > bound && j < l) out.push_back({"kahler-24", i, j, k, l, d24});
          }
  }
  return out;
}

void HermitianMetricJet::check() const {
  if (n < 1 || r < 1) throw input_error("jet dimensions must be positive");
  if (h.rows() != r || h.cols() != r) throw input_error("jet metric has wrong shape");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff()))
    throw input_error("jet metric is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw input_error("jet metric is not positive definite");
  if (static_cast<int>(dh.size()) != n) throw input_error("jet dh has wrong arity");
  for (const auto& m : dh)
    if (m.rows() != r || m.cols() != r) throw input_error("jet dh block has wrong shape");
  if (static_cast<int>(ddh.size()) != n) throw input_error("jet ddh has wrong arity");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(ddh[i].size()) != n) throw input_error("jet ddh has wrong arity");
    for (int j = 0; j < n; ++j) {
      if (ddh[i][j].rows() != r || ddh[i][j].cols() != r)
        throw input_error("jet ddh block has wrong shape");
      double d = (ddh[i][j] - ddh[j][i].adjoint()).cwiseAbs().maxCoeff();
      if (d > 1e-10 * std::max(1.0, ddh[i][j].cwiseAbs().maxCoeff()))
        throw input_error("jet ddh violates Hermitian pairing ddh_ji = adjoint(ddh_ij)");
    }
  }
}

CurvatureTensor curvature_from_jet(const HermitianMetricJet& jet) {
  jet.check();
  const int n = jet.n, r = jet.r;
  Eigen::MatrixXcd hinv = jet.h.inverse();
  CurvatureTensor R(n, r, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXcd term = jet.dh[i] * hinv * jet.dh[j].adjoint() - jet.ddh[i][j];
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) R.set(i, j, a, b, term(a, b));
    }
  }
  R.canonicalize_hermitian();
  return R;
}

CurvatureTensor model_fubini_study(int n) {
  if (n < 1) throw input_error("model dimension must be >= 1");
  CurvatureTensor R(n, n, true);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = (i == j && k == l ? 1.0 : 0.0) + (i == l && k == j ? 1.0 : 0.0);
          if (v != 0.0) R.set(i, j, k, l, cplx{v, 0.0});
        }
  return R;
}

CurvatureTensor model_complex_ball(int n) { return scale(model_fubini_study(n), -1.0); }

CurvatureTensor model_flat(int n) {
  if (n < 1) throw input_error("model dimension must be >= 1");
  return CurvatureTensor(n, n, true);
}

SignClass sign_class_from_string(const std::string& s) {
  if (s == "unconstrained") return SignClass::kUnconstrained;
  if (s == "semi-dual-nakano-negative") return SignClass::kSemiDualNakanoNegative;
  if (s == "semi-nakano-negative") return SignClass::kSemiNakanoNegative;
  throw input_error("unknown sign class: " + s);
}

std::string to_string(SignClass c) {
  switch (c) {
    case SignClass::kUnconstrained: return "unconstrained";
    case SignClass::kSemiDualNakanoNegative: return "semi-dual-nakano-negative";
    case SignClass::kSemiNakanoNegative: return "semi-nakano-negative";
  }
  return "?";
}

namespace {

CurvatureTensor normalized(CurvatureTensor R) {
  double m = R.max_norm();
  if (m > 0) R = scale(R, 1.0 / m);
  return R;
}

// Hermitian form on Sym^2(C^n) pulled back to index pairs: any Hermitian Q
// gives a tensor with the full Kahler symmetries.
CurvatureTensor random_unconstrained(Rng& rng, int n) {
  const int m = n * (n + 1) / 2;
  Eigen::MatrixXcd A(m, m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) A(p, q) = rng.cgaussian();
  Eigen::MatrixXcd Q = 0.5 * (A + A.adjoint());
  std::vector<std::vector<int>> sym_id(n, std::vector<int>(n));
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) { sym_id[i][k] = sym_id[k][i] = c++; }
  CurvatureTensor R(n, n, true);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) R.set(i, j, k, l, Q(sym_id[i][k], sym_id[j][l]));
  R.canonicalize_kahler();
  return R;
}

// Nakano form = -(Gram sum over symmetric matrices): exactly the cone of
// semi-Nakano-negative Kahler tensors.
CurvatureTensor random_semi_nakano_negative(Rng& rng, int n) {
  const int terms = n * (n + 1) / 2 + 2;
  CurvatureTensor R(n, n, true);
  for (int s = 0; s < terms; ++s) {
    Eigen::MatrixXcd G(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) G(i, k) = rng.cgaussian();
    G = 0.5 * (G + G.transpose()).eval();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) R.add(i, j, k, l, -G(i, k) * std::conj(G(j, l)));
  }
  R.canonicalize_kahler();
  return R;
}

// Discrete analogue of the Weil-Petersson curvature formula: a symmetric,
// entrywise-positive, positive-semidefinite kernel contracted against
// rank-one fields mu_i(w) conj(mu_j(w)). Both the dual-Nakano and the
// Nakano forms of the result are <= 0 by the same argument that proves the
// continuum theorem, so membership is guaranteed by construction.
CurvatureTensor random_semi_dual_nakano_negative(Rng& rng, int n) {
  const int npts = 12, nfac = 8;
  std::vector<std::vector<cplx>> mu(npts, std::vector<cplx>(n));
  for (auto& row : mu)
    for (auto& v : row) v = rng.cgaussian();
  std::vector<std::vector<double>> G(npts, std::vector<double>(npts, 0.0));
  for (int t = 0; t < nfac; ++t) {
    std::vector<double> phi(npts);
    for (auto& p : phi) p = std::abs(rng.gaussian());
    double c = std::abs(rng.gaussian()) + 0.1;
    for (int w = 0; w < npts; ++w)
      for (int z = 0; z < npts; ++z) G[w][z] += c * phi[w] * phi[z];
  }
  // f_ij(w) = mu_i(w) conj(mu_j(w)); e = G f; R = -(e_ij f_kl + e_il f_kj)
  std::vector<std::vector<cplx>> f(npts), e(npts);
  for (int w = 0; w < npts; ++w) {
    f[w].assign(static_cast<std::size_t>(n) * n, cplx{});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f[w][i * n + j] = mu[w][i] * std::conj(mu[w][j]);
  }
  for (int w = 0; w < npts; ++w) {
    e[w].assign(static_cast<std::size_t>(n) * n, cplx{});
    for (int z = 0; z < npts; ++z)
      for (int t = 0; t < n * n; ++t) e[w][t] += G[w][z] * f[z][t];
  }
  CurvatureTensor R(n, n, true);
  for (int w = 0; w < npts; ++w)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            R.add(i, j, k, l, -(e[w][i * n + j] * f[w][k * n + l] + e[w][i * n + l] * f[w][k * n + j]));
  R.canonicalize_kahler();
  return R;
}

}  // namespace

CurvatureTensor random_kahler_tensor(uint64_t seed, int n, SignClass sign_class) {
  if (n < 1) throw input_error("tensor dimension must be >= 1");
  Rng rng(seed, 0x7e57 + static_cast<uint64_t>(sign_class));
  switch (sign_class) {
    case SignClass::kUnconstrained: return normalized(random_unconstrained(rng, n));
    case SignClass::kSemiNakanoNegative: return normalized(random_semi_nakano_negative(rng, n));
    case SignClass::kSemiDualNakanoNegative:
      return normalized(random_semi_dual_nakano_negative(rng, n));
  }
  throw input_error("unknown sign class");
}

SubbundleResult subbundle_curvature(const CurvatureTensor& R_E, const HermitianMetricJet& jet, int s) {
  jet.check();
  const int n = R_E.n(), r = R_E.r();
  if (jet.n != n || jet.r != r) throw input_error("jet does not match tensor shape");
  if (s < 1 || s >= r) throw input_error("subbundle rank must satisfy 1 <= s < r");
  if ((jet.h - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff() > 1e-12)
    throw input_error("frame is not adapted: h(p) != identity");
  CurvatureTensor corr(n, s, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
          cplx v{};
          for (int g = s; g < r; ++g) v += jet.dh[i](a, g) * std::conj(jet.dh[j](b, g));
          corr.set(i, j, a, b, v);
        }
  corr.canonicalize_hermitian();
  CurvatureTensor sub(n, s, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) sub.set(i, j, a, b, R_E(i, j, a, b) - corr(i, j, a, b));
  sub.canonicalize_hermitian();
  return {std::move(sub), std::move(corr)};
}

CurvatureTensor dual_tensor(const CurvatureTensor& R) {
  CurvatureTensor D(R.n(), R.r(), false);
  for (int i = 0; i < R.n(); ++i)
    for (int j = 0; j < R.n(); ++j)
      for (int a = 0; a < R.r(); ++a)
        for (int b = 0; b < R.r(); ++b) D.set(i, j, a, b, -R(i, j, b, a));
  return D;
}

CurvatureTensor scale(const CurvatureTensor& R, double factor) {
  CurvatureTensor out = R;
  for (auto& v : out.entries()) v *= factor;
  return out;
}

CurvatureTensor transform_frame(const CurvatureTensor& R, const Eigen::MatrixXcd& U,
                                const Eigen::MatrixXcd& V) {
  const int n = R.n(), r = R.r();
  if (U.rows() != n || U.cols() != n || V.rows() != r || V.cols() != r)
    throw input_error("frame transform has wrong shape");
  CurvatureTensor out(n, r, R.kahler());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          cplx v{};
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              for (int g = 0; g < r; ++g)
                for (int d = 0; d < r; ++d)
                  v += U(i, p) * std::conj(U(j, q)) * V(a, g) * std::conj(V(b, d)) * R(p, q, g, d);
          out.set(i, j, a, b, v);
        }
  return out;
}

}  // namespace curvlab
