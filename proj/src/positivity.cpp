#include "curvlab/positivity.hpp"

#include <cmath>

namespace curvlab {

std::string to_string(Notion n) {
  switch (n) {
    case Notion::kGriffiths: return "griffiths";
    case Notion::kNakano: return "nakano";
    case Notion::kDualNakano: return "dual_nakano";
    case Notion::kSiuStrong: return "siu_strong";
    case Notion::kComplexSectional: return "complex_sectional";
    case Notion::kRiemannianSectional: return "riemannian_sectional";
    case Notion::kBisectional: return "bisectional";
    case Notion::kIsotropic: return "isotropic";
    case Notion::kCurvatureOperator: return "curvature_operator";
  }
  return "?";
}

std::string to_string(SignVerdict s) {
  switch (s) {
    case SignVerdict::kPositive: return "positive";
    case SignVerdict::kNonnegative: return "nonnegative";
    case SignVerdict::kNonpositive: return "nonpositive";
    case SignVerdict::kNegative: return "negative";
    case SignVerdict::kIndefinite: return "indefinite";
    case SignVerdict::kUndetermined: return "undetermined";
  }
  return "?";
}

const NotionVerdict* ClassificationReport::find(Notion n) const {
  for (const auto& v : verdicts)
    if (v.notion == n) return &v;
  return nullptr;
}

Eigen::MatrixXcd nakano_form(const CurvatureTensor& R) {
  const int n = R.n(), r = R.r(), m = n * r;
  Eigen::MatrixXcd M(m, m);
  for (int j = 0; j < n; ++j)
    for (int b = 0; b < r; ++b)
      for (int i = 0; i < n; ++i)
        for (int a = 0; a < r; ++a) M(j * r + b, i * r + a) = R(i, j, a, b);
  return M;
}

Eigen::MatrixXcd dual_nakano_form(const CurvatureTensor& R) {
  const int n = R.n(), r = R.r(), m = n * r;
  Eigen::MatrixXcd M(m, m);
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < r; ++a)
      for (int i = 0; i < n; ++i)
        for (int b = 0; b < r; ++b) M(j * r + a, i * r + b) = R(i, j, a, b);
  return M;
}

int lambda2_dim(int n) { return n * (2 * n - 1); }

Eigen::MatrixXcd lambda2_b_matrix(int n, const Eigen::VectorXd& coeffs) {
  if (coeffs.size() != lambda2_dim(n)) throw input_error("lambda2 coefficient vector has wrong size");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n), b = Eigen::MatrixXd::Zero(n, n),
                  c = Eigen::MatrixXd::Zero(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = coeffs[k++];
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) b(p, q) = coeffs[k++];
  for (int m_ = 0; m_ < n; ++m_)
    for (int m2 = m_ + 1; m2 < n; ++m2) c(m_, m2) = coeffs[k++];
  Eigen::MatrixXd E = a + c - a.transpose() - c.transpose();
  Eigen::MatrixXd F = -(b + b.transpose());
  return E.cast<cplx>() + cplx(0, 1) * F.cast<cplx>();
}

Eigen::MatrixXd real_curvature_operator(const CurvatureTensor& R) {
  if (!R.kahler()) throw input_error("curvature operator requires a Kahler tensor");
  const int n = R.n();
  const int N = lambda2_dim(n);
  std::vector<Eigen::MatrixXcd> B(N);
  for (int p = 0; p < N; ++p) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(N);
    e[p] = 1.0;
    B[p] = lambda2_b_matrix(n, e);
  }
  Eigen::MatrixXd O(N, N);
  for (int p = 0; p < N; ++p) {
    for (int q = p; q < N; ++q) {
      cplx v{};
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (B[p](i, j) == cplx{}) continue;
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) v += R(i, j, k, l) * B[p](i, j) * B[q](k, l);
        }
      O(p, q) = O(q, p) = -v.real();
    }
  }
  return O;
}

namespace {

NotionVerdict verdict_from_spectrum(Notion notion, double tol, const Eigen::VectorXd& lam,
                                    const Eigen::MatrixXcd& vecs) {
  NotionVerdict out;
  out.notion = notion;
  out.certified = true;
  const int m = static_cast<int>(lam.size());
  double lo = lam[0], hi = lam[m - 1];
  int lo_i = 0, hi_i = m - 1;
  out.min_found = lo;
  out.max_found = hi;
  out.kernel_dim = 0;
  for (int i = 0; i < m; ++i)
    if (std::abs(lam[i]) <= tol) ++out.kernel_dim;

  auto column = [&](int col) {
    std::vector<double> w(2 * m);
    for (int i = 0; i < m; ++i) {
      w[2 * i] = vecs(i, col).real();
      w[2 * i + 1] = vecs(i, col).imag();
    }
    return w;
  };
  out.witness_min = column(lo_i);
  out.witness_max = column(hi_i);
  auto set_witness = [&](int col, double val) {
    out.extremal_value = val;
    out.witness = column(col);
  };
  if (lo > tol) {
    out.sign = SignVerdict::kPositive;
    set_witness(lo_i, lo);
  } else if (hi < -tol) {
    out.sign = SignVerdict::kNegative;
    set_witness(hi_i, hi);
  } else if (std::abs(lo) <= tol && std::abs(hi) <= tol) {
    out.sign = SignVerdict::kNonnegative;
    out.both_semi = true;
    set_witness(hi_i, hi);
  } else if (lo >= -tol) {
    out.sign = SignVerdict::kNonnegative;
    set_witness(lo_i, lo);
  } else if (hi <= tol) {
    out.sign = SignVerdict::kNonpositive;
    set_witness(hi_i, hi);
  } else {
    out.sign = SignVerdict::kIndefinite;
    if (std::abs(lo) >= std::abs(hi))
      set_witness(lo_i, lo);
    else
      set_witness(hi_i, hi);
  }
  return out;
}

}  // namespace

NotionVerdict classify_operator_matrix(const Eigen::MatrixXd& O, double tol) {
  if (tol <= 0) throw input_error("tolerance must be positive");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(O);
  if (es.info() != Eigen::Success) {
    NotionVerdict out;
    out.notion = Notion::kCurvatureOperator;
    return out;  // undetermined, never a silent wrong sign
  }
  return verdict_from_spectrum(Notion::kCurvatureOperator, tol, es.eigenvalues(),
                               es.eigenvectors().cast<cplx>());
}

NotionVerdict classify_eigen(Notion notion, const CurvatureTensor& R, double tol) {
  if (tol <= 0) throw input_error("tolerance must be positive");
  if (notion == Notion::kCurvatureOperator) {
    return classify_operator_matrix(real_curvature_operator(R), tol);
  }
  if (notion != Notion::kNakano && notion != Notion::kDualNakano)
    throw input_error("classify_eigen supports nakano, dual_nakano, curvature_operator");
  Eigen::MatrixXcd M = notion == Notion::kNakano ? nakano_form(R) : dual_nakano_form(R);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  if (es.info() != Eigen::Success) {
    NotionVerdict out;
    out.notion = notion;
    return out;
  }
  return verdict_from_spectrum(notion, tol, es.eigenvalues(), es.eigenvectors());
}

namespace {

cplx griffiths_raw(const CurvatureTensor& R, const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  cplx s{};
  const int n = R.n(), r = R.r();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx uij = u[i] * std::conj(u[j]);
      if (uij == cplx{}) continue;
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) s += R(i, j, a, b) * uij * v[a] * std::conj(v[b]);
    }
  return s;
}

}  // namespace

double griffiths_value(const CurvatureTensor& R, const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  if (u.size() != R.n() || v.size() != R.r()) throw input_error("griffiths vectors have wrong size");
  double nu = u.squaredNorm(), nv = v.squaredNorm();
  if (nu == 0.0 || nv == 0.0) throw input_error("griffiths value needs nonzero vectors");
  return griffiths_raw(R, u, v).real() / (nu * nv);
}

double bisectional_value(const CurvatureTensor& R, const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  if (!R.kahler()) throw input_error("bisectional value requires a Kahler tensor");
  return griffiths_value(R, u, v);
}

double holo_sectional_value(const CurvatureTensor& R, const Eigen::VectorXcd& u) {
  if (R.n() != R.r()) throw input_error("holomorphic sectional value requires r == n");
  return griffiths_value(R, u, u);
}

double complex_sectional_value(const CurvatureTensor& R, const ComplexTangent& Z,
                               const ComplexTangent& W) {
  if (!R.kahler()) throw input_error("complex sectional value requires a Kahler tensor");
  const int n = R.n();
  if (Z.hol.size() != n || Z.anti.size() != n || W.hol.size() != n || W.anti.size() != n)
    throw input_error("complex tangent vectors have wrong size");
  // A^{ij} = a^i conj(c^j) - b^j conj(d^i)
  Eigen::MatrixXcd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A(i, j) = Z.hol[i] * std::conj(W.hol[j]) - Z.anti[j] * std::conj(W.anti[i]);
  cplx s{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (A(i, j) == cplx{}) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += R(i, j, k, l) * A(i, j) * std::conj(A(l, k));
    }
  return s.real();
}

double siu_form_value(const CurvatureTensor& R, const Eigen::VectorXcd& A, const Eigen::VectorXcd& B,
                      const Eigen::VectorXcd& C, const Eigen::VectorXcd& D) {
  if (!R.kahler()) throw input_error("Siu form requires a Kahler tensor");
  const int n = R.n();
  if (A.size() != n || B.size() != n || C.size() != n || D.size() != n)
    throw input_error("Siu form vectors have wrong size");
  Eigen::MatrixXcd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = A[i] * std::conj(B[j]) - C[i] * std::conj(D[j]);
  cplx s{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (M(i, j) == cplx{}) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += R(i, j, k, l) * M(i, j) * std::conj(M(l, k));
    }
  return s.real();
}

namespace {

ComplexTangent complexify(const Eigen::VectorXd& X) {
  const int n = static_cast<int>(X.size()) / 2;
  ComplexTangent Z;
  Z.hol.resize(n);
  Z.anti.resize(n);
  for (int i = 0; i < n; ++i) {
    Z.hol[i] = cplx{X[i], X[n + i]};
    Z.anti[i] = std::conj(Z.hol[i]);
  }
  return Z;
}

}  // namespace

double riemannian_sectional_value(const CurvatureTensor& R, const Eigen::VectorXd& X,
                                  const Eigen::VectorXd& Y) {
  if (!R.kahler()) throw input_error("sectional value requires a Kahler tensor");
  const int n = R.n();
  if (X.size() != 2 * n || Y.size() != 2 * n) throw input_error("sectional vectors have wrong size");
  ComplexTangent Zx = complexify(X), Zy = complexify(Y);
  // g_real(X,Y) = 2 Re <X^{1,0}, Y^{1,0}>
  double nx = 2.0 * Zx.hol.squaredNorm();
  double ny = 2.0 * Zy.hol.squaredNorm();
  double ip = 2.0 * Zx.hol.dot(Zy.hol).real();  // dot conjugates the first argument
  double denom = nx * ny - ip * ip;
  double scale = std::max(nx * ny, 1e-300);
  if (denom <= 1e-10 * scale) throw input_error("sectional value needs linearly independent vectors");
  return complex_sectional_value(R, Zx, Zy) / denom;
}

double isotropic_value(const CurvatureTensor& R, const Eigen::VectorXd& e1, const Eigen::VectorXd& e2,
                       const Eigen::VectorXd& e3, const Eigen::VectorXd& e4) {
  if (!R.kahler()) throw input_error("isotropic value requires a Kahler tensor");
  if (R.n() < 2) throw input_error("isotropic curvature requires n >= 2");
  ComplexTangent Z = complexify(e1), W = complexify(e3);
  for (int i = 0; i < R.n(); ++i) {
    Z.hol[i] += cplx(0, 1) * cplx{e2[i], e2[R.n() + i]};
    Z.anti[i] = std::conj(cplx{e1[i], e1[R.n() + i]}) + cplx(0, 1) * std::conj(cplx{e2[i], e2[R.n() + i]});
    W.hol[i] += cplx(0, -1) * cplx{e4[i], e4[R.n() + i]};
    W.anti[i] = std::conj(cplx{e3[i], e3[R.n() + i]}) + cplx(0, -1) * std::conj(cplx{e4[i], e4[R.n() + i]});
  }
  // R(v^w, conj(v^w)) = csv(Z = v, W = conj(w)); equals xi'O xi + eta'O eta
  return complex_sectional_value(R, Z, W);
}

}  // namespace curvlab
