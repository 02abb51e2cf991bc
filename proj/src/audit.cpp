#include <algorithm>
#include <cmath>

#include "curvlab/positivity.hpp"

namespace curvlab {

namespace {

Eigen::VectorXcd cvec(const std::vector<double>& x, int offset, int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx{x[offset + 2 * i], x[offset + 2 * i + 1]};
  return v;
}

// csv witness layout: Z=(a,b), W=(c,d), 8n reals. Siu witness: A,B,C,D.
double siu_at_csv_witness(const CurvatureTensor& R, const std::vector<double>& w) {
  const int n = R.n();
  Eigen::VectorXcd a = cvec(w, 0, n), b = cvec(w, 2 * n, n), c = cvec(w, 4 * n, n),
                   d = cvec(w, 6 * n, n);
  return siu_form_value(R, a, c, d.conjugate(), b.conjugate());
}

double csv_at_siu_witness(const CurvatureTensor& R, const std::vector<double>& w) {
  const int n = R.n();
  Eigen::VectorXcd A = cvec(w, 0, n), B = cvec(w, 2 * n, n), C = cvec(w, 4 * n, n),
                   D = cvec(w, 6 * n, n);
  ComplexTangent Z{A, D.conjugate()};
  ComplexTangent W{B, C.conjugate()};
  return complex_sectional_value(R, Z, W);
}

double csv_at_sectional_witness(const CurvatureTensor& R, const std::vector<double>& w) {
  const int n = R.n();
  Eigen::VectorXd X = Eigen::Map<const Eigen::VectorXd>(w.data(), 2 * n);
  Eigen::VectorXd Y = Eigen::Map<const Eigen::VectorXd>(w.data() + 2 * n, 2 * n);
  ComplexTangent Zx, Zy;
  Zx.hol.resize(n);
  Zx.anti.resize(n);
  Zy.hol.resize(n);
  Zy.anti.resize(n);
  for (int i = 0; i < n; ++i) {
    Zx.hol[i] = cplx{X[i], X[n + i]};
    Zx.anti[i] = std::conj(Zx.hol[i]);
    Zy.hol[i] = cplx{Y[i], Y[n + i]};
    Zy.anti[i] = std::conj(Zy.hol[i]);
  }
  return complex_sectional_value(R, Zx, Zy);
}

double csv_at_isotropic_witness(const CurvatureTensor& R, const std::vector<double>& w) {
  const int d = 2 * R.n();
  Eigen::Map<const Eigen::VectorXd> e1(w.data(), d), e2(w.data() + d, d), e3(w.data() + 2 * d, d),
      e4(w.data() + 3 * d, d);
  return isotropic_value(R, e1, e2, e3, e4);
}

// A positive bisectional value forces a positive sectional value on one of
// the two real planes spanned by the realizations of u and v.
void sectional_values_at_bisectional_witness(const CurvatureTensor& R, const std::vector<double>& w,
                                             std::vector<double>& out) {
  const int n = R.n();
  Eigen::VectorXcd u = cvec(w, 0, n), v = cvec(w, 2 * n, n);
  Eigen::VectorXd X(2 * n), Y(2 * n), JY(2 * n);
  for (int i = 0; i < n; ++i) {
    X[i] = u[i].real();
    X[n + i] = u[i].imag();
    Y[i] = v[i].real();
    Y[n + i] = v[i].imag();
  }
  // J(dx_i) = dy_i: J maps (p,q) to (-q,p)
  for (int i = 0; i < n; ++i) {
    JY[i] = -Y[n + i];
    JY[n + i] = Y[i];
  }
  for (const auto& plane : {Y, JY}) {
    try {
      out.push_back(riemannian_sectional_value(R, X, plane));
    } catch (const input_error&) {
      // dependent plane: no usable sectional value
    }
  }
}

struct ChainSide {
  bool premise_nonpos = false, premise_nonneg = false;
  double max_v = 0.0, min_v = 0.0;
};

ChainSide side(const NotionVerdict& v, double tol) {
  ChainSide s;
  s.max_v = v.max_found;
  s.min_v = v.min_found;
  s.premise_nonpos = v.sign != SignVerdict::kUndetermined && v.max_found <= tol;
  s.premise_nonneg = v.sign != SignVerdict::kUndetermined && v.min_found >= -tol;
  return s;
}

}  // namespace

ClassificationReport implication_audit(const CurvatureTensor& R, const SampleBudget& budget,
                                       const AuditOptions& options) {
  if (!R.kahler()) throw input_error("implication audit requires a Kahler tensor");
  ClassificationReport rep;
  rep.n = R.n();
  rep.r = R.r();
  rep.kahler = true;
  rep.tol = budget.tol;

  NotionVerdict nak = classify_eigen(Notion::kNakano, R, budget.tol);
  NotionVerdict dnk = classify_eigen(Notion::kDualNakano, R, budget.tol);
  Eigen::MatrixXd O = real_curvature_operator(R);
  if (options.negate_operator_hook) O = -O;
  NotionVerdict op = classify_operator_matrix(O, budget.tol);

  NotionVerdict pair = classify_sampled(Notion::kBisectional, R, budget);
  NotionVerdict grif = pair;
  grif.notion = Notion::kGriffiths;
  NotionVerdict siu = classify_sampled(Notion::kSiuStrong, R, budget);
  NotionVerdict csv = classify_sampled(Notion::kComplexSectional, R, budget);
  NotionVerdict sect = classify_sampled(Notion::kRiemannianSectional, R, budget);
  NotionVerdict iso;
  bool has_iso = R.n() >= 2;
  if (has_iso) iso = classify_sampled(Notion::kIsotropic, R, budget);

  const double scale = std::max(1.0, R.max_norm());
  const double ctol = 50.0 * budget.tol * scale;

  // Cross-map witnesses so a violation found by one search is visible to
  // every notion it implies a value for; this removes false chain alarms
  // caused by sampling asymmetry.
  auto fold = [](NotionVerdict& dst, double v) {
    dst.max_found = std::max(dst.max_found, v);
    dst.min_found = std::min(dst.min_found, v);
  };
  if (!siu.witness_max.empty()) fold(csv, csv_at_siu_witness(R, siu.witness_max));
  if (!siu.witness_min.empty()) fold(csv, csv_at_siu_witness(R, siu.witness_min));
  if (!csv.witness_max.empty()) fold(siu, siu_at_csv_witness(R, csv.witness_max));
  if (!csv.witness_min.empty()) fold(siu, siu_at_csv_witness(R, csv.witness_min));
  if (!sect.witness_max.empty()) fold(csv, csv_at_sectional_witness(R, sect.witness_max));
  if (!sect.witness_min.empty()) fold(csv, csv_at_sectional_witness(R, sect.witness_min));
  if (has_iso && !iso.witness_max.empty()) fold(csv, csv_at_isotropic_witness(R, iso.witness_max));
  if (has_iso && !iso.witness_min.empty()) fold(csv, csv_at_isotropic_witness(R, iso.witness_min));
  {
    std::vector<double> ks;
    if (!pair.witness_max.empty()) sectional_values_at_bisectional_witness(R, pair.witness_max, ks);
    if (!pair.witness_min.empty()) sectional_values_at_bisectional_witness(R, pair.witness_min, ks);
    for (double k : ks) fold(sect, k);
  }

  ChainSide s_dn = side(dnk, budget.tol), s_op = side(op, budget.tol), s_csv = side(csv, budget.tol),
            s_sect = side(sect, budget.tol);

  auto check = [&](const char* label, const ChainSide& from, const ChainSide& to) {
    if (from.premise_nonpos && to.max_v > ctol) rep.chain_violations.push_back(label);
    else if (from.premise_nonneg && to.min_v < -ctol) rep.chain_violations.push_back(label);
  };
  check("2=>3", s_dn, s_op);
  check("3=>5", s_op, s_csv);
  check("5=>6", s_csv, s_sect);
  check("6=>7", s_sect, side(pair, budget.tol));
  if (has_iso) check("5=>8", s_csv, side(iso, budget.tol));

  // (4)<=>(5) is an identity of quadratic forms under the witness
  // correspondence; a breach beyond roundoff is a software defect.
  {
    const int n = R.n();
    double eq_tol = 1e-8 * scale;
    auto csv_at = [&](const std::vector<double>& w) {
      ComplexTangent Z{cvec(w, 0, n), cvec(w, 2 * n, n)};
      ComplexTangent W{cvec(w, 4 * n, n), cvec(w, 6 * n, n)};
      return complex_sectional_value(R, Z, W);
    };
    auto siu_at = [&](const std::vector<double>& w) {
      return siu_form_value(R, cvec(w, 0, n), cvec(w, 2 * n, n), cvec(w, 4 * n, n),
                            cvec(w, 6 * n, n));
    };
    bool breach = false;
    for (const auto* w : {&csv.witness_max, &csv.witness_min})
      if (!w->empty() && std::abs(siu_at_csv_witness(R, *w) - csv_at(*w)) > eq_tol) breach = true;
    for (const auto* w : {&siu.witness_max, &siu.witness_min})
      if (!w->empty() && std::abs(csv_at_siu_witness(R, *w) - siu_at(*w)) > eq_tol) breach = true;
    if (breach) rep.chain_violations.push_back("4<=>5");
  }

  // reporting-only pinching predicate (negative side)
  if (sect.max_found < -budget.tol && sect.min_found < 0) {
    rep.pinching_applicable = true;
    rep.pinching_ratio = sect.min_found / sect.max_found;
    rep.weakly_quarter_pinched = rep.pinching_ratio <= 4.0 + 1e-9;
  }

  rep.verdicts = {nak, dnk, op, grif, pair, siu, csv, sect};
  if (has_iso) rep.verdicts.push_back(iso);
  return rep;
}

ClassificationReport classify_bundle(const CurvatureTensor& R, const SampleBudget& budget) {
  ClassificationReport rep;
  rep.n = R.n();
  rep.r = R.r();
  rep.kahler = R.kahler();
  rep.tol = budget.tol;
  rep.verdicts.push_back(classify_eigen(Notion::kNakano, R, budget.tol));
  rep.verdicts.push_back(classify_eigen(Notion::kDualNakano, R, budget.tol));
  rep.verdicts.push_back(classify_sampled(Notion::kGriffiths, R, budget));
  return rep;
}

}  // namespace curvlab
