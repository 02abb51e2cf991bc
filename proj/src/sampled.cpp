#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "curvlab/parallel.hpp"
#include "curvlab/positivity.hpp"
#include "curvlab/rng.hpp"

namespace curvlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SearchProblem {
  int dim = 0;
  // fills x with a random feasible point
  std::function<void(Rng&, double*)> sample;
  // projects x back onto the feasible set in place
  std::function<void(double*)> project;
  // objective; NaN marks an infeasible point
  std::function<double(const double*)> eval;
};

void normalize_block(double* x, int count) {
  double s = 0.0;
  for (int i = 0; i < count; ++i) s += x[i] * x[i];
  s = std::sqrt(s);
  if (s < 1e-300) {
    x[0] = 1.0;
    for (int i = 1; i < count; ++i) x[i] = 0.0;
    return;
  }
  for (int i = 0; i < count; ++i) x[i] /= s;
}

Eigen::VectorXcd cvec(const double* x, int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx{x[2 * i], x[2 * i + 1]};
  return v;
}

void fill_gaussian(Rng& rng, double* x, int count) {
  for (int i = 0; i < count; ++i) x[i] = rng.gaussian();
}

SearchProblem make_pair_problem(const CurvatureTensor& R) {  // griffiths / bisectional
  const int n = R.n(), r = R.r();
  SearchProblem p;
  p.dim = 2 * (n + r);
  p.sample = [n, r](Rng& rng, double* x) { fill_gaussian(rng, x, 2 * (n + r)); };
  p.project = [n, r](double* x) {
    normalize_block(x, 2 * n);
    normalize_block(x + 2 * n, 2 * r);
  };
  p.eval = [&R, n, r](const double* x) {
    return griffiths_value(R, cvec(x, n), cvec(x + 2 * n, r));
  };
  return p;
}

SearchProblem make_csv_problem(const CurvatureTensor& R) {
  const int n = R.n();
  SearchProblem p;
  p.dim = 8 * n;
  p.sample = [n](Rng& rng, double* x) { fill_gaussian(rng, x, 8 * n); };
  p.project = [n](double* x) {
    normalize_block(x, 4 * n);
    normalize_block(x + 4 * n, 4 * n);
  };
  p.eval = [&R, n](const double* x) {
    ComplexTangent Z{cvec(x, n), cvec(x + 2 * n, n)};
    ComplexTangent W{cvec(x + 4 * n, n), cvec(x + 6 * n, n)};
    return complex_sectional_value(R, Z, W);
  };
  return p;
}

SearchProblem make_siu_problem(const CurvatureTensor& R) {
  const int n = R.n();
  SearchProblem p;
  p.dim = 8 * n;
  p.sample = [n](Rng& rng, double* x) { fill_gaussian(rng, x, 8 * n); };
  p.project = [n](double* x) {
    for (int k = 0; k < 4; ++k) normalize_block(x + 2 * n * k, 2 * n);
  };
  p.eval = [&R, n](const double* x) {
    return siu_form_value(R, cvec(x, n), cvec(x + 2 * n, n), cvec(x + 4 * n, n), cvec(x + 6 * n, n));
  };
  return p;
}

SearchProblem make_sectional_problem(const CurvatureTensor& R) {
  const int n = R.n();
  SearchProblem p;
  p.dim = 4 * n;
  p.sample = [n](Rng& rng, double* x) { fill_gaussian(rng, x, 4 * n); };
  p.project = [n](double* x) {
    normalize_block(x, 2 * n);
    normalize_block(x + 2 * n, 2 * n);
  };
  p.eval = [&R, n](const double* x) {
    Eigen::VectorXd X = Eigen::Map<const Eigen::VectorXd>(x, 2 * n);
    Eigen::VectorXd Y = Eigen::Map<const Eigen::VectorXd>(x + 2 * n, 2 * n);
    double ip = X.dot(Y);
    if (1.0 - ip * ip < 1e-6) return kNaN;  // nearly dependent plane
    try {
      return riemannian_sectional_value(R, X, Y);
    } catch (const input_error&) {
      return kNaN;
    }
  };
  return p;
}

// frame (e1..e4) stored as 4 consecutive real 2n-vectors; projection is
// Gram-Schmidt, evaluation goes through the operator form.
SearchProblem make_isotropic_problem(const CurvatureTensor& R) {
  const int n = R.n();
  const int d = 2 * n;
  SearchProblem p;
  p.dim = 4 * d;
  p.sample = [d](Rng& rng, double* x) { fill_gaussian(rng, x, 4 * d); };
  p.project = [d](double* x) {
    for (int k = 0; k < 4; ++k) {
      for (int m = 0; m < k; ++m) {
        double ip = 0.0;
        for (int i = 0; i < d; ++i) ip += x[k * d + i] * x[m * d + i];
        for (int i = 0; i < d; ++i) x[k * d + i] -= ip * x[m * d + i];
      }
      normalize_block(x + k * d, d);
    }
  };
  p.eval = [&R, d](const double* x) {
    Eigen::Map<const Eigen::VectorXd> e1(x, d), e2(x + d, d), e3(x + 2 * d, d), e4(x + 3 * d, d);
    return isotropic_value(R, e1, e2, e3, e4);
  };
  return p;
}

SearchProblem make_holo_problem(const CurvatureTensor& R) {
  const int n = R.n();
  SearchProblem p;
  p.dim = 2 * n;
  p.sample = [n](Rng& rng, double* x) { fill_gaussian(rng, x, 2 * n); };
  p.project = [n](double* x) { normalize_block(x, 2 * n); };
  p.eval = [&R, n](const double* x) { return holo_sectional_value(R, cvec(x, n)); };
  return p;
}

SearchProblem make_problem(Notion notion, const CurvatureTensor& R) {
  switch (notion) {
    case Notion::kGriffiths:
    case Notion::kBisectional: return make_pair_problem(R);
    case Notion::kComplexSectional: return make_csv_problem(R);
    case Notion::kSiuStrong: return make_siu_problem(R);
    case Notion::kRiemannianSectional: return make_sectional_problem(R);
    case Notion::kIsotropic: return make_isotropic_problem(R);
    default: throw input_error("notion is not search-based: " + to_string(notion));
  }
}

struct Candidate {
  double value = kNaN;
  std::vector<double> x;
};

// projected-gradient ascent (dir=+1) or descent (dir=-1) with numerically
// estimated gradients and step halving; convergence at gradient norm < 1e-8
// or 200 iterations (see the module's design notes).
Candidate refine(const SearchProblem& p, std::vector<double> x, int dir) {
  constexpr int kMaxIter = 200;
  constexpr double kGradTol = 1e-8;
  constexpr double kFdStep = 1e-5;
  p.project(x.data());
  double f = p.eval(x.data());
  if (std::isnan(f)) return {kNaN, x};
  std::vector<double> g(p.dim), trial(p.dim);
  double step = 0.05;
  for (int it = 0; it < kMaxIter; ++it) {
    double gnorm2 = 0.0;
    for (int k = 0; k < p.dim; ++k) {
      trial = x;
      trial[k] += kFdStep;
      p.project(trial.data());
      double fp = p.eval(trial.data());
      trial = x;
      trial[k] -= kFdStep;
      p.project(trial.data());
      double fm = p.eval(trial.data());
      if (std::isnan(fp) || std::isnan(fm)) {
        g[k] = 0.0;
        continue;
      }
      g[k] = (fp - fm) / (2 * kFdStep);
      gnorm2 += g[k] * g[k];
    }
    double gnorm = std::sqrt(gnorm2);
    if (gnorm < kGradTol) break;
    bool improved = false;
    double s = step;
    for (int h = 0; h < 25; ++h) {
      for (int k = 0; k < p.dim; ++k) trial[k] = x[k] + dir * s * g[k] / gnorm;
      p.project(trial.data());
      double ft = p.eval(trial.data());
      if (!std::isnan(ft) && dir * (ft - f) > 0) {
        x = trial;
        f = ft;
        step = std::min(s * 1.5, 0.25);
        improved = true;
        break;
      }
      s *= 0.5;
    }
    if (!improved) break;
  }
  return {f, x};
}

uint64_t notion_stream(Notion n) { return 0x5a11ull + static_cast<uint64_t>(n) * 0x100; }

}  // namespace

NotionVerdict classify_sampled(Notion notion, const CurvatureTensor& R, const SampleBudget& budget) {
  if (budget.samples < 1 || budget.restarts < 1) throw input_error("search budgets must be >= 1");
  if (budget.tol <= 0) throw input_error("tolerance must be positive");
  if (notion == Notion::kIsotropic && R.n() < 2)
    throw input_error("isotropic search requires n >= 2");
  SearchProblem p = make_problem(notion, R);

  const int keep = budget.restarts;
  constexpr long kBlock = 256;
  const long nblocks = (budget.samples + kBlock - 1) / kBlock;
  // per-block top candidates, merged deterministically by block index
  std::vector<std::vector<Candidate>> block_max(nblocks), block_min(nblocks);
  parallel_for(static_cast<std::size_t>(nblocks), [&](std::size_t blk) {
    Rng rng(budget.seed, notion_stream(notion) + blk);
    long count = std::min<long>(kBlock, budget.samples - static_cast<long>(blk) * kBlock);
    std::vector<double> x(p.dim);
    Candidate best_max, best_min;
    for (long s = 0; s < count; ++s) {
      p.sample(rng, x.data());
      p.project(x.data());
      double f = p.eval(x.data());
      if (std::isnan(f)) continue;
      if (std::isnan(best_max.value) || f > best_max.value) best_max = {f, x};
      if (std::isnan(best_min.value) || f < best_min.value) best_min = {f, x};
    }
    if (!std::isnan(best_max.value)) block_max[blk].push_back(std::move(best_max));
    if (!std::isnan(best_min.value)) block_min[blk].push_back(std::move(best_min));
  });
  std::vector<Candidate> maxima, minima;
  for (long b = 0; b < nblocks; ++b) {
    for (auto& c : block_max[b]) maxima.push_back(std::move(c));
    for (auto& c : block_min[b]) minima.push_back(std::move(c));
  }
  if (maxima.empty()) throw numeric_error("search produced no feasible samples");
  std::sort(maxima.begin(), maxima.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
  std::sort(minima.begin(), minima.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  if (static_cast<int>(maxima.size()) > keep) maxima.resize(keep);
  if (static_cast<int>(minima.size()) > keep) minima.resize(keep);

  // refinement restarts: best sampled starts plus fresh random ones
  Rng rng(budget.seed, notion_stream(notion) + 0xfffff);
  std::vector<double> x(p.dim);
  while (static_cast<int>(maxima.size()) < keep) {
    p.sample(rng, x.data());
    maxima.push_back({0.0, x});
  }
  while (static_cast<int>(minima.size()) < keep) {
    p.sample(rng, x.data());
    minima.push_back({0.0, x});
  }
  std::vector<Candidate> refined_max(keep), refined_min(keep);
  parallel_for(static_cast<std::size_t>(2 * keep), [&](std::size_t k) {
    if (k < static_cast<std::size_t>(keep))
      refined_max[k] = refine(p, maxima[k].x, +1);
    else
      refined_min[k - keep] = refine(p, minima[k - keep].x, -1);
  });
  Candidate best_max = refined_max[0], best_min = refined_min[0];
  for (const auto& c : refined_max)
    if (!std::isnan(c.value) && (std::isnan(best_max.value) || c.value > best_max.value)) best_max = c;
  for (const auto& c : refined_min)
    if (!std::isnan(c.value) && (std::isnan(best_min.value) || c.value < best_min.value)) best_min = c;

  NotionVerdict out;
  out.notion = notion;
  out.certified = false;
  out.max_found = best_max.value;
  out.min_found = best_min.value;
  out.witness_max = best_max.x;
  out.witness_min = best_min.x;
  const double tol = budget.tol;
  double lo = out.min_found, hi = out.max_found;
  auto use = [&](const Candidate& c) {
    out.extremal_value = c.value;
    out.witness = c.x;
  };
  if (lo > tol) {
    out.sign = SignVerdict::kPositive;
    use(best_min);
  } else if (hi < -tol) {
    out.sign = SignVerdict::kNegative;
    use(best_max);
  } else if (std::abs(lo) <= tol && std::abs(hi) <= tol) {
    out.sign = SignVerdict::kNonnegative;
    out.both_semi = true;
    use(best_max);
  } else if (lo >= -tol) {
    out.sign = SignVerdict::kNonnegative;
    use(best_min);
  } else if (hi <= tol) {
    out.sign = SignVerdict::kNonpositive;
    use(best_max);
  } else {
    out.sign = SignVerdict::kIndefinite;
    use(std::abs(lo) >= std::abs(hi) ? best_min : best_max);
  }
  return out;
}

double reevaluate_witness(const CurvatureTensor& R, const NotionVerdict& verdict) {
  if (verdict.certified) {
    // witness is the extremal eigenvector of the corresponding form
    const int m = static_cast<int>(verdict.witness.size()) / 2;
    Eigen::VectorXcd v(m);
    for (int i = 0; i < m; ++i) v[i] = cplx{verdict.witness[2 * i], verdict.witness[2 * i + 1]};
    Eigen::MatrixXcd M;
    if (verdict.notion == Notion::kNakano)
      M = nakano_form(R);
    else if (verdict.notion == Notion::kDualNakano)
      M = dual_nakano_form(R);
    else if (verdict.notion == Notion::kCurvatureOperator)
      M = real_curvature_operator(R).cast<cplx>();
    else
      throw input_error("certified witness for unexpected notion");
    double nn = v.squaredNorm();
    if (nn == 0.0) throw input_error("empty witness");
    return (v.adjoint() * M * v).value().real() / nn;
  }
  SearchProblem p = make_problem(verdict.notion, R);
  if (static_cast<int>(verdict.witness.size()) != p.dim) throw input_error("witness has wrong size");
  return p.eval(verdict.witness.data());
}

NotionVerdict isotropic_extremum(const CurvatureTensor& R, const SampleBudget& budget) {
  if (R.n() < 2) throw input_error("isotropic extremum requires n >= 2");
  return classify_sampled(Notion::kIsotropic, R, budget);
}

}  // namespace curvlab
