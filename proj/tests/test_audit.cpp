#include <doctest.h>

#include "curvlab/positivity.hpp"
#include "curvlab/report_io.hpp"

using namespace curvlab;

namespace {
SampleBudget budget(uint64_t seed = 1) { return {2000, 6, 1e-9, seed}; }
}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("ball and FS audits run the full chain without violations") {
  ClassificationReport ball = implication_audit(model_complex_ball(3), budget());
  CHECK(ball.chain_violations.empty());
  for (const auto& v : ball.verdicts) {
    INFO(to_string(v.notion));
    CHECK(v.max_found <= 1e-8);
  }
  CHECK(ball.find(Notion::kNakano)->kernel_dim == 3);
  CHECK(ball.find(Notion::kCurvatureOperator)->certified);
  CHECK(!ball.find(Notion::kComplexSectional)->certified);
  // ball sectional curvature lies in [-2, -1/2]: exactly quarter-pinched
  CHECK(ball.pinching_applicable);
  CHECK(ball.pinching_ratio == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(ball.weakly_quarter_pinched);

  ClassificationReport fs = implication_audit(model_fubini_study(3), budget());
  CHECK(fs.chain_violations.empty());
  for (const auto& v : fs.verdicts) {
    INFO(to_string(v.notion));
    CHECK(v.min_found >= -1e-8);
  }
}

TEST_CASE("random constrained tensors audit clean") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    for (auto cls : {SignClass::kSemiDualNakanoNegative, SignClass::kSemiNakanoNegative,
                     SignClass::kUnconstrained}) {
      CurvatureTensor R = random_kahler_tensor(seed, 2 + seed % 2, cls);
      ClassificationReport rep = implication_audit(R, budget(seed));
      INFO(to_string(cls), " seed ", seed);
      CHECK(rep.chain_violations.empty());
    }
  }
}

TEST_CASE("defect hook makes the audit fire 2=>3") {
  CurvatureTensor R = random_kahler_tensor(4, 2, SignClass::kSemiDualNakanoNegative);
  AuditOptions opts;
  opts.negate_operator_hook = true;
  ClassificationReport rep = implication_audit(R, budget(), opts);
  bool fired = false;
  for (const auto& v : rep.chain_violations) fired |= v == "2=>3";
  CHECK(fired);
}

TEST_CASE("bundle report covers the certified notions only") {
  CurvatureTensor R(2, 3, false);  // non-Kahler bundle tensor
  R.set(0, 0, 0, 0, cplx{1, 0});
  R.canonicalize_hermitian();
  ClassificationReport rep = classify_bundle(R, budget());
  CHECK(rep.verdicts.size() == 3);
  CHECK(rep.chain_violations.empty());
  CHECK_THROWS_AS(implication_audit(R, budget()), input_error);
}

TEST_CASE("report serialization carries the verdict fields") {
  ClassificationReport rep = implication_audit(model_complex_ball(2), budget());
  std::string json = report_to_json(rep);
  CHECK(json.find("\"nakano\"") != std::string::npos);
  CHECK(json.find("chain_violations") != std::string::npos);
  CHECK(json.find("kernel_dim") != std::string::npos);
}

TEST_SUITE_END();
