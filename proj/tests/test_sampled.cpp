#include <doctest.h>

#include "curvlab/positivity.hpp"
#include "curvlab/tensor.hpp"

using namespace curvlab;

namespace {
SampleBudget small_budget(uint64_t seed = 1) { return {2000, 6, 1e-9, seed}; }
}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("griffiths search on FS finds the orthogonal-pair minimum 1") {
  NotionVerdict v = classify_sampled(Notion::kGriffiths, model_fubini_study(3), small_budget());
  CHECK(v.sign == SignVerdict::kPositive);
  CHECK(!v.certified);
  CHECK(v.min_found == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(v.max_found == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(reevaluate_witness(model_fubini_study(3), v) ==
        doctest::Approx(v.extremal_value).epsilon(1e-10));
}

TEST_CASE("complex sectional search on the ball stays nonpositive") {
  NotionVerdict v =
      classify_sampled(Notion::kComplexSectional, model_complex_ball(3), small_budget());
  CHECK((v.sign == SignVerdict::kNonpositive || v.sign == SignVerdict::kNegative));
  CHECK(v.max_found <= 1e-9);
}

TEST_CASE("isotropic extremum: ball nonpositive, flat zero, blend indefinite") {
  NotionVerdict ball = isotropic_extremum(model_complex_ball(2), small_budget());
  CHECK(ball.max_found <= 1e-9);
  NotionVerdict flat = isotropic_extremum(model_flat(2), small_budget());
  CHECK(flat.both_semi);
  CHECK(flat.extremal_value == doctest::Approx(0.0));
  // FS - ball blend in block form: indefinite operator with both-sign witnesses
  CurvatureTensor blend(2, 2, true);
  CurvatureTensor fs = model_fubini_study(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          double sgn = (i == 0 && j == 0 && k == 0 && l == 0) ? -3.0 : 1.0;
          blend.set(i, j, k, l, sgn * fs(i, j, k, l));
        }
  blend.canonicalize_kahler();
  NotionVerdict mix = isotropic_extremum(blend, small_budget());
  CHECK(mix.sign == SignVerdict::kIndefinite);
  CHECK(mix.min_found < -1e-9);
  CHECK(mix.max_found > 1e-9);
  CHECK_THROWS_AS(isotropic_extremum(model_fubini_study(1), small_budget()), input_error);
}

TEST_CASE("search is deterministic in the seed") {
  CurvatureTensor R = random_kahler_tensor(77, 2, SignClass::kUnconstrained);
  NotionVerdict a = classify_sampled(Notion::kSiuStrong, R, small_budget(9));
  NotionVerdict b = classify_sampled(Notion::kSiuStrong, R, small_budget(9));
  CHECK(a.max_found == b.max_found);
  CHECK(a.min_found == b.min_found);
  CHECK(a.witness == b.witness);
}

TEST_CASE("injected sign violation is found with a witness") {
  CurvatureTensor bad = model_complex_ball(2);
  // flip the sign of the R_{11,22} / R_{22,11} pair: griffiths(e1, e2) = +1
  bad.set(0, 0, 1, 1, cplx{1.0, 0.0});
  bad.set(1, 1, 0, 0, cplx{1.0, 0.0});
  bad.canonicalize_hermitian();
  NotionVerdict v = classify_sampled(Notion::kGriffiths, bad, small_budget());
  CHECK(v.max_found > 1e-6);
  CHECK((v.sign == SignVerdict::kIndefinite || v.sign == SignVerdict::kPositive ||
         v.sign == SignVerdict::kNonnegative));
  CHECK(reevaluate_witness(bad, v) == doctest::Approx(v.extremal_value).epsilon(1e-10));
}

TEST_CASE("budget validation") {
  CurvatureTensor R = model_fubini_study(2);
  SampleBudget bad{0, 5, 1e-9, 1};
  CHECK_THROWS_AS(classify_sampled(Notion::kGriffiths, R, bad), input_error);
  SampleBudget bad2{100, 0, 1e-9, 1};
  CHECK_THROWS_AS(classify_sampled(Notion::kGriffiths, R, bad2), input_error);
}

TEST_SUITE_END();
