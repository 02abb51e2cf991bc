#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef CURVLAB_BIN
#define CURVLAB_BIN "./curvlab"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CURVLAB_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  while (fgets(buf, sizeof(buf), pipe)) out += buf;
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("models: valid files, known values, usage errors") {
  RunResult fs = run("models --name fubini_study --n 1");
  CHECK(fs.exit_code == 0);
  CHECK(fs.output.find("1 1 1 1 2 0") != std::string::npos);

  RunResult ball = run("models --name complex_ball --n 2 --out /tmp/curvlab_test_ball.tensor");
  CHECK(ball.exit_code == 0);
  std::ifstream f("/tmp/curvlab_test_ball.tensor");
  CHECK(f.good());

  CHECK(run("models --name no_such_model --n 2").exit_code == 2);
  CHECK(run("models --name random --n 2 --sign-class bogus").exit_code == 2);
}

TEST_CASE("classify: clean run and corrupted input") {
  run("models --name complex_ball --n 2 --out /tmp/curvlab_test_ball.tensor");
  RunResult ok = run(
      "classify --in /tmp/curvlab_test_ball.tensor --samples 1500 --restarts 4 "
      "--out /tmp/curvlab_test_report.json");
  CHECK(ok.exit_code == 0);
  std::ifstream rep("/tmp/curvlab_test_report.json");
  std::string text((std::istreambuf_iterator<char>(rep)), std::istreambuf_iterator<char>());
  CHECK(text.find("\"chain_violations\": []") != std::string::npos);

  std::ofstream bad("/tmp/curvlab_test_bad.tensor");
  bad << "2 2 1 1\n1 1 1 1 not_a_number 0\n";
  bad.close();
  CHECK(run("classify --in /tmp/curvlab_test_bad.tensor").exit_code == 2);
  CHECK(run("classify --in /tmp/curvlab_does_not_exist.tensor").exit_code == 2);
}

TEST_CASE("audit: zero violations normally, nonzero with the defect hook") {
  RunResult ok = run("audit --seed 1 --count 3 --n 2 --sign-class semi-dual-nakano-negative "
                     "--samples 1000 --restarts 3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("0 with chain violations") != std::string::npos);

  RunResult trivial = run("audit --count 0 --n 2 --sign-class semi-nakano-negative");
  CHECK(trivial.exit_code == 0);

  RunResult injected =
      run("audit --seed 1 --count 2 --n 2 --sign-class semi-dual-nakano-negative "
          "--samples 1000 --restarts 3 --inject-sign-flip");
  CHECK(injected.exit_code == 1);
  CHECK(injected.output.find("2=>3") != std::string::npos);
}

TEST_CASE("wp: degenerate curve is rejected with exit 2") {
  RunResult dup = run("wp --curve -4,0,9,0,-6,0,1 --refine 1");  // (x^2-1)^2(x^2-4)
  CHECK(dup.exit_code == 2);
  CHECK(run("wp --curve 1,2,3").exit_code == 2);
  RunResult ok = run("wp --refine 0 --out /tmp/curvlab_test_wp");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("match=yes") != std::string::npos);
}

TEST_SUITE_END();
