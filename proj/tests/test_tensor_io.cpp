#include <doctest.h>

#include <sstream>

#include "curvlab/tensor_io.hpp"

using namespace curvlab;

TEST_SUITE_BEGIN("core");

TEST_CASE("text round trip is bit-identical") {
  CurvatureTensor R = random_kahler_tensor(7, 3, SignClass::kUnconstrained);
  std::stringstream ss;
  write_tensor(ss, R);
  CurvatureTensor back = read_tensor(ss);
  CHECK(back.n() == 3);
  CHECK(back.kahler());
  for (std::size_t k = 0; k < R.entries().size(); ++k) CHECK(back.entries()[k] == R.entries()[k]);
}

TEST_CASE("structured round trip matches the text variant") {
  CurvatureTensor R = random_kahler_tensor(2, 2, SignClass::kSemiNakanoNegative);
  std::stringstream ss;
  write_tensor(ss, R, TensorFormat::kStructured);
  CHECK(ss.str().front() == '{');
  CurvatureTensor back = read_tensor(ss);
  for (std::size_t k = 0; k < R.entries().size(); ++k) CHECK(back.entries()[k] == R.entries()[k]);
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(([] {
                    std::stringstream ss("2 2 1");
                    return read_tensor(ss);
                  })(),
                  input_error);
  CHECK_THROWS_AS(([] {
                    std::stringstream ss("1 1 1 1\n1 1 1 1 2.0\n");
                    return read_tensor(ss);
                  })(),
                  input_error);
  CHECK_THROWS_AS(([] {
                    std::stringstream ss("1 1 1 2\n");  // bad version
                    return read_tensor(ss);
                  })(),
                  input_error);
}

TEST_CASE("index range and duplicate detection") {
  CHECK_THROWS_WITH_AS(([] {
                         std::stringstream ss("1 1 1 1\n2 1 1 1 1.0 0.0\n");
                         return read_tensor(ss);
                       })(),
                       doctest::Contains("out of range"), input_error);
  CHECK_THROWS_WITH_AS(([] {
                         std::stringstream ss("1 1 1 1\n1 1 1 1 1.0 0.0\n1 1 1 1 2.0 0.0\n");
                         return read_tensor(ss);
                       })(),
                       doctest::Contains("duplicate"), input_error);
  // missing entries
  CHECK_THROWS_WITH_AS(([] {
                         std::stringstream ss("2 1 1 1\n1 1 1 1 1.0 0.0\n");
                         return read_tensor(ss);
                       })(),
                       doctest::Contains("missing"), input_error);
}

TEST_CASE("reconstruction enforces the symmetry invariants") {
  // a kahler-flagged file whose entries cannot satisfy the Bianchi symmetry
  std::stringstream ss;
  ss << "2 2 1 1\n";
  int count = 0;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
          if (i > j || (i == j && a > b)) continue;
          // R_{11,22} = 1 with R_{12,21} = 0 breaks the first Bianchi symmetry
          double re = (i == 1 && j == 1 && a == 2 && b == 2) ? 1.0 : 0.0;
          ss << i << " " << j << " " << a << " " << b << " " << re << " 0.0\n";
          ++count;
        }
  CHECK(count == 10);
  CHECK_THROWS_AS(read_tensor(ss), input_error);
}

TEST_SUITE_END();
