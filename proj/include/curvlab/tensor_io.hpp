#pragma once

#include <iosfwd>
#include <string>

#include "curvlab/tensor.hpp"

namespace curvlab {

enum class TensorFormat { kText, kStructured };

/// Text layout: one header line "n r kahler_flag 1", then one line per
/// canonical entry "i j alpha beta re im" (1-based indices, 17 significant
/// digits, lexicographic (i,j,alpha,beta), only tuples with (i,alpha) <=
/// (j,beta) stored). The structured variant is a JSON object with the same
/// field names; readers accept either.
void write_tensor(std::ostream& os, const CurvatureTensor& R,
                  TensorFormat format = TensorFormat::kText);
void write_tensor_file(const std::string& path, const CurvatureTensor& R,
                       TensorFormat format = TensorFormat::kText);

/// Reconstructs the Hermitian-conjugate half and validates the result.
/// Throws input_error on malformed records, out-of-range indices, duplicate
/// canonical tuples, or violated symmetries.
CurvatureTensor read_tensor(std::istream& is);
CurvatureTensor read_tensor_file(const std::string& path);

}  // namespace curvlab
