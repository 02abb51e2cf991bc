#pragma once

#include <string>

#include "curvlab/positivity.hpp"

namespace curvlab {

std::string report_to_json(const ClassificationReport& report);
void write_report_file(const std::string& path, const ClassificationReport& report);

}  // namespace curvlab
