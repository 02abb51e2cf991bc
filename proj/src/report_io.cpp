#include "curvlab/report_io.hpp"

#include <fstream>

#include <json.hpp>

namespace curvlab {

namespace {

nlohmann::json verdict_to_json(const NotionVerdict& v) {
  nlohmann::json j;
  j["notion"] = to_string(v.notion);
  j["sign"] = to_string(v.sign);
  j["certified"] = v.certified;
  j["extremal_value"] = v.extremal_value;
  j["min_found"] = v.min_found;
  j["max_found"] = v.max_found;
  if (v.both_semi) j["both_semi"] = true;
  if (v.kernel_dim >= 0) j["kernel_dim"] = v.kernel_dim;
  j["witness"] = v.witness;
  return j;
}

}  // namespace

std::string report_to_json(const ClassificationReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["r"] = report.r;
  j["kahler"] = report.kahler;
  j["tol"] = report.tol;
  auto arr = nlohmann::json::array();
  for (const auto& v : report.verdicts) arr.push_back(verdict_to_json(v));
  j["verdicts"] = std::move(arr);
  j["chain_violations"] = report.chain_violations;
  if (report.pinching_applicable) {
    j["pinching"] = {{"ratio", report.pinching_ratio},
                     {"weakly_quarter_pinched", report.weakly_quarter_pinched}};
  }
  return j.dump(1);
}

void write_report_file(const std::string& path, const ClassificationReport& report) {
  std::ofstream os(path);
  if (!os) throw input_error("cannot open report file for writing: " + path);
  os << report_to_json(report) << "\n";
}

}  // namespace curvlab
