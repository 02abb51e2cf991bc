#include "curvlab/tensor_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace curvlab {

namespace {

bool canonical(int i, int j, int a, int b) { return i < j || (i == j && a <= b); }

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void fill_entry(CurvatureTensor& R, std::set<std::size_t>& seen, int i, int j, int a, int b,
                double re, double im) {
  const int n = R.n(), r = R.r();
  if (i < 1 || i > n || j < 1 || j > n || a < 1 || a > r || b < 1 || b > r)
    throw input_error("tensor entry index out of range");
  if (!canonical(i - 1, j - 1, a - 1, b - 1))
    throw input_error("tensor entry is not in canonical order");
  std::size_t key = R.idx(i - 1, j - 1, a - 1, b - 1);
  if (!seen.insert(key).second) throw input_error("duplicate canonical tensor entry");
  R.set(i - 1, j - 1, a - 1, b - 1, cplx{re, im});
  R.set(j - 1, i - 1, b - 1, a - 1, cplx{re, -im});
}

CurvatureTensor finish(CurvatureTensor R, std::size_t count) {
  const std::size_t m = static_cast<std::size_t>(R.n()) * R.r();
  if (count != m * (m + 1) / 2) throw input_error("tensor file has missing canonical entries");
  auto viol = validate(R, 1e-12);
  if (!viol.empty()) {
    std::ostringstream os;
    os << "reconstructed tensor violates symmetries (" << viol.size() << " violations; first: "
       << viol.front().kind << ")";
    throw input_error(os.str());
  }
  return R;
}

CurvatureTensor read_structured(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("invalid structured tensor file: ") + e.what());
  }
  if (!doc.contains("n") || !doc.contains("r") || !doc.contains("kahler_flag") ||
      !doc.contains("entries"))
    throw input_error("structured tensor file is missing required fields");
  if (doc.value("format_version", std::string("1")) != "1")
    throw input_error("unsupported tensor format version");
  CurvatureTensor R(doc["n"].get<int>(), doc["r"].get<int>(), doc["kahler_flag"].get<bool>());
  std::set<std::size_t> seen;
  std::size_t count = 0;
  for (const auto& e : doc["entries"]) {
    if (!e.contains("i") || !e.contains("j") || !e.contains("alpha") || !e.contains("beta") ||
        !e.contains("re") || !e.contains("im"))
      throw input_error("structured tensor entry is missing fields");
    fill_entry(R, seen, e["i"].get<int>(), e["j"].get<int>(), e["alpha"].get<int>(),
               e["beta"].get<int>(), e["re"].get<double>(), e["im"].get<double>());
    ++count;
  }
  return finish(std::move(R), count);
}

}  // namespace

void write_tensor(std::ostream& os, const CurvatureTensor& R, TensorFormat format) {
  const int n = R.n(), r = R.r();
  if (format == TensorFormat::kStructured) {
    nlohmann::json doc;
    doc["n"] = n;
    doc["r"] = r;
    doc["kahler_flag"] = R.kahler();
    doc["format_version"] = "1";
    auto entries = nlohmann::json::array();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) {
            if (!canonical(i, j, a, b)) continue;
            cplx v = R(i, j, a, b);
            entries.push_back({{"i", i + 1},
                               {"j", j + 1},
                               {"alpha", a + 1},
                               {"beta", b + 1},
                               {"re", v.real()},
                               {"im", v.imag()}});
          }
    doc["entries"] = std::move(entries);
    os << doc.dump(1) << "\n";
    return;
  }
  os << n << " " << r << " " << (R.kahler() ? 1 : 0) << " 1\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          if (!canonical(i, j, a, b)) continue;
          cplx v = R(i, j, a, b);
          os << (i + 1) << " " << (j + 1) << " " << (a + 1) << " " << (b + 1) << " "
             << fmt17(v.real()) << " " << fmt17(v.imag()) << "\n";
        }
}

void write_tensor_file(const std::string& path, const CurvatureTensor& R, TensorFormat format) {
  std::ofstream os(path);
  if (!os) throw input_error("cannot open tensor file for writing: " + path);
  write_tensor(os, R, format);
}

CurvatureTensor read_tensor(std::istream& is) {
  std::ostringstream buf;
  buf << is.rdbuf();
  std::string text = buf.str();
  std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw input_error("empty tensor file");
  if (text[pos] == '{') return read_structured(text);

  std::istringstream ss(text);
  int n = 0, r = 0, kahler = 0;
  std::string version;
  if (!(ss >> n >> r >> kahler >> version)) throw input_error("malformed tensor header");
  if (version != "1") throw input_error("unsupported tensor format version: " + version);
  if (n < 1 || r < 1 || (kahler != 0 && kahler != 1)) throw input_error("malformed tensor header");
  CurvatureTensor R(n, r, kahler == 1);
  std::set<std::size_t> seen;
  std::size_t count = 0;
  int i, j, a, b;
  double re, im;
  while (ss >> i) {
    if (!(ss >> j >> a >> b >> re >> im)) throw input_error("malformed tensor entry record");
    fill_entry(R, seen, i, j, a, b, re, im);
    ++count;
  }
  if (!ss.eof()) throw input_error("trailing garbage in tensor file");
  return finish(std::move(R), count);
}

CurvatureTensor read_tensor_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw input_error("cannot open tensor file: " + path);
  return read_tensor(is);
}

}  // namespace curvlab
