#include "qsep/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <vector>

#include "qsep/error.hpp"
#include "qsep/states.hpp"

namespace qsep::io {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(std::string_view token) {
  const std::string t = trim(token);
  const auto slash = t.find('/');
  if (slash != std::string::npos) return parse_number(t.substr(0, slash)) / parse_number(t.substr(slash + 1));
  if (t.empty()) throw Error("parse", 0.0, "empty number");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) throw Error("parse", 0.0, "not a number: '" + t + "'");
  return v;
}

std::vector<double> parse_list(std::string_view body) {
  std::string s = trim(body);
  if (!s.empty() && s.front() == '<' && s.back() == '>') s = s.substr(1, s.size() - 2);
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string::npos ? s.size() : comma;
    out.push_back(parse_number(std::string_view(s).substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {
// Round-off residue of O(1) quantities; printed as 0.
constexpr double kDisplayZero = 1e-14;
}  // namespace

double round12(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < kDisplayZero) return 0.0;
  return std::strtod(format_number(x).c_str(), nullptr);
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw Error("parse", 0.0, "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  if (cols == 0) throw Error("parse", 0.0, "matrix rows must be non-empty");
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error("parse", static_cast<double>(r), "row " + std::to_string(r) + " has the wrong length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw Error("parse", static_cast<double>(r), "entries must be [re, im] number pairs");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

DensityMatrix state_from_json(const json& j, const Tolerances& tol) {
  if (j.is_object()) {
    if (!j.contains("matrix")) throw Error("parse", 0.0, "state object needs a \"matrix\" field");
    ComplexMatrix m = matrix_from_json(j.at("matrix"));
    Dims dims{static_cast<int>(m.rows()), 1};
    if (j.contains("dims")) {
      const json& d = j.at("dims");
      if (!d.is_array() || d.size() != 2) throw Error("parse", 0.0, "\"dims\" must be [dA, dB]");
      dims = Dims{d[0].get<int>(), d[1].get<int>()};
    }
    return DensityMatrix(std::move(m), dims, tol);
  }
  ComplexMatrix m = matrix_from_json(j);
  if (m.rows() != 4) throw Error("dims", static_cast<double>(m.rows()), "bare matrices must be 4x4 (two qubits); use {\"dims\": ..., \"matrix\": ...}");
  return DensityMatrix(std::move(m), Dims{2, 2}, tol);
}

json state_to_json(const DensityMatrix& rho) {
  return {{"dims", {rho.dims().a, rho.dims().b}}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityMatrix parse_state_spec(std::string_view raw, const Tolerances& tol) {
  const std::string spec = trim(raw);
  for (ExampleId id : kAllExamples)
    if (spec == to_string(id)) return example_state(id);
  if (spec == "iso:E") return isospectral_pair().first;
  if (spec == "iso:S") return isospectral_pair().second;
  if (spec.rfind("werner:", 0) == 0) {
    const auto values = parse_list(std::string_view(spec).substr(7));
    if (values.size() != 1) throw Error("parse", 0.0, "werner:<p> takes one parameter");
    return werner(values.front());
  }
  if (spec.rfind("pure:", 0) == 0) {
    const auto v = parse_list(std::string_view(spec).substr(5));
    PureStateAmplitudes a{};
    if (v.size() == 8)
      a = {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
    else if (v.size() == 4)
      a = {v[0], v[1], v[2], v[3]};
    else
      throw Error("parse", static_cast<double>(v.size()), "pure: expects 4 real or 8 (re, im) values");
    return pure_density(a, tol);
  }
  const std::filesystem::path path(spec);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw Error("parse", 0.0, "unknown state '" + spec + "' (not a registry name or a readable file)");
  std::ifstream in(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("parse", 0.0, "invalid JSON in " + spec + ": " + e.what());
  }
  return state_from_json(j, tol);
}

json report_to_json(const ClassificationReport& r) {
  return {
      {"concurrence", round12(r.concurrence)},
      {"entropy_diff_a", round12(r.entropy_diff_a)},
      {"entropy_diff_b", round12(r.entropy_diff_b)},
      {"cond_entropy_q1", round12(r.entropy_diff_a)},
      {"mutual", round12(r.mutual)},
      {"deficit", round12(r.deficit)},
      {"ppt_min_eig", round12(r.ppt_min_eig)},
      {"conditional_prob_defined", r.conditional_prob_defined},
      {"commutes_with_marginals", r.commutes_with_marginals},
      {"degenerate_frame", r.degenerate_frame},
      {"verdicts", r.verdicts},
  };
}

}  // namespace qsep::io
