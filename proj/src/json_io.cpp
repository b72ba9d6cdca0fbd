#include "specwave/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

namespace specwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::int64_t parse_positive_int(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("field_from_json: malformed rho fraction");
  return std::stoll(s);
}

}  // namespace

nlohmann::json field_to_json(const SpectralField& v) {
  nlohmann::json modes = nlohmann::json::array();
  for (const auto& [mode, c] : v.coeffs())
    modes.push_back({{"m", mode.m}, {"n", mode.n}, {"c", c}});
  return {{"rho", std::to_string(v.weight().num()) + "/" + std::to_string(v.weight().den())},
          {"tail", v.tail_budget()},
          {"modes", std::move(modes)}};
}

SpectralField field_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rho") || !j.contains("tail") || !j.contains("modes"))
    throw std::invalid_argument("field_from_json: expected object with rho, tail, modes");
  if (!j["rho"].is_string())
    throw std::invalid_argument("field_from_json: rho must be a fraction string");
  const std::string rho = j["rho"].get<std::string>();
  const std::size_t slash = rho.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("field_from_json: rho must be written num/den");
  const std::int64_t num = parse_positive_int(rho.substr(0, slash));
  const std::int64_t den = parse_positive_int(rho.substr(slash + 1));
  if (num <= den || den <= 0)
    throw std::invalid_argument("field_from_json: rho must be a fraction above 1");
  if (!j["tail"].is_number() || j["tail"].get<double>() < 0.0)
    throw std::invalid_argument("field_from_json: tail must be a non-negative number");
  if (!j["modes"].is_array())
    throw std::invalid_argument("field_from_json: modes must be an array");

  SpectralField v{WeightConfig{num, den}};
  std::set<std::pair<int, int>> seen;
  for (const nlohmann::json& entry : j["modes"]) {
    if (!entry.is_object() || !entry.contains("m") || !entry.contains("n") ||
        !entry.contains("c") || !entry["m"].is_number_integer() ||
        !entry["n"].is_number_integer() || !entry["c"].is_number())
      throw std::invalid_argument("field_from_json: each mode needs integer m, n and numeric c");
    const int m = entry["m"].get<int>();
    const int n = entry["n"].get<int>();
    if (m < 0 || n < 0)
      throw std::invalid_argument("field_from_json: mode indices must be canonical");
    if (!seen.insert({m, n}).second)
      throw std::invalid_argument("field_from_json: duplicate mode entry");
    v.set(m, n, entry["c"].get<double>());
  }
  v.set_tail(j["tail"].get<double>());
  return v;
}

nlohmann::json solution_report_to_json(const SolutionReport& report, double q,
                                       const nlohmann::json& config) {
  const std::int64_t k = report.k;
  return {{"k", k},
          {"omega", {{"num", 2 * k + 1}, {"den", 2 * k},
                     {"value", static_cast<double>(2 * k + 1) / static_cast<double>(2 * k)}}},
          {"q", q},
          {"iterations", report.iterations},
          {"increments", report.increments},
          {"contraction", report.contraction_estimate},
          {"pde_residual", report.pde_residual_norm},
          {"distance_to_uk", report.distance_to_uk},
          {"theorem_range", report.theorem_range},
          {"h", field_to_json(report.h)},
          {"u", field_to_json(report.u)},
          {"config", config}};
}

nlohmann::json bound_report_to_json(const BoundReport& report) {
  nlohmann::json j{{"name", report.name},
                   {"measured", report.measured},
                   {"bound", report.bound},
                   {"margin", report.margin},
                   {"pass", report.pass},
                   {"truncation", {{"mode_cutoff", report.truncation.mode_cutoff},
                                   {"tail_added", report.truncation.tail_added},
                                   {"note", report.truncation.note}}}};
  if (report.k)
    j["k"] = *report.k;
  else
    j["k"] = nullptr;
  return j;
}

void write_grid_csv(std::ostream& out, const SpectralField& v, int n_tau, int n_x,
                    const nlohmann::json& config) {
  if (n_tau < 2 || n_x < 2)
    throw std::invalid_argument("write_grid_csv: need at least two nodes per axis");
  for (const auto& [key, value] : config.items())
    out << "# " << key << ": " << value.dump() << "\n";
  out << "tau,x,u\n";
  out.precision(17);
  for (int i = 0; i < n_tau; ++i) {
    const double tau = 2.0 * kPi * i / (n_tau - 1);
    for (int jx = 0; jx < n_x; ++jx) {
      const double x = kPi * jx / (n_x - 1);
      out << tau << "," << x << "," << evaluate(v, tau, x) << "\n";
    }
  }
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace specwave
