#pragma once

// JSON serialization of fields and reports, plus the CSV grid dump.
//
// Field schema:
//   {"rho": "1001/1000", "tail": 0.0, "modes": [{"m":0,"n":0,"c":1.0}, ...]}
// with modes sorted by (m, n). Doubles round-trip exactly (shortest
// representation that parses back to the same value).

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "specwave/bounds.hpp"
#include "specwave/field.hpp"
#include "specwave/fixed_point.hpp"

namespace specwave {

nlohmann::json field_to_json(const SpectralField& v);

// Validates shape, the rho fraction, non-negative tail and canonical indices;
// throws std::invalid_argument on any malformed content.
SpectralField field_from_json(const nlohmann::json& j);

// Solution report with the run configuration echoed under "config".
nlohmann::json solution_report_to_json(const SolutionReport& report, double q,
                                       const nlohmann::json& config);

nlohmann::json bound_report_to_json(const BoundReport& report);

// Grid dump: '#' comment lines echoing the configuration, one "tau,x,u"
// header, then rows in row-major order over the inclusive uniform grid
// [0, 2pi] x [0, pi] with n_tau x n_x nodes; values come from evaluate().
void write_grid_csv(std::ostream& out, const SpectralField& v, int n_tau, int n_x,
                    const nlohmann::json& config);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace specwave
