// Command-line front end: root finding, approximation building, the
// fixed-point solve, the bound suite, the time-domain cross check, and CSV
// grid export. Outputs are JSON (reports, fields) or CSV (grids), each
// embedding the run configuration and the computed q.
//
// Exit codes: 0 success or all checks passed, 1 failed check or
// non-convergence, 2 usage or malformed input.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "CLI11.hpp"
#include "specwave/approx.hpp"
#include "specwave/bounds.hpp"
#include "specwave/fixed_point.hpp"
#include "specwave/json_io.hpp"
#include "specwave/operators.hpp"
#include "specwave/qroot.hpp"
#include "specwave/timedomain.hpp"

namespace {

using nlohmann::json;
using namespace specwave;

void emit_json(const json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out_path, j);
}

// Accepts either a bare field artifact or a report that carries one under "u".
SpectralField field_of(const json& artifact) {
  if (artifact.is_object() && artifact.contains("modes")) return field_from_json(artifact);
  if (artifact.is_object() && artifact.contains("u")) return field_from_json(artifact["u"]);
  throw std::invalid_argument("input artifact holds no field (expected modes or u)");
}

double omega_of(const json& artifact) {
  if (artifact.contains("omega") && artifact["omega"].is_object() &&
      artifact["omega"].contains("value"))
    return artifact["omega"]["value"].get<double>();
  if (artifact.contains("k") && artifact["k"].is_number_integer()) {
    const double k = static_cast<double>(artifact["k"].get<std::int64_t>());
    return (2.0 * k + 1.0) / (2.0 * k);
  }
  throw std::invalid_argument("input artifact carries neither omega nor k");
}

json omega_json(std::int64_t k) {
  return {{"num", 2 * k + 1},
          {"den", 2 * k},
          {"value", static_cast<double>(2 * k + 1) / static_cast<double>(2 * k)}};
}

int run(int argc, char** argv) {
  CLI::App app{"Time-periodic solutions of the cubic wave equation in a weighted mode space"};
  app.require_subcommand(1);
  int exit_code = 0;

  // solve-q
  double q_tol = 1e-15;
  std::string q_out;
  CLI::App* sq = app.add_subcommand("solve-q", "Locate the root q of the theta-series equation");
  sq->add_option("--tol", q_tol, "bisection tolerance")->check(CLI::PositiveNumber);
  sq->add_option("--out", q_out, "write JSON here instead of stdout");
  sq->callback([&] {
    QRoot root = solve_q(q_tol);
    json config{{"subcommand", "solve-q"}, {"tol", q_tol}, {"out", q_out}};
    emit_json(json{{"q", root.q},
                   {"residual", root.residual},
                   {"bracket", {root.bracket.first, root.bracket.second}},
                   {"series_cutoff", root.series_cutoff},
                   {"config", config}},
              q_out);
  });

  // build-approx
  std::int64_t ba_k = 0;
  int ba_nf = kDefaultNf;
  std::string ba_out;
  CLI::App* ba = app.add_subcommand("build-approx", "Build the explicit approximate solution");
  ba->add_option("--k", ba_k, "frequency index")->required()->check(CLI::PositiveNumber);
  ba->add_option("--nf", ba_nf, "diagonal coefficient cutoff")->check(CLI::PositiveNumber);
  ba->add_option("--out", ba_out, "write JSON here instead of stdout");
  ba->callback([&] {
    QRoot root = solve_q(1e-15);
    ApproxCoefficients coeffs = build_coeffs(root.q, ba_nf);
    FrequencyContext ctx{ba_k};
    SpectralField u = build_uk(ctx, coeffs);
    json config{{"subcommand", "build-approx"}, {"k", ba_k}, {"nf", ba_nf}, {"out", ba_out}};
    emit_json(json{{"k", ba_k},
                   {"omega", omega_json(ba_k)},
                   {"q", root.q},
                   {"beta0", coeffs.beta0()},
                   {"beta1", coeffs.beta1()},
                   {"u", field_to_json(u)},
                   {"config", config}},
              ba_out);
  });

  // solve
  std::int64_t s_k = 0;
  double s_tol = kDefaultIterTol;
  int s_max_iter = kDefaultMaxIter;
  int s_box = kDefaultDegreeBox;
  int s_nf = kDefaultNf;
  std::string s_out;
  CLI::App* sv = app.add_subcommand("solve", "Run the fixed-point iteration for the correction");
  sv->add_option("--k", s_k, "frequency index")->required()->check(CLI::PositiveNumber);
  sv->add_option("--tol", s_tol, "increment tolerance")->check(CLI::PositiveNumber);
  sv->add_option("--max-iter", s_max_iter, "iteration cap")->check(CLI::PositiveNumber);
  sv->add_option("--box", s_box, "degree box for iteration truncation")
      ->check(CLI::PositiveNumber);
  sv->add_option("--nf", s_nf, "diagonal coefficient cutoff")->check(CLI::PositiveNumber);
  sv->add_option("--out", s_out, "write JSON here instead of stdout");
  sv->callback([&] {
    QRoot root = solve_q(1e-15);
    ApproxCoefficients coeffs = build_coeffs(root.q, s_nf);
    FrequencyContext ctx{s_k};
    OperatorAConstants a = build_A(coeffs);
    SolutionReport report = iterate(ctx, coeffs, a, s_tol, s_max_iter, s_box);
    json config{{"subcommand", "solve"}, {"k", s_k},        {"tol", s_tol},
                {"max_iter", s_max_iter}, {"box", s_box},   {"nf", s_nf},
                {"out", s_out}};
    json j = solution_report_to_json(report, root.q, config);
    j["nontrivial"] = nontriviality_check(ctx, report);
    emit_json(j, s_out);
  });

  // verify-bounds
  std::int64_t vb_k = 100;
  std::int64_t vb_cert_k = kTheoremMinK;
  int vb_scan = kDefaultScanDepth;
  bool vb_strict = false;
  std::uint64_t vb_seed = kDefaultSeed;
  std::string vb_out;
  CLI::App* vb = app.add_subcommand("verify-bounds", "Run the full bound suite");
  vb->add_option("--k", vb_k, "frequency index for the lemma checks")
      ->check(CLI::Range(std::int64_t{100}, std::int64_t{100000000}));
  vb->add_option("--cert-k", vb_cert_k, "frequency index for the contraction certificate")
      ->check(CLI::PositiveNumber);
  vb->add_option("--scan-depth", vb_scan, "largest column index measured directly")
      ->check(CLI::Range(8, 4096));
  vb->add_flag("--strict", vb_strict, "re-run the delicate comparisons in exact rationals");
  vb->add_option("--seed", vb_seed, "seed for the sampled checks");
  vb->add_option("--out", vb_out, "write JSON here instead of stdout");
  vb->callback([&] {
    QRoot root = solve_q(1e-15);
    std::vector<BoundReport> reports = run_bound_suite(vb_k, vb_cert_k, vb_scan, vb_strict, vb_seed);
    json config{{"subcommand", "verify-bounds"}, {"k", vb_k},       {"cert_k", vb_cert_k},
                {"scan_depth", vb_scan},          {"strict", vb_strict}, {"seed", vb_seed},
                {"out", vb_out}};
    json arr = json::array();
    arr.push_back(json{{"name", "run_config"},
                       {"k", vb_k},
                       {"measured", 0.0},
                       {"bound", 0.0},
                       {"margin", 0.0},
                       {"pass", true},
                       {"truncation",
                        {{"mode_cutoff", vb_scan}, {"tail_added", 0.0}, {"note", "configuration echo"}}},
                       {"config", config},
                       {"q", root.q}});
    bool all_pass = true;
    for (const BoundReport& r : reports) {
      all_pass = all_pass && r.pass;
      arr.push_back(bound_report_to_json(r));
    }
    emit_json(arr, vb_out);
    if (!all_pass) exit_code = 1;
  });

  // timecheck
  std::string tc_in;
  int tc_nx = kDefaultNx;
  std::int64_t tc_nt = kDefaultNt;
  bool tc_fd = false;
  std::string tc_out;
  CLI::App* tc = app.add_subcommand("timecheck", "Integrate one period from the field's initial data");
  tc->add_option("--in", tc_in, "solution or field JSON")->required();
  tc->add_option("--nx", tc_nx, "spatial nodes")->check(CLI::Range(16, 1 << 20));
  tc->add_option("--nt", tc_nt, "time steps per period")
      ->check(CLI::Range(std::int64_t{1000}, std::int64_t{1} << 40));
  tc->add_flag("--fd", tc_fd, "second-order finite differences instead of the sine-spectral Laplacian");
  tc->add_option("--out", tc_out, "write JSON here instead of stdout");
  tc->callback([&] {
    json artifact = read_json_file(tc_in);
    SpectralField u = field_of(artifact);
    const double omega = omega_of(artifact);
    GridState start = initial_data(u, omega, tc_nx);
    IntegrationResult res = integrate_period(
        start, omega, tc_nt, tc_fd ? SpatialScheme::FiniteDifference : SpatialScheme::Spectral);
    json config{{"subcommand", "timecheck"}, {"in", tc_in}, {"nx", tc_nx},
                {"nt", tc_nt},               {"fd", tc_fd}, {"out", tc_out}};
    json j{{"return_error", res.return_error},
           {"energy_drift", res.energy_drift},
           {"omega", omega},
           {"config", config}};
    if (artifact.contains("q")) j["q"] = artifact["q"];
    emit_json(j, tc_out);
  });

  // export-grid
  std::string eg_in;
  int eg_ntau = 128;
  int eg_nx = 128;
  std::string eg_out;
  CLI::App* eg = app.add_subcommand("export-grid", "Sample a field on a uniform grid as CSV");
  eg->add_option("--in", eg_in, "solution or field JSON")->required();
  eg->add_option("--ntau", eg_ntau, "temporal nodes over [0, 2pi]")->check(CLI::Range(2, 1 << 20));
  eg->add_option("--nx", eg_nx, "spatial nodes over [0, pi]")->check(CLI::Range(2, 1 << 20));
  eg->add_option("--out", eg_out, "write CSV here instead of stdout");
  eg->callback([&] {
    json artifact = read_json_file(eg_in);
    SpectralField u = field_of(artifact);
    json config{{"subcommand", "export-grid"}, {"in", eg_in}, {"ntau", eg_ntau},
                {"nx", eg_nx},                 {"out", eg_out}};
    if (artifact.contains("q")) config["q"] = artifact["q"];
    if (eg_out.empty()) {
      write_grid_csv(std::cout, u, eg_ntau, eg_nx, config);
    } else {
      std::ofstream f(eg_out);
      if (!f) throw std::runtime_error("cannot write " + eg_out);
      write_grid_csv(f, u, eg_ntau, eg_nx, config);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
