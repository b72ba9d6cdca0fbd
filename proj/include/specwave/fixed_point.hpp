#pragma once

// Picard iteration of N_k on the ball B_{delta_k}(0), delta_k = k^{-1/2}/500,
// and a-posteriori diagnostics for the assembled solution u = u_k + A h.
//
// The contraction guarantee holds for k >= 79675; below that threshold the
// iteration is still run on request and the report is labeled as outside the
// certified range.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specwave/operators.hpp"

namespace specwave {

inline constexpr std::int64_t kTheoremMinK = 79675;

// Radius of the certified contraction ball.
double contraction_ball_radius(const FrequencyContext& ctx);

struct SolutionReport {
  std::int64_t k = 0;
  SpectralField h;
  SpectralField u;  // u_k + A h
  int iterations = 0;
  std::vector<double> increments;     // ||h_{j+1} - h_j|| per step
  double contraction_estimate = 0.0;  // max ratio of consecutive increments
  double pde_residual_norm = 0.0;     // ||L_k u + u^3||
  double distance_to_uk = 0.0;        // ||A h||
  bool theorem_range = false;         // k >= 79675; false marks empirical runs
};

// Iteration left the ball regime (||h|| > 10 delta_k): the contraction
// argument no longer applies at this k.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, std::vector<double> increments)
      : std::runtime_error(what), increments_(std::move(increments)) {}
  const std::vector<double>& increments() const { return increments_; }

 private:
  std::vector<double> increments_;
};

// max_iter exhausted before the increment dropped below tol.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> increments)
      : std::runtime_error(what), increments_(std::move(increments)) {}
  const std::vector<double>& increments() const { return increments_; }

 private:
  std::vector<double> increments_;
};

inline constexpr int kDefaultDegreeBox = 60;
inline constexpr double kDefaultIterTol = 1e-14;
inline constexpr int kDefaultMaxIter = 200;

// h_0 = 0; h_{j+1} = N_k(h_j), truncated to the degree box m+n+1 <= box
// (dropped mass goes to the tail budget); stops once the increment norm is
// <= tol. Throws ConvergenceError / DivergenceError as above,
// std::invalid_argument for nonpositive tol or max_iter < 1.
SolutionReport iterate(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                       const OperatorAConstants& a, double tol, int max_iter,
                       int box = kDefaultDegreeBox);

// ||L_k u + u^3||: the weighted residual of the original equation over the
// stored support, tail budgets included.
double verify_solution(const FrequencyContext& ctx, const SpectralField& u);

// norm(u) sqrt(k) > 5/4 - 139/42500: the solution is separated from zero.
bool nontriviality_check(const FrequencyContext& ctx, const SolutionReport& report);

}  // namespace specwave
