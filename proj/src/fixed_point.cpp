#include "specwave/fixed_point.hpp"

#include <cmath>

#include "specwave/triple_product.hpp"

namespace specwave {

double contraction_ball_radius(const FrequencyContext& ctx) {
  return 1.0 / (500.0 * std::sqrt(static_cast<double>(ctx.k)));
}

SolutionReport iterate(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                       const OperatorAConstants& a, double tol, int max_iter, int box) {
  if (!(tol > 0.0)) throw std::invalid_argument("iterate: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("iterate: max_iter must be >= 1");
  if (box < 2) throw std::invalid_argument("iterate: degree box too small");

  const double delta = contraction_ball_radius(ctx);
  SpectralField h{WeightConfig()};
  std::vector<double> increments;
  increments.reserve(64);

  bool converged = false;
  int steps = 0;
  while (steps < max_iter) {
    SpectralField next = truncate_by_degree(residual_N(ctx, coeffs, a, h), box);
    ++steps;
    const double incr = norm(linear_combine(1.0, next, -1.0, h));
    increments.push_back(incr);
    h = std::move(next);
    if (norm(h) > 10.0 * delta)
      throw DivergenceError("iterate: left the contraction ball regime (||h|| > 10 delta_k)",
                            std::move(increments));
    if (incr <= tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw ConvergenceError("iterate: increment above tolerance after max_iter steps",
                           std::move(increments));

  SolutionReport report;
  report.k = ctx.k;
  report.iterations = steps;
  report.increments = increments;
  double ratio = 0.0;
  for (std::size_t i = 0; i + 1 < increments.size(); ++i)
    if (increments[i] > 0.0) {
      const double r = increments[i + 1] / increments[i];
      if (r > ratio) ratio = r;
    }
  report.contraction_estimate = ratio;

  const SpectralField uk = build_uk(ctx, coeffs, h.weight());
  const SpectralField ah = apply_A(a, h);
  report.u = linear_combine(1.0, uk, 1.0, ah);
  report.h = std::move(h);
  report.distance_to_uk = norm(ah);
  report.pde_residual_norm = verify_solution(ctx, report.u);
  report.theorem_range = ctx.k >= kTheoremMinK;
  return report;
}

double verify_solution(const FrequencyContext& ctx, const SpectralField& u) {
  const SpectralField lu = apply_L(ctx, u);
  const SpectralField cube = triple_product(u, u, u);
  return norm(linear_combine(1.0, lu, 1.0, cube));
}

bool nontriviality_check(const FrequencyContext& ctx, const SolutionReport& report) {
  const double threshold = 5.0 / 4.0 - 139.0 / 42500.0;
  return norm(report.u) * std::sqrt(static_cast<double>(ctx.k)) > threshold;
}

}  // namespace specwave
