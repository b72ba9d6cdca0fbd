#pragma once

// Root of the theta-like series equation fixing the decay rate q of the
// approximate-solution coefficients f_n.
//
// The defining function on [0,1) is
//
//   g(x) = 2 (sum_{n>=0} x^{(2n+1)^2/4})^4
//        - (1/2 + sum_{n>=1} x^{n^2})^4
//        + 3 sum_{n>=0} x^{2n+1} / (1+x^{2n+1})^2,
//
// with elementary bracketing functions (valid on (0,1/2))
//
//   g_lo(x) = 2x - (1/2 + x + x^4/(1-x))^4 + 3x/(1+x)^2,
//   g_hi(x) = 2x/(1-x^2)^4 - (1/2 + x)^4 + 3x/(1-x^2),
//
// satisfying g_lo <= g <= g_hi. Since g_hi(13/1000) < 0 < g_lo(15/1000), the
// unique root q lies in (13/1000, 15/1000).
//
// Note the middle sum starts at n = 1: the n = 0 term would add the constant
// 1 inside the fourth power, which breaks both bracketing inequalities and
// leaves g without a root on (0,1/2). With the n >= 1 convention the bracket
// 1/2 + x <= 1/2 + sum x^{n^2} <= 1/2 + x + x^4/(1-x) holds term by term,
// which is the form the g_lo/g_hi certificates require.

#include <utility>

namespace specwave {

struct QRoot {
  double q = 0.0;
  double residual = 0.0;                 // |g(q)| at the returned point
  std::pair<double, double> bracket{0.0, 0.0};  // final enclosure, width <= tol
  int series_cutoff = 0;
};

// Truncated evaluation of g: every infinite sum stops at index `cutoff`.
// Admissible when the first omitted term of each sum is below 1e-18; terms
// decay like x^{n^2}, so cutoff 16 is ample anywhere near the root.
// Throws std::domain_error for x outside [0,1), std::invalid_argument for
// cutoff < 1.
double g(double x, int cutoff);

// The closed-form bracket (g_lo(x), g_hi(x)). Valid on (0, 1/2) only;
// throws std::domain_error outside.
std::pair<double, double> g_bounds(double x);

// Bisection on [13/1000, 15/1000] down to bracket width <= tol and
// |g(q)| <= tol. Before refining, certifies the starting bracket through
// g_bounds (g_hi(13/1000) < 0 and g_lo(15/1000) > 0); a sign violation
// throws std::runtime_error. The returned bracket is the final enclosure,
// not the certified starting one. Deterministic: repeated calls return
// bit-identical results.
QRoot solve_q(double tol);

inline constexpr int kDefaultSeriesCutoff = 16;

}  // namespace specwave
