#include "specwave/qroot.hpp"

#include <cmath>
#include <stdexcept>

namespace specwave {

double g(double x, int cutoff) {
  if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("g: x must lie in [0,1)");
  if (cutoff < 1) throw std::invalid_argument("g: cutoff must be >= 1");

  double s1 = 0.0;  // sum x^{(2n+1)^2/4}
  for (int n = cutoff; n >= 0; --n) {
    const double e = (2.0 * n + 1.0) * (2.0 * n + 1.0) / 4.0;
    s1 += std::pow(x, e);
  }
  double s2 = 0.0;  // sum_{n>=1} x^{n^2}
  for (int n = cutoff; n >= 1; --n) s2 += std::pow(x, static_cast<double>(n) * n);
  s2 += 0.5;
  double s3 = 0.0;  // sum x^{2n+1}/(1+x^{2n+1})^2
  for (int n = cutoff; n >= 0; --n) {
    const double t = std::pow(x, 2.0 * n + 1.0);
    const double d = 1.0 + t;
    s3 += t / (d * d);
  }

  const double s1sq = s1 * s1, s2sq = s2 * s2;
  return 2.0 * s1sq * s1sq - s2sq * s2sq + 3.0 * s3;
}

std::pair<double, double> g_bounds(double x) {
  if (!(x > 0.0 && x < 0.5))
    throw std::domain_error("g_bounds: x must lie in (0, 1/2)");

  const double a = 0.5 + x + x * x * x * x / (1.0 - x);
  const double asq = a * a;
  const double lower = 2.0 * x - asq * asq + 3.0 * x / ((1.0 + x) * (1.0 + x));

  const double om = 1.0 - x * x;
  const double om2 = om * om;
  const double b = 0.5 + x;
  const double bsq = b * b;
  const double upper = 2.0 * x / (om2 * om2) - bsq * bsq + 3.0 * x / om;

  return {lower, upper};
}

QRoot solve_q(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_q: tol must be positive");

  double lo = 13.0 / 1000.0;
  double hi = 15.0 / 1000.0;

  // Certified starting bracket: the elementary bounds already separate the
  // signs at the endpoints, independently of series truncation.
  if (!(g_bounds(lo).second < 0.0) || !(g_bounds(hi).first > 0.0))
    throw std::runtime_error("solve_q: bracket sign certificate failed");

  const int cutoff = kDefaultSeriesCutoff;
  double glo = g(lo, cutoff);
  double ghi = g(hi, cutoff);
  if (!(glo < 0.0 && ghi > 0.0))
    throw std::runtime_error("solve_q: series evaluation does not bracket a root");

  double mid = 0.5 * (lo + hi);
  double gmid = g(mid, cutoff);
  for (int it = 0; it < 200; ++it) {
    if (hi - lo <= tol && std::abs(gmid) <= tol) break;
    if (gmid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    const double next = 0.5 * (lo + hi);
    if (next == lo || next == hi) break;  // double resolution reached
    mid = next;
    gmid = g(mid, cutoff);
  }

  QRoot root;
  root.q = mid;
  root.residual = std::abs(gmid);
  root.bracket = {lo, hi};
  root.series_cutoff = cutoff;
  return root;
}

}  // namespace specwave
