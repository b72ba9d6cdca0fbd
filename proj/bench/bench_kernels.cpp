// Timing comparison of the parallel kernels against their serial references:
// the spectral triple product, the H column scan, and the two spatial schemes
// of the leapfrog integrator.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "specwave/approx.hpp"
#include "specwave/bounds.hpp"
#include "specwave/operators.hpp"
#include "specwave/qroot.hpp"
#include "specwave/rng.hpp"
#include "specwave/timedomain.hpp"
#include "specwave/triple_product.hpp"

using namespace specwave;

namespace {

double time_ms(const std::function<void()>& body, int reps) {
  body();  // warm up
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) body();
  const double total =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return total / reps;
}

SpectralField dense_field(Rng& rng, int max_mode) {
  SpectralField v;
  for (int m = 0; m <= max_mode; ++m)
    for (int n = 0; n <= max_mode; ++n) v.set(m, n, rng.uniform(-1.0, 1.0));
  return v;
}

void row(const char* name, const char* a_label, double a_ms, const char* b_label,
         double b_ms) {
  std::printf("%-26s %10s %9.2f ms %10s %9.2f ms   ratio %5.2f\n", name, a_label, a_ms,
              b_label, b_ms, a_ms / b_ms);
}

}  // namespace

int main() {
  QRoot root = solve_q(1e-15);
  ApproxCoefficients coeffs = build_coeffs(root.q, kDefaultNf);
  OperatorAConstants a = build_A(coeffs);
  FrequencyContext ctx(100);
  Rng rng;

#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
#else
  const int max_threads = 1;
#endif
  std::printf("threads available: %d\n\n", max_threads);

  SpectralField uk = build_uk(ctx, coeffs);
  row("cube of the approximation",
      "reference", time_ms([&] { triple_product_reference(uk, uk, uk); }, 5),
      "fast", time_ms([&] { triple_product(uk, uk, uk); }, 5));

  SpectralField d = dense_field(rng, 10);
  row("dense 11x11 product",
      "reference", time_ms([&] { triple_product_reference(d, d, d); }, 1),
      "fast", time_ms([&] { triple_product(d, d, d); }, 1));

#ifdef _OPENMP
  omp_set_num_threads(1);
#endif
  double scan_serial = time_ms([&] { check_H_norm(ctx, coeffs, a, 12, 30); }, 2);
#ifdef _OPENMP
  omp_set_num_threads(max_threads);
#endif
  double scan_parallel = time_ms([&] { check_H_norm(ctx, coeffs, a, 12, 30); }, 2);
  row("H column scan (depth 12)", "1 thread", scan_serial, "all", scan_parallel);

  GridState start = initial_data(uk, ctx.omega(), 128);
  row("leapfrog period (n_t 5000)",
      "spectral",
      time_ms([&] { integrate_period(start, ctx.omega(), 5000); }, 2),
      "finite diff",
      time_ms([&] { integrate_period(start, ctx.omega(), 5000, SpatialScheme::FiniteDifference); },
              2));

  return 0;
}
