#include "specwave/timedomain.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace specwave {

namespace {

// Dense interior-to-interior Laplacian. Spectral variant diagonalizes in the
// sine basis: D = -(2/N) S diag(w^2) S with S_{jw} = sin(jw pi/N) and
// S S = (N/2) I; finite-difference variant is the centered second difference.
std::vector<double> build_laplacian(int n, SpatialScheme scheme) {
  const int ni = n - 1;  // interior nodes
  std::vector<double> d(static_cast<std::size_t>(ni) * ni, 0.0);
  if (scheme == SpatialScheme::FiniteDifference) {
    const double dx = std::numbers::pi / n;
    const double inv = 1.0 / (dx * dx);
    for (int j = 0; j < ni; ++j) {
      d[static_cast<std::size_t>(j) * ni + j] = -2.0 * inv;
      if (j > 0) d[static_cast<std::size_t>(j) * ni + (j - 1)] = inv;
      if (j + 1 < ni) d[static_cast<std::size_t>(j) * ni + (j + 1)] = inv;
    }
    return d;
  }
  std::vector<double> s(static_cast<std::size_t>(ni) * ni);
  for (int j = 1; j < n; ++j)
    for (int w = 1; w < n; ++w)
      s[static_cast<std::size_t>(j - 1) * ni + (w - 1)] =
          std::sin(static_cast<double>(j) * w * std::numbers::pi / n);
  const double scale = -2.0 / n;
  for (int j = 0; j < ni; ++j)
    for (int i = 0; i < ni; ++i) {
      double acc = 0.0;
      const double* rj = s.data() + static_cast<std::size_t>(j) * ni;
      const double* ri = s.data() + static_cast<std::size_t>(i) * ni;
      for (int w = 0; w < ni; ++w) {
        const double wd = w + 1.0;
        acc += wd * wd * rj[w] * ri[w];
      }
      d[static_cast<std::size_t>(j) * ni + i] = scale * acc;
    }
  return d;
}

// acc_j = (D u)_j - u_j^3 on interior nodes.
void acceleration(const std::vector<double>& lap, const std::vector<double>& u, int n,
                  std::vector<double>* out) {
  const int ni = n - 1;
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ni; ++j) {
    const double* row = lap.data() + static_cast<std::size_t>(j) * ni;
    double acc = 0.0;
    for (int i = 0; i < ni; ++i) acc += row[i] * u[i + 1];
    const double uj = u[j + 1];
    (*out)[j] = acc - uj * uj * uj;
  }
}

}  // namespace

GridState initial_data(const SpectralField& u, double omega, int n_x) {
  if (n_x < 16) throw std::invalid_argument("initial_data: N_x must be >= 16");
  GridState state;
  state.n_x = n_x;
  state.time = 0.0;
  state.positions.assign(n_x + 1, 0.0);
  state.velocities.assign(n_x + 1, 0.0);
  for (int j = 1; j < n_x; ++j) {
    const double xj = static_cast<double>(j) * std::numbers::pi / n_x;
    double v = 0.0;
    for (const auto& [mode, c] : u.coeffs())
      v += c * (2.0 * mode.m + 1.0) * std::sin((2.0 * mode.n + 1.0) * xj);
    state.velocities[j] = omega * v;
  }
  return state;
}

double energy(const GridState& state) {
  const int n = state.n_x;
  if (n < 1 || state.positions.size() != static_cast<std::size_t>(n) + 1 ||
      state.velocities.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("energy: inconsistent grid state");
  const double dx = std::numbers::pi / n;

  // Sine coefficients of the position slice, then u_x on the full grid.
  const int ni = n - 1;
  std::vector<double> uhat(ni, 0.0);
  for (int w = 1; w < n; ++w) {
    double acc = 0.0;
    for (int j = 1; j < n; ++j)
      acc += state.positions[j] * std::sin(static_cast<double>(w) * j * std::numbers::pi / n);
    uhat[w - 1] = 2.0 / n * acc;
  }
  double total = 0.0;
  for (int j = 0; j <= n; ++j) {
    double ux = 0.0;
    for (int w = 1; w < n; ++w)
      ux += uhat[w - 1] * w * std::cos(static_cast<double>(w) * j * std::numbers::pi / n);
    const double ut = state.velocities[j];
    const double uu = state.positions[j];
    const double density = 0.5 * ut * ut + 0.5 * ux * ux + 0.25 * uu * uu * uu * uu;
    total += (j == 0 || j == n) ? 0.5 * density : density;
  }
  return total * dx;
}

IntegrationResult integrate_period(const GridState& state, double omega, int n_t,
                                   SpatialScheme scheme) {
  if (n_t < 1000) throw std::invalid_argument("integrate_period: N_t must be >= 1000");
  if (!(omega > 0.0)) throw std::invalid_argument("integrate_period: omega must be positive");
  const int n = state.n_x;
  if (n < 2 || state.positions.size() != static_cast<std::size_t>(n) + 1 ||
      state.velocities.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("integrate_period: inconsistent grid state");

  const double period = 2.0 * std::numbers::pi / omega;
  const double dt = period / n_t;
  const double dx = std::numbers::pi / n;
  if (dt > 0.5 * dx)
    throw std::invalid_argument("integrate_period: CFL violation (dt > 0.5 dx)");

  const std::vector<double> lap = build_laplacian(n, scheme);
  std::vector<double> u = state.positions;
  std::vector<double> v = state.velocities;
  u[0] = u[n] = 0.0;
  const int ni = n - 1;
  std::vector<double> a0(ni), a1(ni);
  acceleration(lap, u, n, &a0);

  const double e0 = energy(state);
  const double e_ref = std::abs(e0) > 0.0 ? std::abs(e0) : 1.0;
  double drift = 0.0;
  const int sample_stride = n_t >= 128 ? n_t / 128 : 1;

  GridState cur = state;
  for (int step = 0; step < n_t; ++step) {
    for (int j = 0; j < ni; ++j)
      u[j + 1] += dt * v[j + 1] + 0.5 * dt * dt * a0[j];
    acceleration(lap, u, n, &a1);
    for (int j = 0; j < ni; ++j) v[j + 1] += 0.5 * dt * (a0[j] + a1[j]);
    a0.swap(a1);
    if ((step + 1) % sample_stride == 0 || step + 1 == n_t) {
      cur.positions = u;
      cur.velocities = v;
      cur.time = state.time + (step + 1.0) * dt;
      const double dev = std::abs(energy(cur) - e0) / e_ref;
      if (dev > drift) drift = dev;
    }
  }

  IntegrationResult result;
  result.final_state.positions = std::move(u);
  result.final_state.velocities = std::move(v);
  result.final_state.time = state.time + period;
  result.final_state.n_x = n;

  double vmax = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double av = std::abs(state.velocities[j]);
    if (av > vmax) vmax = av;
  }
  if (vmax > 0.0) {
    double worst = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double gap = std::abs(result.final_state.positions[j] - state.positions[j]) +
                         std::abs(result.final_state.velocities[j] - state.velocities[j]);
      if (gap > worst) worst = gap;
    }
    result.return_error = worst / vmax;
  }
  result.energy_drift = drift;
  return result;
}

}  // namespace specwave
