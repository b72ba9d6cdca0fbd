#pragma once

// Independent cross-validation in the time domain: integrate
//
//   u_tt - u_xx + u^3 = 0,   u(t,0) = u(t,pi) = 0,
//
// from the spectral solution's initial slice and measure how well the state
// returns after one period 2 pi / Omega.
//
// Every basis mode sin((2m+1) Omega t) sin((2n+1) x) vanishes at t = 0, so
// the initial position is identically zero and the solution is encoded
// purely in the initial velocity.

#include <utility>
#include <vector>

#include "specwave/field.hpp"

namespace specwave {

struct GridState {
  std::vector<double> positions;   // u at x_j = j pi / N_x, j = 0..N_x
  std::vector<double> velocities;  // du/dt at the same nodes
  double time = 0.0;
  int n_x = 0;
};

enum class SpatialScheme {
  Spectral,          // dense sine-transform Laplacian, exact for on-grid modes
  FiniteDifference,  // second-order centered stencil, independence fallback
};

// Samples velocities[j] = Omega * sum c (2m+1) sin((2n+1) x_j) (the exact
// t-derivative of the basis expansion at t = 0); positions are zero.
// Throws std::invalid_argument for N_x < 16.
GridState initial_data(const SpectralField& u, double omega, int n_x);

struct IntegrationResult {
  GridState final_state;
  // max_j (|pos gap| + |vel gap|) / max_j |initial velocity|; 0 for the zero state.
  double return_error = 0.0;
  // max relative deviation of the conserved energy over sampled steps.
  double energy_drift = 0.0;
};

// Velocity-Verlet over t in [0, 2 pi / omega] with n_t steps. The CFL guard
// dt <= 0.5 dx rejects unstable configurations (std::invalid_argument), as
// does n_t < 1000.
IntegrationResult integrate_period(const GridState& state, double omega, int n_t,
                                   SpatialScheme scheme = SpatialScheme::Spectral);

// Trapezoidal quadrature of u_t^2/2 + u_x^2/2 + u^4/4 with u_x evaluated by
// spectral differentiation of the position slice.
double energy(const GridState& state);

inline constexpr int kDefaultNx = 256;
inline constexpr int kDefaultNt = 100000;

}  // namespace specwave
